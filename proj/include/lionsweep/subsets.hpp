#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"

namespace lionsweep {

using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

// Adjacency as one bitmask per vertex, for graphs of at most 64 vertices.
class NeighborMasks {
 public:
  explicit NeighborMasks(const Graph& g) : masks_(g.vertex_count(), 0) {
    if (g.vertex_count() > 64) throw Error(ErrorKind::resource_limit, "bitmask form needs at most 64 vertices");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex u : g.neighbors(v)) masks_[v] |= Mask{1} << u;
    }
    all_ = g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
  }

  [[nodiscard]] Mask of(Vertex v) const { return masks_[v]; }
  [[nodiscard]] Mask all() const noexcept { return all_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }

  // Vertices adjacent to at least one member of s.
  [[nodiscard]] Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (; s != 0; s &= s - 1) out |= masks_[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }

  [[nodiscard]] Mask boundary(Mask s) const { return s & neighborhood(all_ & ~s); }

 private:
  std::vector<Mask> masks_;
  Mask all_ = 0;
};

inline void check_enumeration_limit(std::size_t vertex_count, std::size_t limit) {
  if (vertex_count > limit || vertex_count > 40) {
    throw Error(ErrorKind::resource_limit, "subset enumeration over " + std::to_string(vertex_count) +
                                               " vertices exceeds the limit of " + std::to_string(limit));
  }
}

// Lexicographic order of two subsets viewed as sorted vertex lists.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask low = (a ^ b) & -(a ^ b);
  Mask above = ~((low << 1) - 1);
  if ((a & low) != 0) return (b & above) != 0;  // a continues with the smaller element unless b ends
  return (a & above) == 0;
}

// Scans masks [0, count) in `jobs` contiguous chunks. Each chunk folds into its
// own accumulator, and the accumulators are merged in chunk order, so the
// result does not depend on the number of jobs.
template <class Acc, class Visit, class Merge>
Acc scan_subsets(std::uint64_t count, unsigned jobs, const Acc& init, Visit visit, Merge merge) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 4096) {
    Acc acc = init;
    for (std::uint64_t m = 0; m < count; ++m) visit(acc, m);
    return acc;
  }
  std::vector<std::future<Acc>> parts;
  std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (std::uint64_t lo = 0; lo < count; lo += chunk) {
    std::uint64_t hi = std::min(count, lo + chunk);
    parts.push_back(std::async(std::launch::async, [lo, hi, &init, &visit] {
      Acc acc = init;
      for (std::uint64_t m = lo; m < hi; ++m) visit(acc, m);
      return acc;
    }));
  }
  Acc acc = init;
  for (auto& p : parts) merge(acc, p.get());
  return acc;
}

}  // namespace lionsweep
