#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"
#include "lionsweep/subsets.hpp"

namespace lionsweep {

inline std::uint64_t triangular(std::uint64_t n) { return n * (n + 1) / 2; }

inline std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 31; bit != 0; bit >>= 1) {
    std::uint64_t t = r | bit;
    if (t * t <= x) r = t;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fall-down transformation on the n x n vertex grid shared by the square grid
// S_n and the triangular lattice R_n (row 1 at the bottom, diagonals joining
// (r+1,c) to (r,c+1)).

enum class FallDirection { down_left, down_right };

inline std::string_view to_string(FallDirection d) {
  return d == FallDirection::down_left ? "down-left" : "down-right";
}

inline Mask fall_down_mask(int n, Mask s, FallDirection dir = FallDirection::down_left) {
  // Phase 1: each column keeps its count, packed against row 1.
  Mask fallen = 0;
  for (int c = 1; c <= n; ++c) {
    int count = 0;
    for (int r = 1; r <= n; ++r) count += static_cast<int>((s >> grid_index(r, c, n)) & 1U);
    for (int r = 1; r <= count; ++r) fallen |= Mask{1} << grid_index(r, c, n);
  }
  // Phase 2: each row keeps its count, packed against one side.
  Mask out = 0;
  for (int r = 1; r <= n; ++r) {
    int count = 0;
    for (int c = 1; c <= n; ++c) count += static_cast<int>((fallen >> grid_index(r, c, n)) & 1U);
    for (int i = 0; i < count; ++i) {
      int c = dir == FallDirection::down_left ? 1 + i : n - i;
      out |= Mask{1} << grid_index(r, c, n);
    }
  }
  return out;
}

inline void check_grid_set(int n, const VertexSet& s) {
  if (n < 1 || n > 8) throw Error(ErrorKind::invalid_parameter, "fall-down grids need 1 <= n <= 8");
  if (s.universe() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::invalid_set, "set is not over the " + std::to_string(n) + "x" + std::to_string(n) + " grid");
  }
}

inline VertexSet fall_down(int n, const VertexSet& s, FallDirection dir = FallDirection::down_left) {
  check_grid_set(n, s);
  return VertexSet::from_mask(s.universe(), fall_down_mask(n, s.to_mask(), dir));
}

struct BoundaryPair {
  VertexSet square;  // boundary in S_n
  VertexSet tri;     // boundary in R_n
};

inline BoundaryPair boundary_in_both(int n, const VertexSet& s) {
  check_grid_set(n, s);
  return {boundary(build_square_grid(n), s), boundary(build_tri_lattice(n, n), s)};
}

struct FalldownWitness {
  VertexSet original;
  VertexSet image;
  std::size_t square_boundary = 0;
  std::size_t tri_boundary = 0;
};

// Exhaustive scan of every subset of the n x n grid.
struct FalldownCheck {
  int n = 0;
  FallDirection direction = FallDirection::down_left;
  std::uint64_t subsets = 0;
  std::uint64_t square_increases = 0;  // |dT(S)| > |dS| in S_n
  std::uint64_t tri_increases = 0;     // |dT(S)| > |dS| in R_n
  std::uint64_t boundary_mismatches = 0;
  std::uint64_t size_changes = 0;
  // First image (in subset order) with differing boundaries, keyed by the
  // pair (|boundary in S_n|, |boundary in R_n|).
  std::map<std::pair<std::size_t, std::size_t>, FalldownWitness> mismatch_examples;

  [[nodiscard]] std::uint64_t violations() const {
    return square_increases + tri_increases + boundary_mismatches + size_changes;
  }
};

inline FalldownCheck falldown_check(int n, FallDirection dir = FallDirection::down_left,
                                    std::size_t limit = kDefaultEnumerationLimit, unsigned jobs = 1) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "grid side must be positive");
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  check_enumeration_limit(cells, limit);
  NeighborMasks square(build_square_grid(n));
  NeighborMasks tri(build_tri_lattice(n, n));

  struct Acc {
    std::uint64_t subsets = 0, sq_up = 0, tri_up = 0, mismatches = 0, size_changes = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Mask, Mask>> examples;
  };
  auto visit = [&](Acc& acc, Mask s) {
    Mask t = fall_down_mask(n, s, dir);
    ++acc.subsets;
    if (std::popcount(t) != std::popcount(s)) ++acc.size_changes;
    Mask bs_s = square.boundary(s);
    Mask bt_s = square.boundary(t);
    Mask bs_r = tri.boundary(s);
    Mask bt_r = tri.boundary(t);
    if (std::popcount(bt_s) > std::popcount(bs_s)) ++acc.sq_up;
    if (std::popcount(bt_r) > std::popcount(bs_r)) ++acc.tri_up;
    if (bt_s != bt_r) {
      ++acc.mismatches;
      auto key = std::make_pair(static_cast<std::size_t>(std::popcount(bt_s)), static_cast<std::size_t>(std::popcount(bt_r)));
      acc.examples.try_emplace(key, s, t);
    }
  };
  auto merge = [](Acc& into, const Acc& part) {
    into.subsets += part.subsets;
    into.sq_up += part.sq_up;
    into.tri_up += part.tri_up;
    into.mismatches += part.mismatches;
    into.size_changes += part.size_changes;
    for (const auto& [k, v] : part.examples) into.examples.try_emplace(k, v);
  };
  Acc acc = scan_subsets(std::uint64_t{1} << cells, jobs, Acc{}, visit, merge);

  FalldownCheck out;
  out.n = n;
  out.direction = dir;
  out.subsets = acc.subsets;
  out.square_increases = acc.sq_up;
  out.tri_increases = acc.tri_up;
  out.boundary_mismatches = acc.mismatches;
  out.size_changes = acc.size_changes;
  for (const auto& [key, pair] : acc.examples) {
    out.mismatch_examples.emplace(key, FalldownWitness{VertexSet::from_mask(cells, pair.first),
                                                       VertexSet::from_mask(cells, pair.second), key.first,
                                                       key.second});
  }
  return out;
}

// First subset (in enumeration order) whose image under the chosen
// fall-down has different boundary sets in S_n and R_n.
inline std::optional<FalldownWitness> falldown_counterexample_search(int n, FallDirection dir,
                                                                     std::size_t limit = 16) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "grid side must be positive");
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  check_enumeration_limit(cells, limit);
  NeighborMasks square(build_square_grid(n));
  NeighborMasks tri(build_tri_lattice(n, n));
  for (Mask s = 0; s < (Mask{1} << cells); ++s) {
    Mask t = fall_down_mask(n, s, dir);
    Mask bs = square.boundary(t);
    Mask br = tri.boundary(t);
    if (bs != br) {
      return FalldownWitness{VertexSet::from_mask(cells, s), VertexSet::from_mask(cells, t),
                             static_cast<std::size_t>(std::popcount(bs)), static_cast<std::size_t>(std::popcount(br))};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive vertex-isoperimetric profile.

struct IsoEntry {
  std::size_t size = 0;
  std::size_t min_boundary = 0;
  VertexSet witness;
};

struct IsoProfile {
  std::vector<IsoEntry> entries;  // ascending size

  [[nodiscard]] const IsoEntry& at_size(std::size_t s) const {
    for (const auto& e : entries) {
      if (e.size == s) return e;
    }
    throw Error(ErrorKind::invalid_parameter, "size " + std::to_string(s) + " not in profile");
  }
};

inline IsoProfile iso_profile(const Graph& g, std::size_t size_lo, std::size_t size_hi,
                              std::size_t limit = kDefaultEnumerationLimit, unsigned jobs = 1) {
  const std::size_t nv = g.vertex_count();
  check_enumeration_limit(nv, limit);
  size_hi = std::min(size_hi, nv);
  if (size_lo > size_hi) return {};
  NeighborMasks nbr(g);

  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  struct Best {
    std::size_t boundary = kUnset;
    Mask witness = 0;
  };
  using Acc = std::vector<Best>;
  auto visit = [&](Acc& acc, Mask s) {
    auto sz = static_cast<std::size_t>(std::popcount(s));
    if (sz < size_lo || sz > size_hi) return;
    auto b = static_cast<std::size_t>(std::popcount(nbr.boundary(s)));
    auto& best = acc[sz];
    if (b < best.boundary) best = {b, s};
  };
  auto merge = [](Acc& into, const Acc& part) {
    for (std::size_t i = 0; i < into.size(); ++i) {
      if (part[i].boundary < into[i].boundary) into[i] = part[i];
    }
  };
  Acc acc = scan_subsets(std::uint64_t{1} << nv, jobs, Acc(nv + 1), visit, merge);

  IsoProfile out;
  for (std::size_t s = size_lo; s <= size_hi; ++s) {
    out.entries.push_back({s, acc[s].boundary, VertexSet::from_mask(nv, acc[s].witness)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Packings of the triangular grid P_n (row 1 apex, row n base).

enum class PackingKind { row, ice_cream };

inline std::string_view to_string(PackingKind k) { return k == PackingKind::row ? "row" : "ice_cream"; }

// Cells of P_n in the order the packing fills them.
inline std::vector<GridCoord> packing_order(int n, PackingKind kind) {
  std::vector<GridCoord> order;
  if (kind == PackingKind::row) {
    for (int r = n; r >= 1; --r) {
      for (int i = 1; i <= r; ++i) order.push_back({r, i});
    }
  } else {
    // Diagonal t holds (r, i) with r - i = n - t; t = 1 is the lower-left
    // corner. Each diagonal fills from its lowest cell upwards.
    for (int t = 1; t <= n; ++t) {
      for (int r = n; r > n - t; --r) order.push_back({r, r - (n - t)});
    }
  }
  return order;
}

inline VertexSet packing(int n, PackingKind kind, std::size_t count) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "triangle side must be positive");
  const std::size_t total = triangular(static_cast<std::uint64_t>(n));
  if (count > total) {
    throw Error(ErrorKind::invalid_parameter,
                "packing of " + std::to_string(count) + " vertices exceeds T_n = " + std::to_string(total));
  }
  VertexSet s(total);
  auto order = packing_order(n, kind);
  for (std::size_t i = 0; i < count; ++i) s.insert(static_cast<Vertex>(triangle_index(order[i].row, order[i].col)));
  return s;
}

// Boundary size of the packing for every count 0..T_n.
inline std::vector<std::size_t> packing_boundaries(int n, PackingKind kind) {
  Graph p = build_triangle(n);
  auto order = packing_order(n, kind);
  std::vector<std::size_t> out;
  VertexSet s(p.vertex_count());
  out.push_back(0);
  for (const auto& c : order) {
    s.insert(static_cast<Vertex>(triangle_index(c.row, c.col)));
    out.push_back(boundary(p, s).size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Packing conjecture experiment on P_n.

struct ConjectureRow {
  std::size_t size = 0;
  std::size_t min_boundary = 0;
  std::size_t row_boundary = 0;
  std::size_t icecream_boundary = 0;
  // Exhaustive minimum reaches the better of the two packings.
  bool holds = true;
};

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureRow> rows;
  std::uint64_t boundary_threshold = 0;  // floor(n / sqrt 2)
  std::uint64_t lion_threshold = 0;      // floor(n / (2 sqrt 2))
  std::uint64_t window_size = 0;         // T_{floor(sqrt T_n)}
  std::size_t window_min_boundary = 0;
  bool window_meets_threshold = true;

  [[nodiscard]] std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& r : rows) v += r.holds ? 0 : 1;
    return v;
  }
};

// floor(n / sqrt(d)) computed exactly as the largest j with d*j^2 <= n^2.
inline std::uint64_t floor_div_sqrt(std::uint64_t n, std::uint64_t d) { return isqrt(n * n / d); }

inline ConjectureReport conjecture_report(int n, std::size_t limit = kDefaultEnumerationLimit, unsigned jobs = 1) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "triangle side must be positive");
  const auto nu = static_cast<std::uint64_t>(n);
  const std::size_t total = triangular(nu);
  check_enumeration_limit(total, limit);

  Graph p = build_triangle(n);
  IsoProfile profile = iso_profile(p, 0, total, limit, jobs);
  auto rows = packing_boundaries(n, PackingKind::row);
  auto ice = packing_boundaries(n, PackingKind::ice_cream);

  ConjectureReport rep;
  rep.n = n;
  for (std::size_t s = 0; s <= total; ++s) {
    ConjectureRow row{s, profile.entries[s].min_boundary, rows[s], ice[s], true};
    row.holds = row.min_boundary >= std::min(row.row_boundary, row.icecream_boundary);
    rep.rows.push_back(row);
  }
  rep.boundary_threshold = floor_div_sqrt(nu, 2);
  rep.lion_threshold = floor_div_sqrt(nu, 8);
  rep.window_size = triangular(isqrt(total));
  rep.window_min_boundary = rep.rows[rep.window_size].min_boundary;
  rep.window_meets_threshold = rep.window_min_boundary >= rep.boundary_threshold;
  return rep;
}

inline void write_conjecture_csv(std::ostream& out, const ConjectureReport& rep) {
  out << "size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds\n";
  for (const auto& r : rep.rows) {
    out << r.size << ',' << r.min_boundary << ',' << r.row_boundary << ',' << r.icecream_boundary << ','
        << (r.holds ? "true" : "false") << '\n';
  }
}

}  // namespace lionsweep
