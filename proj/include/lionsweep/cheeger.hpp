#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"
#include "lionsweep/rational.hpp"
#include "lionsweep/subsets.hpp"

namespace lionsweep {

struct CheegerResult {
  Rational value;
  VertexSet witness;
};

// |dS| / min(|S|, |V \ S|) for a proper nonempty subset.
inline Rational isoperimetric_ratio(const Graph& g, const VertexSet& s) {
  const std::size_t size = s.size();
  const std::size_t rest = g.vertex_count() - size;
  if (size == 0 || rest == 0) throw Error(ErrorKind::invalid_set, "ratio needs a proper nonempty subset");
  return {static_cast<std::int64_t>(boundary(g, s).size()), static_cast<std::int64_t>(std::min(size, rest))};
}

// Vertex-isoperimetric Cheeger constant by exhaustive enumeration. Each
// complementary pair {S, V \ S} is visited once (S never contains the last
// vertex) and both of its ratios are scored. Ties go to the lexicographically
// smallest witness.
inline CheegerResult cheeger_constant(const Graph& g, std::size_t limit = kDefaultEnumerationLimit,
                                      unsigned jobs = 1) {
  const std::size_t nv = g.vertex_count();
  if (nv < 2) throw Error(ErrorKind::invalid_parameter, "Cheeger constant needs at least 2 vertices");
  check_enumeration_limit(nv, limit);
  NeighborMasks nbr(g);
  const Mask all = nbr.all();

  struct Best {
    std::int64_t num = 1;
    std::int64_t den = 0;  // den == 0: nothing seen yet
    Mask witness = 0;
  };
  auto better = [](std::int64_t num, std::int64_t den, Mask w, const Best& b) {
    if (b.den == 0) return true;
    auto lhs = num * b.den;
    auto rhs = b.num * den;
    return lhs < rhs || (lhs == rhs && lex_less(w, b.witness));
  };
  auto consider = [&](Best& best, Mask s) {
    auto size = static_cast<std::int64_t>(std::popcount(s));
    auto den = std::min(size, static_cast<std::int64_t>(nv) - size);
    auto num = static_cast<std::int64_t>(std::popcount(nbr.boundary(s)));
    if (better(num, den, s, best)) best = {num, den, s};
  };
  auto visit = [&](Best& best, Mask s) {
    if (s == 0) return;
    consider(best, s);
    consider(best, all & ~s);
  };
  auto merge = [&](Best& into, const Best& part) {
    if (part.den != 0 && better(part.num, part.den, part.witness, into)) into = part;
  };
  Best best = scan_subsets(std::uint64_t{1} << (nv - 1), jobs, Best{}, visit, merge);
  return {Rational(best.num, best.den), VertexSet::from_mask(nv, best.witness)};
}

// Largest k excluded by the polite-lion bound k <= (1/2) floor(|V|/2) g.
inline std::int64_t polite_lion_bound(const Rational& g, std::size_t vertex_count) {
  Rational bound = Rational(static_cast<std::int64_t>(vertex_count / 2), 2) * g;
  return bound.floor();
}

// Largest k excluded by the general bound k <= g |V| / (4 + g).
inline std::int64_t lion_bound(const Rational& g, std::size_t vertex_count) {
  Rational bound = g * Rational(static_cast<std::int64_t>(vertex_count)) / (Rational(4) + g);
  return bound.floor();
}

}  // namespace lionsweep
