#include <gtest/gtest.h>

#include <sstream>

#include "lionsweep/isoperimetry.hpp"
#include "lionsweep/random.hpp"
#include "oracles.hpp"

using namespace lionsweep;

namespace {

std::set<std::pair<int, int>> cells_of(const Graph& g, const VertexSet& s) {
  std::set<std::pair<int, int>> out;
  for (auto v : s.members()) out.insert({g.coord(v).row, g.coord(v).col});
  return out;
}

}  // namespace

TEST(Triangular, Values) {
  EXPECT_EQ(triangular(0), 0u);
  EXPECT_EQ(triangular(5), 15u);
  EXPECT_EQ(triangular(6), 21u);
  for (std::uint64_t x = 0; x < 2000; ++x) {
    auto r = isqrt(x);
    EXPECT_LE(r * r, x);
    EXPECT_GT((r + 1) * (r + 1), x);
  }
}

TEST(FallDown, Examples) {
  auto g = build_square_grid(3);
  EXPECT_EQ(fall_down(3, g.all_vertices()), g.all_vertices());
  EXPECT_EQ(fall_down(3, VertexSet(9, {g.at(2, 2)})), VertexSet(9, {g.at(1, 1)}));
  VertexSet col3(9, {g.at(1, 3), g.at(2, 3), g.at(3, 3)});
  VertexSet col1(9, {g.at(1, 1), g.at(2, 1), g.at(3, 1)});
  EXPECT_EQ(fall_down(3, col3), col1);
  EXPECT_THROW(fall_down(3, VertexSet(4)), Error);
  EXPECT_THROW(fall_down(0, VertexSet(0)), Error);
}

TEST(FallDown, MatchesCoordinateOracleOn3x3) {
  auto g = build_square_grid(3);
  for (Mask m = 0; m < 512; ++m) {
    auto s = VertexSet::from_mask(9, m);
    auto t = fall_down(3, s);
    EXPECT_EQ(t.size(), s.size());
    EXPECT_EQ(cells_of(g, t), oracle::fall_down(3, cells_of(g, s)));
  }
}

TEST(FallDown, PreservesSizeOnLargerGrids) {
  Rng rng(8);
  std::uniform_int_distribution<Mask> pick;
  for (int n = 5; n <= 8; ++n) {
    auto g = build_square_grid(n);
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    for (int trial = 0; trial < 200; ++trial) {
      Mask m = pick(rng);
      if (cells < 64) m &= (Mask{1} << cells) - 1;
      auto s = VertexSet::from_mask(cells, m);
      auto t = fall_down(n, s);
      EXPECT_EQ(t.size(), s.size());
      EXPECT_EQ(cells_of(g, t), oracle::fall_down(n, cells_of(g, s)));
      auto [sq_s, tri_s] = boundary_in_both(n, s);
      auto [sq_t, tri_t] = boundary_in_both(n, t);
      EXPECT_LE(sq_t.size(), sq_s.size());
      EXPECT_LE(tri_t.size(), tri_s.size());
      EXPECT_EQ(sq_t, tri_t);
    }
  }
}

TEST(BoundaryInBoth, Examples) {
  auto e = boundary_in_both(3, VertexSet(9));
  EXPECT_TRUE(e.square.empty());
  EXPECT_TRUE(e.tri.empty());
  auto f = boundary_in_both(3, VertexSet::full(9));
  EXPECT_TRUE(f.square.empty());
  EXPECT_TRUE(f.tri.empty());
  for (Mask m = 0; m < 512; ++m) {
    auto b = boundary_in_both(3, VertexSet::from_mask(9, m));
    EXPECT_TRUE(b.square.is_subset_of(b.tri));
  }
}

TEST(FalldownCheck, DownLeftHoldsExhaustively) {
  for (int n : {3, 4}) {
    auto c = falldown_check(n);
    EXPECT_EQ(c.subsets, Mask{1} << (n * n));
    EXPECT_EQ(c.violations(), 0u);
  }
}

TEST(FalldownCheck, ParallelMatchesSerial) {
  auto a = falldown_check(4, FallDirection::down_right, kDefaultEnumerationLimit, 1);
  auto b = falldown_check(4, FallDirection::down_right, kDefaultEnumerationLimit, 4);
  EXPECT_EQ(a.boundary_mismatches, b.boundary_mismatches);
  EXPECT_EQ(a.square_increases, b.square_increases);
  EXPECT_EQ(a.tri_increases, b.tri_increases);
  ASSERT_EQ(a.mismatch_examples.size(), b.mismatch_examples.size());
  for (const auto& [key, w] : a.mismatch_examples) EXPECT_EQ(b.mismatch_examples.at(key).original, w.original);
}

TEST(FalldownCounterexample, Directions) {
  EXPECT_FALSE(falldown_counterexample_search(3, FallDirection::down_left).has_value());
  EXPECT_FALSE(falldown_counterexample_search(1, FallDirection::down_right).has_value());
  auto w = falldown_counterexample_search(4, FallDirection::down_right);
  ASSERT_TRUE(w.has_value());
  auto both = boundary_in_both(4, w->image);
  EXPECT_NE(both.square, both.tri);
  EXPECT_EQ(both.square.size(), w->square_boundary);
  EXPECT_EQ(both.tri.size(), w->tri_boundary);

  auto check = falldown_check(4, FallDirection::down_right);
  ASSERT_TRUE(check.mismatch_examples.count({3, 4}));
  auto ex = check.mismatch_examples.at({3, 4});
  EXPECT_EQ(fall_down(4, ex.original, FallDirection::down_right), ex.image);
  auto b = boundary_in_both(4, ex.image);
  EXPECT_EQ(b.square.size(), 3u);
  EXPECT_EQ(b.tri.size(), 4u);

  try {
    falldown_counterexample_search(5, FallDirection::down_left);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
  }
}

TEST(IsoProfile, MatchesOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 10);
    auto g = random_connected_graph(nv(rng), 0.3, rng);
    auto prof = iso_profile(g, 0, g.vertex_count());
    auto expected = oracle::min_boundary_by_size(oracle::adjacency(g));
    ASSERT_EQ(prof.entries.size(), g.vertex_count() + 1);
    for (const auto& e : prof.entries) {
      EXPECT_EQ(e.min_boundary, expected[e.size]);
      EXPECT_EQ(e.witness.size(), e.size);
      EXPECT_EQ(boundary(g, e.witness).size(), e.min_boundary);
    }
  }
}

TEST(IsoProfile, SingletonsAndLimits) {
  auto g = build_tri_lattice(3, 3);
  EXPECT_EQ(iso_profile(g, 1, 1).at_size(1).min_boundary, 1u);
  EXPECT_THROW((void)iso_profile(g, 1, 1).at_size(2), Error);
  try {
    iso_profile(build_square_grid(5), 0, 25);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
  }
}

TEST(IsoProfile, MiddleSizesNeedNBoundaryVertices) {
  for (int n : {3, 4}) {
    auto g = build_tri_lattice(n, n);
    // n^2/2 - n/2 < |S| < n^2/2 + n/2, i.e. n(n-1) < 2|S| < n(n+1).
    for (std::size_t s = 0; s <= g.vertex_count(); ++s) {
      auto twice = 2 * static_cast<int>(s);
      if (twice <= n * (n - 1) || twice >= n * (n + 1)) continue;
      EXPECT_GE(iso_profile(g, s, s).at_size(s).min_boundary, static_cast<std::size_t>(n)) << n << " " << s;
    }
  }
  EXPECT_GE(iso_profile(build_tri_lattice(3, 3), 4, 5).at_size(4).min_boundary, 3u);
}

TEST(Packing, ThirteenVertexExamples) {
  auto p6 = build_triangle(6);
  auto row = packing(6, PackingKind::row, 13);
  EXPECT_EQ(row.size(), 13u);
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(row.contains(p6.at(6, i)));
  for (int i = 1; i <= 5; ++i) EXPECT_TRUE(row.contains(p6.at(5, i)));
  EXPECT_TRUE(row.contains(p6.at(4, 1)));
  EXPECT_TRUE(row.contains(p6.at(4, 2)));

  auto ice = packing(6, PackingKind::ice_cream, 13);
  EXPECT_EQ(ice.size(), 13u);
  for (auto v : ice.members()) {
    auto c = p6.coord(v);
    int t = 6 - (c.row - c.col);
    EXPECT_LE(t, 5);
    if (t == 5) {
      EXPECT_GE(c.row, 4);  // the 3 lowest of D_5
    }
  }
  EXPECT_TRUE(packing(6, PackingKind::row, 0).empty());
  EXPECT_TRUE(packing(6, PackingKind::ice_cream, 0).empty());
  EXPECT_THROW(packing(6, PackingKind::row, 22), Error);
}

TEST(Packing, BoundarySequences) {
  EXPECT_EQ(packing_boundaries(6, PackingKind::row),
            (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 5, 5, 5, 5, 4, 4, 4, 3, 3, 2, 0}));
  EXPECT_EQ(packing_boundaries(6, PackingKind::ice_cream),
            (std::vector<std::size_t>{0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 5, 4, 3, 2, 0}));
}

TEST(Packing, BoundaryMonotoneRanges) {
  for (int n = 1; n <= 6; ++n) {
    auto t = triangular(static_cast<std::uint64_t>(n));
    auto row = packing_boundaries(n, PackingKind::row);
    for (std::size_t s = static_cast<std::size_t>(n); s < t; ++s) EXPECT_GE(row[s], row[s + 1]) << n << " " << s;
    auto ice = packing_boundaries(n, PackingKind::ice_cream);
    auto last_empty = triangular(static_cast<std::uint64_t>(n - 1));
    for (std::size_t s = 0; s < last_empty; ++s) EXPECT_LE(ice[s], ice[s + 1]) << n << " " << s;
  }
}

TEST(Conjecture, ThresholdsAndWindow) {
  auto r4 = conjecture_report(4);
  EXPECT_EQ(r4.lion_threshold, 1u);
  EXPECT_EQ(r4.boundary_threshold, 2u);
  auto r5 = conjecture_report(5);
  EXPECT_EQ(r5.window_size, 6u);
  EXPECT_EQ(r5.rows.size(), 16u);
  auto r2 = conjecture_report(2);
  EXPECT_EQ(r2.rows.size(), 4u);
  for (int n = 1; n <= 5; ++n) {
    auto rep = conjecture_report(n);
    auto p = build_triangle(n);
    auto expected = oracle::min_boundary_by_size(oracle::adjacency(p));
    for (const auto& r : rep.rows) EXPECT_EQ(r.min_boundary, expected[r.size]);
  }
  try {
    conjecture_report(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource_limit);
  }
}

TEST(Conjecture, CsvLayout) {
  std::ostringstream out;
  write_conjecture_csv(out, conjecture_report(2));
  EXPECT_EQ(out.str(),
            "size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds\n"
            "0,0,0,0,true\n1,1,1,1,true\n2,2,2,2,true\n3,0,0,0,true\n");
}
