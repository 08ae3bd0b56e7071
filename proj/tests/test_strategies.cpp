#include <gtest/gtest.h>

#include "lionsweep/dynamics.hpp"
#include "lionsweep/random.hpp"
#include "lionsweep/search.hpp"
#include "lionsweep/strategies.hpp"
#include "oracles.hpp"

using namespace lionsweep;

namespace {

LionPositions column_one(const Graph& g, int n) {
  LionPositions out;
  for (int r = 1; r <= n; ++r) out.push_back(g.at(r, 1));
  return out;
}

}  // namespace

TEST(RowSweep, PathIsWalked) {
  auto g = build_tri_lattice(1, 4);
  auto plan = row_sweep_moves(1, 4, {g.at(1, 1)});
  EXPECT_EQ(plan.formation_steps, 0u);
  ASSERT_EQ(plan.moves.size(), 3u);
  for (const auto& mv : plan.moves) EXPECT_EQ(mv.movers(), 1u);
  auto tr = run(g, MotionModel::free, plan.starts, plan.moves);
  EXPECT_TRUE(is_swept(tr).has_value());
}

TEST(RowSweep, FromColumnIsMonotoneAndPolite) {
  auto g = build_tri_lattice(3, 3);
  auto plan = row_sweep_moves(3, 3, column_one(g, 3));
  EXPECT_EQ(plan.formation_steps, 0u);
  EXPECT_EQ(plan.moves.size(), 6u);
  auto tr = run(g, MotionModel::polite, plan.starts, plan.moves);
  EXPECT_EQ(is_swept(tr), std::optional<std::size_t>(6));
  EXPECT_TRUE(is_monotone(tr));
  EXPECT_TRUE(verify_lemma_bounds(g, tr, 3).ok());
  // Row 1 moves first.
  EXPECT_EQ(plan.moves[0].actions[0], std::optional<Vertex>(g.at(1, 2)));
}

TEST(RowSweep, ArbitraryStartsSweep) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = build_tri_lattice(2, 5);
    auto starts = random_positions(g, 2, rng);
    auto plan = row_sweep_moves(2, 5, starts);
    auto tr = run(g, MotionModel::free, starts, plan.moves);
    EXPECT_TRUE(is_swept(tr).has_value());
    EXPECT_TRUE(is_monotone(tr, plan.formation_steps));
    for (std::size_t t = plan.formation_steps; t < plan.moves.size(); ++t) EXPECT_LE(plan.moves[t].movers(), 1u);
  }
}

TEST(RowSweep, WrongLionCount) {
  try {
    row_sweep_moves(3, 3, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
  }
  EXPECT_THROW(row_sweep_moves(2, 2, {0, 9}), Error);
}

TEST(ExactWalk, LengthsAndEndpoints) {
  auto g = build_tri_lattice(3, 3);
  auto w = exact_length_walk(g, 0, 8, 7);
  EXPECT_EQ(w.length(), 7u);
  EXPECT_EQ(w.vertices.front(), 0u);
  EXPECT_EQ(w.vertices.back(), 8u);
  EXPECT_TRUE(w.is_valid_in(g));
  auto zero = exact_length_walk(g, 4, 4, 0);
  EXPECT_EQ(zero.vertices, std::vector<Vertex>{4});
  auto odd_loop = exact_length_walk(g, 4, 4, 3);
  EXPECT_EQ(odd_loop.length(), 3u);
  EXPECT_TRUE(odd_loop.is_valid_in(g));
}

TEST(ExactWalk, ErrorKinds) {
  auto s3 = build_square_grid(3);
  try {
    exact_length_walk(s3, 0, 8, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::infeasible_too_short);
  }
  try {
    exact_length_walk(s3, 0, 8, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::infeasible_parity);
  }
  EXPECT_THROW(exact_length_walk(Graph(2, {}), 0, 1, 3), Error);
}

TEST(ExactWalk, MatchesReachabilityOracle) {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(2, 12);
    auto g = random_connected_graph(nv(rng), trial % 2 ? 0.0 : 0.2, rng);
    auto adj = oracle::adjacency(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t m = 0; m <= 14; ++m) {
          bool exists = oracle::walk_exists(adj, static_cast<int>(u), static_cast<int>(v), m);
          try {
            auto w = exact_length_walk(g, u, v, m);
            EXPECT_TRUE(exists);
            EXPECT_EQ(w.length(), m);
            EXPECT_EQ(w.vertices.front(), u);
            EXPECT_EQ(w.vertices.back(), v);
            EXPECT_TRUE(w.is_valid_in(g));
          } catch (const Error& e) {
            EXPECT_FALSE(exists) << u << "->" << v << " m=" << m;
            auto d = *oracle::shortest_path(adj, static_cast<int>(u), static_cast<int>(v));
            EXPECT_EQ(e.kind(), m < d ? ErrorKind::infeasible_too_short : ErrorKind::infeasible_parity);
          }
        }
      }
    }
  }
}

TEST(Repositioning, CaffeinatedArrivalTogether) {
  auto g = build_tri_lattice(3, 4);
  LionPositions starts{0, 0, 5, 11};
  LionPositions targets{3, 7, 5, 0};
  auto moves = simultaneous_repositioning(g, starts, targets);
  auto tr = run(g, MotionModel::caffeinated, starts, moves);
  EXPECT_EQ(tr.final_state().lions, targets);
}

TEST(Repositioning, ZeroNetMotionBounces) {
  auto g = build_tri_lattice(2, 2);
  auto moves = simultaneous_repositioning(g, {1, 2}, {1, 2});
  EXPECT_EQ(moves.size(), 2u);
  auto tr = run(g, MotionModel::caffeinated, {1, 2}, moves);
  EXPECT_EQ(tr.final_state().lions, (LionPositions{1, 2}));
  EXPECT_TRUE(simultaneous_repositioning(g, {}, {}).empty());
}

TEST(Repositioning, BipartiteParityConflict) {
  auto s2 = build_square_grid(2);
  try {
    simultaneous_repositioning(s2, {0, 0}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::infeasible_parity);
  }
}

TEST(Wall, FormationShape) {
  auto f = wall_formation(4, 2);
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(static_cast<int>(f.size()), caffeinated_lion_count(4));
  EXPECT_EQ(caffeinated_lion_count(5), 7);
  EXPECT_EQ(caffeinated_lion_count(1), 1);
  // Top row (row 4) holds one lion, the next row down two.
  int top = 0, below = 0;
  for (auto c : f) {
    top += c.row == 4;
    below += c.row == 3;
  }
  EXPECT_EQ(top, 1);
  EXPECT_EQ(below, 2);
}

TEST(Wall, SweepsSmallLattices) {
  for (int n = 1; n <= 4; ++n) {
    for (int l = 2; l <= 6; ++l) {
      auto g = build_tri_lattice(n, l);
      LionPositions starts(static_cast<std::size_t>(caffeinated_lion_count(n)), 0);
      auto plan = caffeinated_wall_moves(n, l, starts);
      auto tr = run(g, MotionModel::caffeinated, starts, plan.moves);
      EXPECT_TRUE(is_swept(tr).has_value()) << n << "x" << l;
      EXPECT_TRUE(tr.final_state().cleared.size() == g.vertex_count()) << n << "x" << l;
      EXPECT_TRUE(verify_lemma_bounds(g, tr, starts.size()).ok());
    }
  }
}

TEST(Wall, RandomStarts) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = build_tri_lattice(4, 5);
    auto starts = random_positions(g, 6, rng);
    auto plan = caffeinated_wall_moves(4, 5, starts);
    auto tr = run(g, MotionModel::caffeinated, starts, plan.moves);
    EXPECT_TRUE(is_swept(tr).has_value());
  }
}

TEST(Wall, Errors) {
  EXPECT_THROW(caffeinated_wall_moves(3, 1, {0, 0, 0, 0}), Error);
  EXPECT_THROW(caffeinated_wall_moves(3, 3, {0, 0, 0}), Error);
}

TEST(NaiveColumn, NeverSweeps) {
  auto g = build_tri_lattice(2, 3);
  auto plan = naive_caffeinated_column_moves(2, 3, 24);
  auto tr = run(g, MotionModel::caffeinated, plan.starts, plan.moves);
  EXPECT_FALSE(is_swept(tr).has_value());
  EXPECT_FALSE(is_monotone(tr));
}
