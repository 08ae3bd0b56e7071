#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lionsweep/dynamics.hpp"
#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"

namespace lionsweep {

using Rng = std::mt19937_64;

// Random spanning tree (each vertex attaches to an earlier one) plus each
// remaining pair independently with probability p.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "random graph needs at least 1 vertex");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (adj[u][v]) return;
    adj[u][v] = true;
    edges.emplace_back(u, v);
  };
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    add(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) add(u, v);
    }
  }
  return Graph(n, edges, Family::custom);
}

inline LionPositions random_positions(const Graph& g, std::size_t k, Rng& rng) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
  LionPositions out(k);
  for (auto& v : out) v = pick(rng);
  return out;
}

// A random move that is legal under `model` from the given positions.
inline MoveStep random_move(const Graph& g, MotionModel model, const LionPositions& pos, Rng& rng) {
  const std::size_t k = pos.size();
  MoveStep mv = MoveStep::all_stay(k);
  auto random_neighbor = [&](Vertex v) {
    auto nb = g.neighbors(v);
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    return nb[pick(rng)];
  };
  switch (model) {
    case MotionModel::free:
      for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, g.degree(pos[i]));
        auto choice = pick(rng);
        if (choice < g.degree(pos[i])) mv.actions[i] = g.neighbors(pos[i])[choice];
      }
      break;
    case MotionModel::caffeinated:
      for (std::size_t i = 0; i < k; ++i) {
        if (g.degree(pos[i]) == 0) throw Error(ErrorKind::invalid_lions, "caffeinated lion on an isolated vertex");
        mv.actions[i] = random_neighbor(pos[i]);
      }
      break;
    case MotionModel::polite:
      if (k > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, k);
        auto who = pick(rng);
        if (who < k && g.degree(pos[who]) > 0) mv.actions[who] = random_neighbor(pos[who]);
      }
      break;
  }
  return mv;
}

inline std::vector<MoveStep> random_moves(const Graph& g, MotionModel model, LionPositions pos, std::size_t steps,
                                          Rng& rng) {
  std::vector<MoveStep> out;
  out.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    out.push_back(random_move(g, model, pos, rng));
    pos = out.back().apply(pos);
  }
  return out;
}

}  // namespace lionsweep
