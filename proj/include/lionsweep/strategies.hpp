#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "lionsweep/dynamics.hpp"
#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"

namespace lionsweep {

struct Walk {
  std::vector<Vertex> vertices;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  [[nodiscard]] bool is_valid_in(const Graph& g) const {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
    }
    return !vertices.empty();
  }
};

namespace detail {

// Shortest walk lengths from src to every vertex, split by walk parity.
// Entry [v][p] is the length of the shortest walk of parity p ending at v.
struct ParityBfs {
  std::vector<std::array<std::optional<std::size_t>, 2>> dist;
  std::vector<std::array<Vertex, 2>> parent;

  ParityBfs(const Graph& g, Vertex src) : dist(g.vertex_count()), parent(g.vertex_count()) {
    std::queue<std::pair<Vertex, int>> q;
    dist[src][0] = 0;
    q.emplace(src, 0);
    while (!q.empty()) {
      auto [v, p] = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        int np = 1 - p;
        if (!dist[u][np]) {
          dist[u][np] = *dist[v][p] + 1;
          parent[u][np] = v;
          q.emplace(u, np);
        }
      }
    }
  }

  [[nodiscard]] std::vector<Vertex> walk_to(Vertex v, int parity) const {
    std::vector<Vertex> out;
    std::size_t len = *dist[v][parity];
    out.push_back(v);
    for (std::size_t i = 0; i < len; ++i) {
      v = parent[v][parity];
      parity = 1 - parity;
      out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

inline void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace detail

// Walk from u to v with exactly m edges. Built as a shortest walk of the
// right parity, padded at v by back-and-forth steps along one edge.
inline Walk exact_length_walk(const Graph& g, Vertex u, Vertex v, std::size_t m) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  detail::ParityBfs bfs(g, u);
  const auto& dv = bfs.dist[v];
  if (!dv[0] && !dv[1]) throw Error(ErrorKind::invalid_parameter, "target not reachable from start");
  std::size_t shortest = std::min(dv[0].value_or(SIZE_MAX), dv[1].value_or(SIZE_MAX));
  if (m < shortest) {
    throw Error(ErrorKind::infeasible_too_short,
                "walk of length " + std::to_string(m) + " shorter than distance " + std::to_string(shortest));
  }
  int parity = static_cast<int>(m % 2);
  if (!dv[parity] || *dv[parity] > m) {
    throw Error(ErrorKind::infeasible_parity, "no walk of length " + std::to_string(m) + " between these vertices");
  }
  Walk w{bfs.walk_to(v, parity)};
  std::size_t pad = m - *dv[parity];
  if (pad > 0) {
    if (g.degree(v) == 0) throw Error(ErrorKind::infeasible_parity, "isolated target cannot be padded");
    Vertex w1 = g.neighbors(v).front();
    for (std::size_t i = 0; i < pad / 2; ++i) {
      w.vertices.push_back(w1);
      w.vertices.push_back(v);
    }
  }
  return w;
}

// Caffeinated plan taking lion i from starts[i] to targets[i]; every lion
// moves at every step and all arrive together. The common length is the
// smallest positive one feasible for every lion, so a lion already at its
// target bounces out and back.
inline std::vector<MoveStep> simultaneous_repositioning(const Graph& g, const LionPositions& starts,
                                                        const LionPositions& targets) {
  if (starts.size() != targets.size()) throw Error(ErrorKind::invalid_parameter, "starts and targets differ in size");
  const std::size_t k = starts.size();
  if (k == 0) return {};

  std::vector<std::array<std::optional<std::size_t>, 2>> dist(k);
  std::size_t horizon = 0;
  for (std::size_t i = 0; i < k; ++i) {
    detail::check_vertex(g, starts[i]);
    detail::check_vertex(g, targets[i]);
    dist[i] = detail::ParityBfs(g, starts[i]).dist[targets[i]];
    if (!dist[i][0] && !dist[i][1]) throw Error(ErrorKind::invalid_parameter, "target not reachable for a lion");
    for (const auto& d : dist[i]) {
      if (d) horizon = std::max(horizon, *d);
    }
  }

  std::optional<std::size_t> common;
  for (std::size_t m = 1; m <= horizon + 2 && !common; ++m) {
    bool ok = std::all_of(dist.begin(), dist.end(), [m](const auto& d) {
      const auto& dp = d[m % 2];
      return dp && *dp <= m;
    });
    if (ok) common = m;
  }
  if (!common) throw Error(ErrorKind::infeasible_parity, "lions cannot arrive simultaneously (parity conflict)");

  std::vector<Walk> walks;
  walks.reserve(k);
  for (std::size_t i = 0; i < k; ++i) walks.push_back(exact_length_walk(g, starts[i], targets[i], *common));

  std::vector<MoveStep> moves(*common, MoveStep::all_stay(k));
  for (std::size_t t = 0; t < *common; ++t) {
    for (std::size_t i = 0; i < k; ++i) moves[t].actions[i] = walks[i].vertices[t + 1];
  }
  return moves;
}

// A move sequence together with the number of leading steps spent getting
// the lions into their formation.
struct SweepPlan {
  LionPositions starts;
  std::vector<MoveStep> moves;
  std::size_t formation_steps = 0;
};

namespace detail {

inline void check_lions(const LionPositions& lions, std::size_t expected, std::size_t vertex_count,
                        const char* what) {
  if (lions.size() != expected) {
    throw Error(ErrorKind::invalid_parameter, std::string(what) + " needs exactly " + std::to_string(expected) +
                                                  " lions, got " + std::to_string(lions.size()));
  }
  for (Vertex v : lions) {
    if (v >= vertex_count) throw Error(ErrorKind::invalid_lions, "lion at missing vertex " + std::to_string(v));
  }
}

// Free-model gathering: every lion not yet home takes one step along a
// shortest path per time step.
inline std::vector<MoveStep> gather(const Graph& g, LionPositions pos, const LionPositions& targets) {
  std::vector<std::vector<std::optional<std::size_t>>> to_target;
  to_target.reserve(targets.size());
  for (Vertex t : targets) to_target.push_back(bfs_distances(g, t));

  std::vector<MoveStep> moves;
  while (pos != targets) {
    MoveStep mv = MoveStep::all_stay(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (pos[i] == targets[i]) continue;
      const auto& d = to_target[i];
      if (!d[pos[i]]) throw Error(ErrorKind::invalid_parameter, "formation unreachable from lion start");
      for (Vertex u : g.neighbors(pos[i])) {
        if (d[u] && *d[u] + 1 == *d[pos[i]]) {
          mv.actions[i] = u;
          break;
        }
      }
    }
    pos = mv.apply(pos);
    moves.push_back(std::move(mv));
  }
  return moves;
}

// Lion i gets the i-th formation slot in vertex order of the starts, which
// keeps the assignment stable and roughly row-aligned.
inline LionPositions assign_slots(const LionPositions& starts, const std::vector<Vertex>& slots) {
  std::vector<std::size_t> order(starts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return starts[a] < starts[b]; });
  LionPositions targets(starts.size());
  for (std::size_t j = 0; j < order.size(); ++j) targets[order[j]] = slots[j];
  return targets;
}

}  // namespace detail

// n lions sweep R_{n,l}: gather on column 1 (lion of row r at (r,1)), then
// advance one lion at a time, bottom row first, one column per round.
inline SweepPlan row_sweep_moves(int n, int l, const LionPositions& starts) {
  Graph g = build_tri_lattice(n, l);
  detail::check_lions(starts, static_cast<std::size_t>(n), g.vertex_count(), "row sweep");

  std::vector<Vertex> column;
  for (int r = 1; r <= n; ++r) column.push_back(grid_index(r, 1, l));
  LionPositions targets = detail::assign_slots(starts, column);

  SweepPlan plan{starts, detail::gather(g, starts, targets), 0};
  plan.formation_steps = plan.moves.size();

  // Lion occupying row r after the formation phase.
  std::vector<std::size_t> lion_of_row(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < targets.size(); ++i) lion_of_row[g.coord(targets[i]).row] = i;

  for (int c = 1; c < l; ++c) {
    for (int r = 1; r <= n; ++r) {
      MoveStep mv = MoveStep::all_stay(starts.size());
      mv.actions[lion_of_row[r]] = grid_index(r, c + 1, l);
      plan.moves.push_back(std::move(mv));
    }
  }
  return plan;
}

inline int caffeinated_lion_count(int n) { return 3 * n / 2; }

// Wall of triangles anchored at column c: counting rows from the top, odd
// rows hold one lion at (r,c), even rows hold two at (r,c) and (r,c+1).
inline std::vector<GridCoord> wall_formation(int n, int c) {
  std::vector<GridCoord> out;
  for (int r = 1; r <= n; ++r) {
    out.push_back({r, c});
    if ((n - r) % 2 == 1) out.push_back({r, c + 1});
  }
  return out;
}

namespace detail {

class WallChoreographer {
 public:
  WallChoreographer(int n, int l, LionPositions pos) : n_(n), l_(l), pos_(std::move(pos)) {}

  // Applies a cell-to-cell map to every lion; every lion's cell must be
  // mapped, which keeps each emitted step caffeinated.
  void apply(const std::map<std::pair<int, int>, std::pair<int, int>>& cells, std::vector<MoveStep>& out) {
    MoveStep mv = MoveStep::all_stay(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      int r = static_cast<int>(pos_[i]) / l_ + 1;
      int c = static_cast<int>(pos_[i]) % l_ + 1;
      auto it = cells.find({r, c});
      if (it == cells.end()) throw Error(ErrorKind::invalid_parameter, "wall choreography lost a lion");
      mv.actions[i] = grid_index(it->second.first, it->second.second, l_);
    }
    pos_ = mv.apply(pos_);
    out.push_back(std::move(mv));
  }

  [[nodiscard]] bool single_row(int r) const { return (n_ - r) % 2 == 0; }

  // Whole wall one column to the left.
  void shift_left(int c, std::vector<MoveStep>& out) {
    std::map<std::pair<int, int>, std::pair<int, int>> m;
    for (auto [r, col] : wall_formation(n_, c)) m[{r, col}] = {r, col - 1};
    apply(m, out);
  }

  // Single-lion rows step right while double rows swap in place. Each vacated
  // cell has its right neighbour crossed and every other neighbour cleared or
  // occupied.
  void advance_singles(int c, std::vector<MoveStep>& out) {
    std::map<std::pair<int, int>, std::pair<int, int>> m;
    for (int r = 1; r <= n_; ++r) {
      if (single_row(r)) {
        m[{r, c}] = {r, c + 1};
      } else {
        m[{r, c}] = {r, c + 1};
        m[{r, c + 1}] = {r, c};
      }
    }
    apply(m, out);
  }

  // Singles sit at c+1, doubles at c and c+1; brings the doubles to c+1 and
  // c+2. Each double row rotates with the single row above it: the single
  // drops diagonally to (r,c+2), the right lion climbs to (r+1,c+1) and the
  // left lion slides right. With n odd the bottom single row has no double
  // below it, so row 2 also cycles with row 1 instead of sliding.
  void advance_doubles(int c, std::vector<MoveStep>& out) {
    std::map<std::pair<int, int>, std::pair<int, int>> m;
    for (int r = 1; r <= n_; ++r) {
      if (single_row(r)) continue;
      m[{r, c + 1}] = {r + 1, c + 1};
      m[{r + 1, c + 1}] = {r, c + 2};
      if (r == 2 && n_ % 2 == 1) {
        m[{r, c}] = {r - 1, c + 1};
        m[{r - 1, c + 1}] = {r, c + 1};
      } else {
        m[{r, c}] = {r, c + 1};
      }
    }
    apply(m, out);
  }

 private:
  int n_;
  int l_;
  LionPositions pos_;
};

}  // namespace detail

// floor(3n/2) caffeinated lions sweep R_{n,l}: reposition into the wall at
// column ceil(l/2), walk it to column 1, then carry it right to column l.
// Needs l >= 2 so the double rows fit.
inline SweepPlan caffeinated_wall_moves(int n, int l, const LionPositions& starts) {
  Graph g = build_tri_lattice(n, l);
  if (l < 2) throw Error(ErrorKind::invalid_parameter, "caffeinated wall needs l >= 2");
  detail::check_lions(starts, static_cast<std::size_t>(caffeinated_lion_count(n)), g.vertex_count(),
                      "caffeinated wall");

  const int home = (l + 1) / 2;
  std::vector<Vertex> slots;
  for (auto [r, c] : wall_formation(n, home)) slots.push_back(grid_index(r, c, l));
  std::sort(slots.begin(), slots.end());
  LionPositions targets = detail::assign_slots(starts, slots);

  SweepPlan plan{starts, simultaneous_repositioning(g, starts, targets), 0};
  plan.formation_steps = plan.moves.size();

  detail::WallChoreographer wall(n, l, targets);
  for (int c = home; c > 1; --c) wall.shift_left(c, plan.moves);
  for (int c = 1; c < l; ++c) {
    wall.advance_singles(c, plan.moves);
    if (c == l - 1) break;
    if (n > 1) wall.advance_doubles(c, plan.moves);
  }
  return plan;
}

// The column sweep that works for free lions, forced to be caffeinated: all n
// lions start on column 1 and move together one column per step, reversing
// at the ends of the strip.
inline SweepPlan naive_caffeinated_column_moves(int n, int l, std::size_t steps) {
  if (l < 2) throw Error(ErrorKind::invalid_parameter, "column sweep needs l >= 2");
  Graph g = build_tri_lattice(n, l);
  SweepPlan plan;
  for (int r = 1; r <= n; ++r) plan.starts.push_back(grid_index(r, 1, l));
  int col = 1;
  int dir = 1;
  for (std::size_t t = 0; t < steps; ++t) {
    if (col + dir < 1 || col + dir > l) dir = -dir;
    col += dir;
    MoveStep mv = MoveStep::all_stay(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) mv.actions[static_cast<std::size_t>(r - 1)] = grid_index(r, col, l);
    plan.moves.push_back(std::move(mv));
  }
  return plan;
}

}  // namespace lionsweep
