#pragma once

// Slow, independent reference implementations used to cross-check the library.
// They work on plain adjacency matrices and std::set so that no code is shared
// with the optimized paths under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "lionsweep/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const lionsweep::Graph& g) {
  const auto n = g.vertex_count();
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) {
    m[u][v] = true;
    m[v][u] = true;
  }
  return m;
}

// Edge predicate for R_{n,l} straight from the coordinate rule.
inline bool tri_lattice_edge(int r1, int c1, int r2, int c2) {
  int dr = r2 - r1;
  int dc = c2 - c1;
  return (dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1)) || (dr == -1 && dc == 1) ||
         (dr == 1 && dc == -1);
}

inline std::set<int> boundary(const Matrix& adj, const std::set<int>& s) {
  std::set<int> out;
  for (int v : s) {
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      if (adj[v][u] && !s.count(u)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

// Contamination rule, written directly from the definition.
inline std::set<int> step(const Matrix& adj, const std::set<int>& cleared, const std::vector<int>& before,
                          const std::vector<int>& after) {
  std::set<std::pair<int, int>> crossed;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) {
      crossed.insert({before[i], after[i]});
      crossed.insert({after[i], before[i]});
    }
  }
  std::set<int> occupied(after.begin(), after.end());
  std::set<int> next;
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if (occupied.count(v)) {
      next.insert(v);
      continue;
    }
    if (!cleared.count(v)) continue;
    bool lost = false;
    for (int u = 0; u < n; ++u) {
      if (adj[v][u] && !cleared.count(u) && !crossed.count({v, u})) lost = true;
    }
    if (!lost) next.insert(v);
  }
  return next;
}

// Reachable sets by repeated neighborhood expansion (boolean matrix powers).
inline bool walk_exists(const Matrix& adj, int u, int v, std::size_t m) {
  const auto n = adj.size();
  std::vector<bool> cur(n, false);
  cur[u] = true;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> nxt(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (!cur[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (adj[a][b]) nxt[b] = true;
      }
    }
    cur = nxt;
  }
  return cur[v];
}

inline std::optional<std::size_t> shortest_path(const Matrix& adj, int u, int v) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b = 0; b < static_cast<int>(adj.size()); ++b) {
      if (adj[a][b] && dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
  }
  if (dist[v] < 0) return std::nullopt;
  return static_cast<std::size_t>(dist[v]);
}

// Shortest walk length from u to each vertex for each parity, by
// breadth-first search on (vertex, parity) pairs. -1 when unreachable.
inline std::vector<std::array<long, 2>> parity_distances(const Matrix& adj, int u) {
  std::vector<std::array<long, 2>> dist(adj.size(), {-1, -1});
  std::queue<std::pair<int, int>> q;
  dist[u][0] = 0;
  q.push({u, 0});
  while (!q.empty()) {
    auto [a, p] = q.front();
    q.pop();
    for (int b = 0; b < static_cast<int>(adj.size()); ++b) {
      if (adj[a][b] && dist[b][1 - p] < 0) {
        dist[b][1 - p] = dist[a][p] + 1;
        q.push({b, 1 - p});
      }
    }
  }
  return dist;
}

// Cheeger constant as a reduced fraction by plain enumeration of every
// proper nonempty subset.
inline std::pair<long, long> cheeger(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  long best_num = 1;
  long best_den = 0;
  for (long mask = 1; mask + 1 < (1L << n); ++mask) {
    std::set<int> s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) s.insert(v);
    }
    long num = static_cast<long>(boundary(adj, s).size());
    long den = std::min(static_cast<long>(s.size()), static_cast<long>(n - s.size()));
    if (best_den == 0 || num * best_den < best_num * den) {
      best_num = num;
      best_den = den;
    }
  }
  long g = std::gcd(best_num, best_den);
  if (g == 0) g = 1;
  return {best_num / g, best_den / g};
}

// Minimum boundary per cardinality.
inline std::vector<std::size_t> min_boundary_by_size(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::size_t> best(n + 1, static_cast<std::size_t>(-1));
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::set<int> s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) s.insert(v);
    }
    best[s.size()] = std::min(best[s.size()], boundary(adj, s).size());
  }
  return best;
}

// Fall-down on an n x n grid given as a set of (row, col), row 1 at the bottom.
inline std::set<std::pair<int, int>> fall_down(int n, const std::set<std::pair<int, int>>& cells) {
  std::map<int, int> per_col;
  for (auto [r, c] : cells) per_col[c]++;
  std::map<int, int> per_row;
  for (auto [c, count] : per_col) {
    for (int r = 1; r <= count; ++r) per_row[r]++;
  }
  std::set<std::pair<int, int>> out;
  for (auto [r, count] : per_row) {
    for (int c = 1; c <= count; ++c) out.insert({r, c});
  }
  (void)n;
  return out;
}

// Breadth-first game search over (sorted lions, cleared set) using the
// reference step. Free motion only; tiny graphs.
inline bool free_lions_can_clear(const Matrix& adj, int k, std::size_t max_depth = 64) {
  const int n = static_cast<int>(adj.size());
  using State = std::pair<std::vector<int>, std::set<int>>;
  std::vector<int> start(k, 0);
  std::set<int> c0(start.begin(), start.end());
  std::set<State> seen{{start, c0}};
  std::vector<State> frontier{{start, c0}};
  for (std::size_t depth = 0; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<State> next;
    for (const auto& [pos, cleared] : frontier) {
      if (static_cast<int>(cleared.size()) == n) return true;
      std::vector<std::vector<int>> options(k);
      for (int i = 0; i < k; ++i) {
        options[i].push_back(pos[i]);
        for (int u = 0; u < n; ++u) {
          if (adj[pos[i]][u]) options[i].push_back(u);
        }
      }
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::vector<int> after(k);
        for (int i = 0; i < k; ++i) after[i] = options[i][idx[i]];
        auto c = step(adj, cleared, pos, after);
        std::sort(after.begin(), after.end());
        State s{after, c};
        if (seen.insert(s).second) next.push_back(s);
        int i = 0;
        while (i < k && ++idx[i] == options[i].size()) idx[i++] = 0;
        if (i == k) break;
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace oracle
