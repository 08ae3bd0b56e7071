#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lionsweep/error.hpp"
#include "lionsweep/vertex_set.hpp"

namespace lionsweep {

struct GridCoord {
  int row = 1;
  int col = 1;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

enum class Family { square, tri_lattice, triangle, circulant, custom };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::square: return "square";
    case Family::tri_lattice: return "tri_lattice";
    case Family::triangle: return "triangle";
    case Family::circulant: return "circulant";
    case Family::custom: return "custom";
  }
  return "custom";
}

using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
// Grid families carry a (row, col) coordinate per vertex.
class Graph {
 public:
  Graph() = default;

  // Throws invalid-parameter on self-loops, duplicate edges or endpoints
  // out of range.
  Graph(std::size_t vertex_count, std::span<const Edge> edges, Family family = Family::custom,
        std::vector<GridCoord> coords = {})
      : adjacency_(vertex_count), coords_(std::move(coords)), family_(family) {
    if (!coords_.empty() && coords_.size() != vertex_count) {
      throw Error(ErrorKind::invalid_parameter, "coordinate table size does not match vertex count");
    }
    for (auto [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count) {
        throw Error(ErrorKind::invalid_parameter,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " names a missing vertex");
      }
      if (u == v) throw Error(ErrorKind::invalid_parameter, "self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw Error(ErrorKind::invalid_parameter, "duplicate edge");
      }
    }
    edge_count_ = edges.size();
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] Family family() const noexcept { return family_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  // Edges as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  [[nodiscard]] bool has_coords() const noexcept { return !coords_.empty(); }
  [[nodiscard]] const GridCoord& coord(Vertex v) const { return coords_.at(v); }

  [[nodiscard]] std::optional<Vertex> vertex_at(GridCoord c) const {
    for (Vertex v = 0; v < coords_.size(); ++v) {
      if (coords_[v] == c) return v;
    }
    return std::nullopt;
  }

  [[nodiscard]] Vertex at(int row, int col) const {
    if (auto v = vertex_at({row, col})) return *v;
    throw Error(ErrorKind::invalid_set,
                "no vertex at (" + std::to_string(row) + "," + std::to_string(col) + ")");
  }

  [[nodiscard]] VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  // Equality of the abstract graph under the identity labeling; coordinates
  // and family tags are metadata.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<GridCoord> coords_;
  Family family_ = Family::custom;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::invalid_parameter, what);
}

}  // namespace detail

// Vertex (r, c) of a rows x cols grid family has index (r-1)*cols + (c-1).
// The square grid and the triangular lattice share this layout, so a vertex
// set of one is a vertex set of the other.
inline Vertex grid_index(int row, int col, int cols) {
  return static_cast<Vertex>((row - 1) * cols + (col - 1));
}

inline Graph build_square_grid(int n) {
  detail::require(n >= 1, "square grid needs n >= 1");
  std::vector<GridCoord> coords;
  std::vector<Edge> edges;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      coords.push_back({r, c});
      if (c < n) edges.emplace_back(grid_index(r, c, n), grid_index(r, c + 1, n));
      if (r < n) edges.emplace_back(grid_index(r, c, n), grid_index(r + 1, c, n));
    }
  }
  return Graph(static_cast<std::size_t>(n) * n, edges, Family::square, std::move(coords));
}

// Parallelogram of n rows and l columns of a triangular lattice. Row 1 is the
// bottom row; the diagonal of every unit cell joins (r+1, c) to (r, c+1).
inline Graph build_tri_lattice(int n, int l) {
  detail::require(n >= 1 && l >= 1, "triangular lattice needs n >= 1 and l >= 1");
  std::vector<GridCoord> coords;
  std::vector<Edge> edges;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= l; ++c) {
      coords.push_back({r, c});
      if (c < l) edges.emplace_back(grid_index(r, c, l), grid_index(r, c + 1, l));
      if (r < n) edges.emplace_back(grid_index(r, c, l), grid_index(r + 1, c, l));
      if (r > 1 && c < l) edges.emplace_back(grid_index(r, c, l), grid_index(r - 1, c + 1, l));
    }
  }
  return Graph(static_cast<std::size_t>(n) * l, edges, Family::tri_lattice, std::move(coords));
}

inline std::size_t triangle_index(int row, int pos) {
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(row) / 2 + static_cast<std::size_t>(pos - 1);
}

// Triangle with n vertices per side. Row 1 is the apex, row n the base; row
// r holds (r, 1) .. (r, r).
inline Graph build_triangle(int n) {
  detail::require(n >= 1, "triangular grid needs n >= 1");
  std::vector<GridCoord> coords;
  std::vector<Edge> edges;
  for (int r = 1; r <= n; ++r) {
    for (int i = 1; i <= r; ++i) {
      coords.push_back({r, i});
      auto v = static_cast<Vertex>(triangle_index(r, i));
      if (i < r) edges.emplace_back(v, static_cast<Vertex>(triangle_index(r, i + 1)));
      if (r < n) {
        edges.emplace_back(v, static_cast<Vertex>(triangle_index(r + 1, i)));
        edges.emplace_back(v, static_cast<Vertex>(triangle_index(r + 1, i + 1)));
      }
    }
  }
  return Graph(static_cast<std::size_t>(n) * (n + 1) / 2, edges, Family::triangle, std::move(coords));
}

inline Graph build_circulant(int n, int k) {
  detail::require(n >= 3, "circulant graph needs n >= 3");
  detail::require(k >= 0 && k <= n / 2, "circulant graph needs 0 <= k <= n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k; ++d) {
      int j = (i + d) % n;
      // For even n and d = n/2 each chord is reached from both ends.
      if (2 * d == n && j < i) continue;
      edges.emplace_back(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
    }
  }
  return Graph(static_cast<std::size_t>(n), edges, Family::circulant);
}

inline Graph build_complete(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph build_path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(static_cast<std::size_t>(n), edges);
}

// Vertices of s adjacent to at least one vertex outside s.
inline VertexSet boundary(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw Error(ErrorKind::invalid_set, "set does not belong to graph");
  VertexSet out(g.vertex_count());
  for (Vertex v : s.members()) {
    for (Vertex u : g.neighbors(v)) {
      if (!s.contains(u)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

// BFS distances from src; unreachable vertices get std::nullopt.
inline std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex src) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::queue<Vertex> q;
  dist.at(src) = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!dist[u]) {
        dist[u] = *dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

// Proper 2-coloring if one exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool has_odd_cycle(const Graph& g) { return !two_coloring(g).has_value(); }

}  // namespace lionsweep
