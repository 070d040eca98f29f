#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "hirreg/error.hpp"

namespace hirreg {

/// Vertex u_i^j of a grid: row i, column j, both 1-based.
/// Non-grid graphs use the single-row convention u_1^ordinal.
struct VertexId {
  int i = 1;
  int j = 1;

  auto operator<=>(const VertexId&) const = default;
};

inline std::string to_string(VertexId v) {
  return "u_" + std::to_string(v.i) + "^" + std::to_string(v.j);
}

inline bool grid_adjacent(VertexId a, VertexId b) {
  return (a.j == b.j && std::abs(a.i - b.i) == 1) || (a.i == b.i && std::abs(a.j - b.j) == 1);
}

/// Undirected edge with endpoints in row-major lexicographic order.
class EdgeId {
 public:
  /// Orders the endpoints; the only structural requirement is a != b.
  static EdgeId between(VertexId a, VertexId b) {
    if (a == b) {
      throw Error(ErrorCode::InvalidEdge, "self-loop at " + to_string(a));
    }
    return a < b ? EdgeId(a, b) : EdgeId(b, a);
  }

  VertexId a() const { return a_; }
  VertexId b() const { return b_; }

  /// u_i^j u_{i+1}^j
  bool vertical() const { return a_.j == b_.j && b_.i == a_.i + 1; }
  /// u_i^j u_i^{j+1}
  bool horizontal() const { return a_.i == b_.i && b_.j == a_.j + 1; }

  auto operator<=>(const EdgeId&) const = default;

 private:
  EdgeId(VertexId a, VertexId b) : a_(a), b_(b) {}

  VertexId a_;
  VertexId b_;
};

inline std::string to_string(const EdgeId& e) { return to_string(e.a()) + " " + to_string(e.b()); }

/// Grid edge between two orthogonal neighbours, in canonical order.
inline EdgeId canonical_edge(VertexId a, VertexId b) {
  if (!grid_adjacent(a, b)) {
    throw Error(ErrorCode::InvalidEdge,
                to_string(a) + " and " + to_string(b) + " are not grid neighbours");
  }
  return EdgeId::between(a, b);
}

struct GridSpec {
  int m = 0;  // rows
  int n = 0;  // columns

  auto operator<=>(const GridSpec&) const = default;
};

/// Finite simple undirected graph. Vertex and edge lists are kept sorted
/// and duplicate-free, so equality is set equality.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<VertexId> vertices, std::vector<EdgeId> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw Error(ErrorCode::InvalidParameter, "duplicate vertex");
    }
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw Error(ErrorCode::InvalidParameter, "duplicate edge " + to_string(*dup));
    }
    for (const auto& e : edges_) {
      if (!contains(e.a()) || !contains(e.b())) {
        throw Error(ErrorCode::InvalidParameter,
                    "edge " + to_string(e) + " has an endpoint outside the vertex set");
      }
    }
  }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool contains(const EdgeId& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  int degree(VertexId v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const EdgeId& e) {
      return e.a() == v || e.b() == v;
    }));
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
};

/// P_m x P_n: m*n vertices and 2mn - m - n edges.
inline Graph make_grid(GridSpec spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw Error(ErrorCode::InvalidParameter, "grid dimensions must be positive (m=" +
                                                 std::to_string(spec.m) +
                                                 ", n=" + std::to_string(spec.n) + ")");
  }
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  vertices.reserve(static_cast<std::size_t>(spec.m) * spec.n);
  for (int i = 1; i <= spec.m; ++i) {
    for (int j = 1; j <= spec.n; ++j) {
      vertices.push_back({i, j});
      if (i < spec.m) edges.push_back(canonical_edge({i, j}, {i + 1, j}));
      if (j < spec.n) edges.push_back(canonical_edge({i, j}, {i, j + 1}));
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

/// Largest row and column index present; {0, 0} for the empty graph.
inline GridSpec bounding_spec(const Graph& g) {
  GridSpec spec{0, 0};
  for (auto v : g.vertices()) {
    spec.m = std::max(spec.m, v.i);
    spec.n = std::max(spec.n, v.j);
  }
  return spec;
}

inline bool is_full_grid(const Graph& g) {
  auto spec = bounding_spec(g);
  return spec.m >= 1 && spec.n >= 1 && g == make_grid(spec);
}

/// Swaps rows and columns: u_i^j -> u_j^i. Coverings by row windows are
/// obtained by transposing, covering with column windows, and transposing back.
inline Graph transpose(const Graph& g) {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  for (auto v : g.vertices()) vertices.push_back({v.j, v.i});
  for (const auto& e : g.edges()) {
    edges.push_back(EdgeId::between({e.a().j, e.a().i}, {e.b().j, e.b().i}));
  }
  return Graph(std::move(vertices), std::move(edges));
}

/// A P_m x P_n host covered by its P_m x P_c column windows, 2 <= m <= c <= n.
class CoverShape {
 public:
  static CoverShape checked(int m, int c, int n) {
    if (m > n && m >= 2 && n >= 2) {
      throw Error(ErrorCode::OutOfScope,
                  "m=" + std::to_string(m) + " exceeds n=" + std::to_string(n) +
                      "; transpose the grid (swap m and n) so that m <= n");
    }
    if (m < 2 || c < m || c > n) {
      throw Error(ErrorCode::OutOfScope, "need 2 <= m <= c <= n, got m=" + std::to_string(m) +
                                             ", c=" + std::to_string(c) +
                                             ", n=" + std::to_string(n));
    }
    return CoverShape(m, c, n);
  }

  int m() const { return m_; }
  int c() const { return c_; }
  int n() const { return n_; }
  GridSpec grid() const { return {m_, n_}; }

  /// Number of windows, n - c + 1.
  int t() const { return n_ - c_ + 1; }
  /// |V(P_m x P_c)|
  long window_vertices() const { return static_cast<long>(m_) * c_; }
  /// |E(P_m x P_c)|
  long window_edges() const { return 2L * m_ * c_ - m_ - c_; }

  auto operator<=>(const CoverShape&) const = default;

 private:
  CoverShape(int m, int c, int n) : m_(m), c_(c), n_(n) {}

  int m_;
  int c_;
  int n_;
};

}  // namespace hirreg
