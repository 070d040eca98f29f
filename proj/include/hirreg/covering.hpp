#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hirreg/error.hpp"
#include "hirreg/grid.hpp"

namespace hirreg {

/// A member of a covering family, stored as explicit element sets.
/// `window` is the 1-based column offset l when the member is a grid window.
class Subgraph {
 public:
  Subgraph() = default;

  Subgraph(std::vector<VertexId> vertices, std::vector<EdgeId> edges,
           std::optional<int> window = std::nullopt)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), window_(window) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
      if (!contains(e.a()) || !contains(e.b())) {
        throw Error(ErrorCode::MalformedFamily,
                    "member edge " + to_string(e) + " has an endpoint outside the member");
      }
    }
  }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }
  std::optional<int> window() const { return window_; }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool contains(const EdgeId& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Distinctness is by element sets only; the window tag is not compared.
  bool operator==(const Subgraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::optional<int> window_;
};

/// H_l: columns l .. l+c-1 of a grid with m rows.
inline Subgraph window_subgraph(int m, int c, int l) {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = l; j <= l + c - 1; ++j) {
      vertices.push_back({i, j});
      if (i < m) edges.push_back(canonical_edge({i, j}, {i + 1, j}));
      if (j < l + c - 1) edges.push_back(canonical_edge({i, j}, {i, j + 1}));
    }
  }
  return Subgraph(std::move(vertices), std::move(edges), l);
}

/// Count-and-rederive check that a member is a copy of P_m x P_c: it must hold
/// exactly m*c vertices forming a row-aligned block of c consecutive columns,
/// and its edge set must equal the grid edges re-derived from that block.
inline bool is_grid_window(const Subgraph& s, int m, int c) {
  auto vs = s.vertices();
  if (static_cast<long>(vs.size()) != static_cast<long>(m) * c) return false;
  if (static_cast<long>(s.edges().size()) != 2L * m * c - m - c) return false;
  if (vs.empty()) return false;
  const int l = vs.front().j;
  const int row0 = vs.front().i;
  auto expected = window_subgraph(m, c, l);
  // Allow row offsets so a window of a taller host still qualifies.
  std::vector<VertexId> shifted;
  std::vector<EdgeId> shifted_edges;
  for (auto v : expected.vertices()) shifted.push_back({v.i + row0 - 1, v.j});
  for (const auto& e : expected.edges()) {
    shifted_edges.push_back(
        EdgeId::between({e.a().i + row0 - 1, e.a().j}, {e.b().i + row0 - 1, e.b().j}));
  }
  return Subgraph(std::move(shifted), std::move(shifted_edges)) == s;
}

/// Ordered family of subgraphs of a host graph. Construction checks that
/// members are subgraphs of the host and pairwise distinct; whether the
/// family actually covers every host edge is is_edge_covering's job.
class CoverFamily {
 public:
  CoverFamily(Graph host, std::vector<Subgraph> members)
      : host_(std::move(host)), members_(std::move(members)) {
    if (members_.empty()) {
      throw Error(ErrorCode::MalformedFamily, "family has no members");
    }
    for (std::size_t idx = 0; idx < members_.size(); ++idx) {
      const auto& member = members_[idx];
      for (auto v : member.vertices()) {
        if (!host_.contains(v)) {
          throw Error(ErrorCode::MalformedFamily, "member " + std::to_string(idx + 1) +
                                                      " uses vertex " + to_string(v) +
                                                      " absent from the host");
        }
      }
      for (const auto& e : member.edges()) {
        if (!host_.contains(e)) {
          throw Error(ErrorCode::MalformedFamily, "member " + std::to_string(idx + 1) +
                                                      " uses edge " + to_string(e) +
                                                      " absent from the host");
        }
      }
      for (std::size_t prev = 0; prev < idx; ++prev) {
        if (members_[prev] == member) {
          throw Error(ErrorCode::MalformedFamily, "members " + std::to_string(prev + 1) +
                                                      " and " + std::to_string(idx + 1) +
                                                      " are the same subgraph");
        }
      }
    }
  }

  const Graph& host() const { return host_; }
  std::span<const Subgraph> members() const { return members_; }
  const Subgraph& member(int l) const { return members_.at(static_cast<std::size_t>(l - 1)); }
  int t() const { return static_cast<int>(members_.size()); }

 private:
  Graph host_;
  std::vector<Subgraph> members_;
};

/// The n - c + 1 column windows P_m x P_c of a full grid, ordered by l.
inline CoverFamily enumerate_windows(const Graph& grid, int c) {
  if (!is_full_grid(grid)) {
    throw Error(ErrorCode::InvalidParameter, "host is not a full grid P_m x P_n");
  }
  auto spec = bounding_spec(grid);
  auto shape = CoverShape::checked(spec.m, c, spec.n);
  std::vector<Subgraph> members;
  members.reserve(static_cast<std::size_t>(shape.t()));
  for (int l = 1; l <= shape.t(); ++l) members.push_back(window_subgraph(shape.m(), c, l));
  return CoverFamily(grid, std::move(members));
}

inline CoverFamily enumerate_windows(const CoverShape& shape) {
  return enumerate_windows(make_grid(shape.grid()), shape.c());
}

struct CoveringVerdict {
  bool covered = false;
  /// Every host edge no member contains, in canonical order.
  std::vector<EdgeId> uncovered;
};

inline CoveringVerdict is_edge_covering(const Graph& host, const CoverFamily& family) {
  for (std::size_t idx = 0; idx < family.members().size(); ++idx) {
    const auto& member = family.members()[idx];
    bool inside = std::all_of(member.vertices().begin(), member.vertices().end(),
                              [&](VertexId v) { return host.contains(v); }) &&
                  std::all_of(member.edges().begin(), member.edges().end(),
                              [&](const EdgeId& e) { return host.contains(e); });
    if (!inside) {
      throw Error(ErrorCode::MalformedFamily,
                  "member " + std::to_string(idx + 1) + " is not a subgraph of the host");
    }
  }
  std::set<EdgeId> seen;
  for (const auto& member : family.members()) seen.insert(member.edges().begin(), member.edges().end());
  CoveringVerdict verdict;
  for (const auto& e : host.edges()) {
    if (!seen.contains(e)) verdict.uncovered.push_back(e);
  }
  verdict.covered = verdict.uncovered.empty();
  return verdict;
}

inline CoveringVerdict is_edge_covering(const CoverFamily& family) {
  return is_edge_covering(family.host(), family);
}

}  // namespace hirreg
