#pragma once

#include <cstdint>
#include <optional>

#include "hirreg/arith.hpp"
#include "hirreg/grid.hpp"
#include "hirreg/labeling.hpp"

namespace hirreg {

/// lower <= strength <= 2^upper_exponent. The upper bound stays symbolic
/// because |E(G)| - 1 quickly exceeds native integer width.
struct BoundReport {
  LabelingKind kind = LabelingKind::Vertex;
  std::int64_t lower = 1;
  std::int64_t upper_exponent = 0;

  /// 2^upper_exponent when it fits in 62 bits.
  std::optional<std::int64_t> upper() const {
    if (upper_exponent > 62) return std::nullopt;
    return std::int64_t{1} << upper_exponent;
  }
};

/// ceil(1 + (t - 1) / d), d = |V(H)|, |E(H)| or |V(H)| + |E(H)| by kind.
/// Holds for any host covered by t copies of H.
inline std::int64_t lower_bound(LabelingKind kind, std::int64_t t, std::int64_t vertices_h,
                                std::int64_t edges_h) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "member count t must be positive");
  std::int64_t d = 0;
  switch (kind) {
    case LabelingKind::Vertex: d = vertices_h; break;
    case LabelingKind::Edge: d = edges_h; break;
    case LabelingKind::Total: d = vertices_h + edges_h; break;
  }
  if (d <= 0) {
    throw Error(ErrorCode::InvalidParameter,
                std::string("pattern has no elements to label for the ") + to_string(kind) +
                    " bound");
  }
  return 1 + ceil_div(t - 1, d);
}

/// |V(G)| - 1 for vertex labelings, |E(G)| - 1 otherwise.
inline std::int64_t upper_bound_exponent(LabelingKind kind, const Graph& host) {
  const auto count = static_cast<std::int64_t>(kind == LabelingKind::Vertex
                                                   ? host.vertices().size()
                                                   : host.edges().size());
  if (count == 0) {
    throw Error(ErrorCode::InvalidParameter,
                std::string("host has no elements for the ") + to_string(kind) + " upper bound");
  }
  return count - 1;
}

/// Exact strength of P_m x P_n under its P_m x P_c windows:
/// ceil(1 + (n - c) / d) with d = mc, 2mc - m - c, 3mc - m - c.
inline std::int64_t closed_form_strength(LabelingKind kind, const CoverShape& shape) {
  const std::int64_t vh = shape.window_vertices();
  const std::int64_t eh = shape.window_edges();
  std::int64_t d = 0;
  switch (kind) {
    case LabelingKind::Vertex: d = vh; break;
    case LabelingKind::Edge: d = eh; break;
    case LabelingKind::Total: d = vh + eh; break;
  }
  return 1 + ceil_div(shape.n() - shape.c(), d);
}

inline BoundReport bound_report(LabelingKind kind, const CoverShape& shape) {
  return {kind, lower_bound(kind, shape.t(), shape.window_vertices(), shape.window_edges()),
          upper_bound_exponent(kind, make_grid(shape.grid()))};
}

}  // namespace hirreg
