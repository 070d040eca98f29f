#pragma once

#include "hirreg/arith.hpp"
#include "hirreg/grid.hpp"
#include "hirreg/labeling.hpp"

namespace hirreg {

/// Which denominator the total construction uses for horizontal edges.
/// The literal form divides by 2mc - m - c while every other label of the
/// total construction (and its budget k) divides by 3mc - m - c.
enum class TotalVariant { Corrected, AsPrinted };

inline const char* to_string(TotalVariant variant) {
  return variant == TotalVariant::Corrected ? "corrected" : "as-printed";
}

inline TotalVariant parse_variant(std::string_view text) {
  if (text == "corrected") return TotalVariant::Corrected;
  if (text == "as-printed" || text == "as_printed") return TotalVariant::AsPrinted;
  throw Error(ErrorCode::Parse, "unknown variant '" + std::string(text) + "'");
}

namespace detail {

// ceil(1 + x / d)
inline Label step_label(std::int64_t x, std::int64_t d) { return 1 + ceil_div(x, d); }

}  // namespace detail

/// label(u_i^j) = ceil(1 + (j - ic) / mc), k = ceil(1 + (n - c) / mc).
inline Labeling construct_vertex_labeling(const CoverShape& shape) {
  const std::int64_t m = shape.m(), c = shape.c(), n = shape.n();
  const std::int64_t d = m * c;
  Labeling labeling(LabelingKind::Vertex, detail::step_label(n - c, d));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      labeling.set(VertexId{i, j}, detail::step_label(j - i * c, d));
    }
  }
  return labeling;
}

/// With d = 2mc - m - c:
///   vertical   u_i^j u_{i+1}^j : ceil(1 + (j - ic) / d)
///   horizontal u_i^j u_i^{j+1} : ceil(1 + (j - (m + i - 1)c + i) / d)
inline Labeling construct_edge_labeling(const CoverShape& shape) {
  const std::int64_t m = shape.m(), c = shape.c(), n = shape.n();
  const std::int64_t d = 2 * m * c - m - c;
  Labeling labeling(LabelingKind::Edge, detail::step_label(n - c, d));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i < m) {
        labeling.set(canonical_edge({i, j}, {i + 1, j}), detail::step_label(j - i * c, d));
      }
      if (j < n) {
        labeling.set(canonical_edge({i, j}, {i, j + 1}),
                     detail::step_label(j - (m + i - 1) * c + i, d));
      }
    }
  }
  return labeling;
}

/// With d = 3mc - m - c:
///   vertex     u_i^j           : ceil(1 + (j - ic) / d)
///   vertical   u_i^j u_{i+1}^j : ceil(1 + (j - (m + i)c) / d)
///   horizontal u_i^j u_i^{j+1} : ceil(1 + (j - (2m + i - 1)c + i) / d')
/// where d' = d for Corrected and d' = 2mc - m - c for AsPrinted.
/// AsPrinted labels are left as computed even when they exceed k.
inline Labeling construct_total_labeling(const CoverShape& shape,
                                         TotalVariant variant = TotalVariant::Corrected) {
  const std::int64_t m = shape.m(), c = shape.c(), n = shape.n();
  const std::int64_t d = 3 * m * c - m - c;
  const std::int64_t horizontal_d = variant == TotalVariant::Corrected ? d : 2 * m * c - m - c;
  Labeling labeling(LabelingKind::Total, detail::step_label(n - c, d));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      labeling.set(VertexId{i, j}, detail::step_label(j - i * c, d));
      if (i < m) {
        labeling.set(canonical_edge({i, j}, {i + 1, j}), detail::step_label(j - (m + i) * c, d));
      }
      if (j < n) {
        labeling.set(canonical_edge({i, j}, {i, j + 1}),
                     detail::step_label(j - (2 * m + i - 1) * c + i, horizontal_d));
      }
    }
  }
  return labeling;
}

inline Labeling construct_labeling(LabelingKind kind, const CoverShape& shape,
                                   TotalVariant variant = TotalVariant::Corrected) {
  switch (kind) {
    case LabelingKind::Vertex: return construct_vertex_labeling(shape);
    case LabelingKind::Edge: return construct_edge_labeling(shape);
    case LabelingKind::Total: return construct_total_labeling(shape, variant);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown labeling kind");
}

}  // namespace hirreg
