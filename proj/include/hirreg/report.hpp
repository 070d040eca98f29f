#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hirreg/bounds.hpp"
#include "hirreg/construct.hpp"
#include "hirreg/covering.hpp"
#include "hirreg/io.hpp"
#include "hirreg/search.hpp"
#include "hirreg/verify.hpp"

namespace hirreg {

struct StrengthReport {
  LabelingKind kind = LabelingKind::Vertex;
  int m = 0;
  int c = 0;
  int n = 0;
  int t = 0;
  std::int64_t lower_bound = 0;
  std::int64_t closed_form = 0;
  bool construction_verified = false;
  bool oracle_ran = false;
  std::optional<Label> oracle_k;  // nullopt after a run: nothing up to closed_form + 1
  /// Whether the search also proved closed_form - 1 infeasible (unset when closed_form is 1).
  std::optional<bool> oracle_below_infeasible;
  std::uint64_t oracle_nodes = 0;
  std::optional<std::string> erratum_note;

  /// The oracle ran and disagrees with the closed form.
  bool discrepancy() const {
    return oracle_ran && (!oracle_k || *oracle_k != closed_form ||
                          (oracle_below_infeasible && !*oracle_below_infeasible));
  }
};

/// Lower bound, closed form and a verified construction for one window
/// covering; with `oracle`, also the searched minimum up to closed_form.
inline StrengthReport strength_report(LabelingKind kind, const CoverShape& shape,
                                      const std::optional<SearchOptions>& oracle = std::nullopt) {
  StrengthReport report;
  report.kind = kind;
  report.m = shape.m();
  report.c = shape.c();
  report.n = shape.n();
  report.t = shape.t();
  report.lower_bound = bound_report(kind, shape).lower;
  report.closed_form = closed_form_strength(kind, shape);

  auto family = enumerate_windows(shape);
  auto labeling = construct_labeling(kind, shape);
  report.construction_verified = verify_irregular(labeling, family).accepted &&
                                 labeling.max_label() == report.closed_form;
  if (kind == LabelingKind::Total) {
    report.erratum_note =
        "horizontal-edge labels divide by 3mc-m-c; the literal 2mc-m-c denominator is "
        "available as --variant as-printed";
  }
  if (oracle) {
    // Search one past the closed form so a disagreement above it still shows.
    auto result = min_strength(family, kind, report.closed_form + 1, *oracle);
    report.oracle_ran = true;
    report.oracle_k = result.minimal_k;
    report.oracle_nodes = result.nodes_explored;
    if (report.closed_form >= 2) {
      report.oracle_below_infeasible =
          !exists_irregular(family, kind, report.closed_form - 1, *oracle, &report.oracle_nodes);
    }
  }
  return report;
}

inline json report_to_json(const StrengthReport& r) {
  json j = {{"kind", to_string(r.kind)},
            {"m", r.m},
            {"c", r.c},
            {"n", r.n},
            {"t", r.t},
            {"lower_bound", r.lower_bound},
            {"closed_form", r.closed_form},
            {"construction_verified", r.construction_verified},
            {"oracle_k", nullptr},
            {"erratum_note", nullptr}};
  if (r.oracle_ran) {
    if (r.oracle_k) j["oracle_k"] = *r.oracle_k;
    if (r.oracle_below_infeasible) j["oracle_below_infeasible"] = *r.oracle_below_infeasible;
    j["oracle_nodes"] = r.oracle_nodes;
    j["oracle_agrees"] = !r.discrepancy();
  }
  if (r.erratum_note) j["erratum_note"] = *r.erratum_note;
  return j;
}

struct SweepRow {
  LabelingKind kind = LabelingKind::Vertex;
  int m = 0;
  int c = 0;
  int n = 0;
  int t = 0;
  std::int64_t lower_bound = 0;
  std::int64_t closed_form = 0;
  Label max_label = 0;
  bool verified = false;
  bool profile_consecutive = false;
  std::string violation;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Base weight of the consecutive profile each construction produces.
inline Weight profile_base(LabelingKind kind, const CoverShape& shape) {
  switch (kind) {
    case LabelingKind::Vertex: return shape.window_vertices();
    case LabelingKind::Edge: return shape.window_edges();
    case LabelingKind::Total: return shape.window_vertices() + shape.window_edges();
  }
  return 0;
}

inline SweepRow sweep_row(LabelingKind kind, const CoverShape& shape, TotalVariant variant) {
  SweepRow row;
  row.kind = kind;
  row.m = shape.m();
  row.c = shape.c();
  row.n = shape.n();
  row.t = shape.t();
  row.lower_bound = bound_report(kind, shape).lower;
  row.closed_form = closed_form_strength(kind, shape);
  auto family = enumerate_windows(shape);
  auto labeling = construct_labeling(kind, shape, variant);
  row.max_label = labeling.max_label();
  auto verdict = verify_irregular(labeling, family);
  row.verified = verdict.accepted;
  if (verdict.violation) row.violation = describe(*verdict.violation);
  row.profile_consecutive =
      is_consecutive_run(weight_profile(labeling, family), profile_base(kind, shape));
  return row;
}

/// Rows for every in-scope (m, c, n) in the ranges, lexicographic in
/// (m, c, n) and then in `kinds` order. Out-of-scope triples are skipped.
inline std::vector<SweepRow> sweep(const std::vector<LabelingKind>& kinds, IntRange ms,
                                   IntRange cs, IntRange ns,
                                   TotalVariant variant = TotalVariant::Corrected) {
  std::vector<SweepRow> rows;
  for (int m = std::max(ms.lo, 2); m <= ms.hi; ++m) {
    for (int c = std::max(cs.lo, m); c <= cs.hi; ++c) {
      for (int n = std::max(ns.lo, c); n <= ns.hi; ++n) {
        auto shape = CoverShape::checked(m, c, n);
        for (auto kind : kinds) rows.push_back(sweep_row(kind, shape, variant));
      }
    }
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "kind,m,c,n,t,lower_bound,closed_form,max_label,verified,profile_consecutive,violation\n";
  for (const auto& r : rows) {
    out << to_string(r.kind) << ',' << r.m << ',' << r.c << ',' << r.n << ',' << r.t << ','
        << r.lower_bound << ',' << r.closed_form << ',' << r.max_label << ','
        << (r.verified ? 1 : 0) << ',' << (r.profile_consecutive ? 1 : 0) << ",\""
        << r.violation << "\"\n";
  }
  return out.str();
}

}  // namespace hirreg
