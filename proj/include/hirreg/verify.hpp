#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hirreg/covering.hpp"
#include "hirreg/labeling.hpp"

namespace hirreg {

using WeightProfile = std::vector<Weight>;

namespace detail {

inline Weight checked_add(Weight acc, Label label) {
  Weight out = 0;
  if (__builtin_add_overflow(acc, label, &out)) {
    throw Error(ErrorCode::InvalidParameter, "subgraph weight overflows 64 bits");
  }
  return out;
}

inline Label require_label(const Labeling& labeling, const Element& element) {
  auto label = labeling.get(element);
  if (!label) throw Error(ErrorCode::IncompleteLabeling, "no label for " + to_string(element));
  return *label;
}

}  // namespace detail

/// Sum of labels over the member's vertices, edges, or both, depending on the
/// labeling kind.
inline Weight subgraph_weight(const Labeling& labeling, const Subgraph& member) {
  Weight weight = 0;
  if (labels_vertices(labeling.kind())) {
    for (auto v : member.vertices()) {
      weight = detail::checked_add(weight, detail::require_label(labeling, v));
    }
  }
  if (labels_edges(labeling.kind())) {
    for (const auto& e : member.edges()) {
      weight = detail::checked_add(weight, detail::require_label(labeling, e));
    }
  }
  return weight;
}

inline WeightProfile weight_profile(const Labeling& labeling, const CoverFamily& family) {
  WeightProfile profile;
  profile.reserve(family.members().size());
  for (const auto& member : family.members()) profile.push_back(subgraph_weight(labeling, member));
  return profile;
}

/// True iff profile == base, base+1, ..., base+size-1.
inline bool is_consecutive_run(const WeightProfile& profile, Weight base) {
  for (std::size_t l = 0; l < profile.size(); ++l) {
    if (profile[l] != base + static_cast<Weight>(l)) return false;
  }
  return true;
}

struct RangeViolation {
  Element element;
  Label label = 0;
  Label k = 0;

  bool operator==(const RangeViolation&) const = default;
};

/// Members l1 < l2 (1-based) share a weight.
struct Collision {
  int l1 = 0;
  int l2 = 0;
  Weight weight = 0;

  bool operator==(const Collision&) const = default;
};

using Violation = std::variant<RangeViolation, Collision>;

struct Verdict {
  bool accepted = false;
  std::optional<Violation> violation;
};

inline std::string describe(const Violation& violation) {
  if (const auto* range = std::get_if<RangeViolation>(&violation)) {
    return "range violation: " + to_string(range->element) + " has label " +
           std::to_string(range->label) + " outside 1.." + std::to_string(range->k);
  }
  const auto& hit = std::get<Collision>(violation);
  return "collision: members " + std::to_string(hit.l1) + " and " + std::to_string(hit.l2) +
         " both weigh " + std::to_string(hit.weight);
}

/// Lexicographically smallest pair (l1, l2) of members with equal weight.
inline std::optional<Collision> first_collision(const WeightProfile& profile) {
  std::map<Weight, int> first_seen;
  std::optional<Collision> best;
  for (int l = 1; l <= static_cast<int>(profile.size()); ++l) {
    auto [it, fresh] = first_seen.emplace(profile[l - 1], l);
    if (fresh) continue;
    Collision candidate{it->second, l, profile[l - 1]};
    // Each l1 is reported with its earliest partner, so comparing l1 suffices.
    if (!best || candidate.l1 < best->l1) best = candidate;
  }
  return best;
}

/// Accepts iff every label lies in 1..k and all member weights are pairwise
/// distinct. Range violations are reported before collisions; the first in
/// canonical element order wins.
inline Verdict verify_irregular(const Labeling& labeling, const CoverFamily& family) {
  auto covering = is_edge_covering(family);
  if (!covering.covered) {
    throw Error(ErrorCode::MalformedFamily,
                "family does not cover edge " + to_string(covering.uncovered.front()));
  }
  check_domain(labeling, family.host());
  for (const auto& [element, label] : labeling.labels()) {
    if (label < 1 || label > labeling.k()) {
      return {false, RangeViolation{element, label, labeling.k()}};
    }
  }
  if (auto hit = first_collision(weight_profile(labeling, family))) {
    return {false, *hit};
  }
  return {true, std::nullopt};
}

}  // namespace hirreg
