#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hirreg/error.hpp"
#include "hirreg/grid.hpp"

namespace hirreg {

using Label = std::int64_t;
using Weight = std::int64_t;

enum class LabelingKind { Vertex, Edge, Total };

inline constexpr LabelingKind kAllKinds[] = {LabelingKind::Vertex, LabelingKind::Edge,
                                             LabelingKind::Total};

inline const char* to_string(LabelingKind kind) {
  switch (kind) {
    case LabelingKind::Vertex: return "vertex";
    case LabelingKind::Edge: return "edge";
    case LabelingKind::Total: return "total";
  }
  return "unknown";
}

inline LabelingKind parse_kind(std::string_view text) {
  if (text == "vertex") return LabelingKind::Vertex;
  if (text == "edge") return LabelingKind::Edge;
  if (text == "total") return LabelingKind::Total;
  throw Error(ErrorCode::Parse, "unknown labeling kind '" + std::string(text) + "'");
}

inline bool labels_vertices(LabelingKind kind) { return kind != LabelingKind::Edge; }
inline bool labels_edges(LabelingKind kind) { return kind != LabelingKind::Vertex; }

/// A labelled graph element. Variant ordering puts all vertices before all
/// edges, which is the canonical element order.
using Element = std::variant<VertexId, EdgeId>;

inline std::string to_string(const Element& element) {
  return std::visit([](const auto& x) { return to_string(x); }, element);
}

/// Elements of `host` that a labeling of `kind` must assign, in canonical order.
inline std::vector<Element> labeled_domain(const Graph& host, LabelingKind kind) {
  std::vector<Element> domain;
  if (labels_vertices(kind)) {
    for (auto v : host.vertices()) domain.emplace_back(v);
  }
  if (labels_edges(kind)) {
    for (const auto& e : host.edges()) domain.emplace_back(e);
  }
  return domain;
}

/// Labels are not clamped to {1..k}: out-of-budget labels are representable
/// so that the verifier can report them.
class Labeling {
 public:
  Labeling(LabelingKind kind, Label k) : kind_(kind), k_(k) {
    if (k < 1) {
      throw Error(ErrorCode::InvalidParameter, "label budget k must be positive");
    }
  }

  LabelingKind kind() const { return kind_; }
  Label k() const { return k_; }
  const std::map<Element, Label>& labels() const { return labels_; }

  void set(const Element& element, Label label) {
    if (std::holds_alternative<VertexId>(element) ? !labels_vertices(kind_)
                                                  : !labels_edges(kind_)) {
      throw Error(ErrorCode::InvalidParameter, "a " + std::string(to_string(kind_)) +
                                                   " labeling cannot label " +
                                                   to_string(element));
    }
    labels_[element] = label;
  }

  std::optional<Label> get(const Element& element) const {
    auto it = labels_.find(element);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }

  Label max_label() const {
    Label best = 0;
    for (const auto& [element, label] : labels_) best = std::max(best, label);
    return best;
  }

  Label min_label() const {
    if (labels_.empty()) return 0;
    Label best = labels_.begin()->second;
    for (const auto& [element, label] : labels_) best = std::min(best, label);
    return best;
  }

  bool operator==(const Labeling&) const = default;

 private:
  LabelingKind kind_;
  Label k_;
  std::map<Element, Label> labels_;
};

/// Throws unless `labeling` assigns exactly the elements its kind requires on `host`.
inline void check_domain(const Labeling& labeling, const Graph& host) {
  auto domain = labeled_domain(host, labeling.kind());
  for (const auto& element : domain) {
    if (!labeling.labels().contains(element)) {
      throw Error(ErrorCode::IncompleteLabeling, "no label for " + to_string(element));
    }
  }
  if (labeling.labels().size() != domain.size()) {
    for (const auto& [element, label] : labeling.labels()) {
      bool present = std::visit([&](const auto& x) { return host.contains(x); }, element);
      if (!present) {
        throw Error(ErrorCode::InvalidParameter,
                    "label given for " + to_string(element) + " which is not in the host");
      }
    }
  }
}

}  // namespace hirreg
