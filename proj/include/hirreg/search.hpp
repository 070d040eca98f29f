#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hirreg/bounds.hpp"
#include "hirreg/covering.hpp"
#include "hirreg/labeling.hpp"
#include "hirreg/verify.hpp"

namespace hirreg {

struct SearchOptions {
  /// Refuse instances whose raw space k^elements exceeds 2^cap_bits.
  int cap_bits = 38;
  /// min_strength starts at the covering lower bound instead of k = 1.
  bool start_at_lower_bound = true;
  /// Prune with the interval matching test in addition to completed-member
  /// collisions. Off gives a plain enumerate-and-compare search.
  bool interval_pruning = true;
};

struct SearchResult {
  std::optional<Label> minimal_k;  // nullopt: none up to k_max
  std::optional<Labeling> witness;
  std::uint64_t nodes_explored = 0;
  Label first_k_searched = 1;
};

/// Elements sorted by the largest column they touch, then canonical order.
/// Grid windows then complete left to right, which is what makes the
/// collision cut bite early.
inline std::vector<Element> search_order(const Graph& host, LabelingKind kind) {
  auto elements = labeled_domain(host, kind);
  auto column = [](const Element& e) {
    if (const auto* v = std::get_if<VertexId>(&e)) return v->j;
    const auto& edge = std::get<EdgeId>(e);
    return std::max(edge.a().j, edge.b().j);
  };
  std::stable_sort(elements.begin(), elements.end(), [&](const Element& x, const Element& y) {
    return column(x) < column(y);
  });
  return elements;
}

namespace detail {

inline bool within_cap(Label k, std::size_t elements, int cap_bits) {
  if (k <= 1) return true;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << cap_bits;
  unsigned __int128 space = 1;
  for (std::size_t idx = 0; idx < elements; ++idx) {
    space *= static_cast<unsigned __int128>(k);
    if (space > cap) return false;
  }
  return true;
}

class IrregularSearch {
 public:
  IrregularSearch(const CoverFamily& family, LabelingKind kind, Label k, bool interval_pruning)
      : k_(k), interval_pruning_(interval_pruning) {
    order_ = search_order(family.host(), kind);
    std::map<Element, int> position;
    for (int p = 0; p < static_cast<int>(order_.size()); ++p) position.emplace(order_[p], p);

    incidence_.assign(order_.size(), {});
    const int t = family.t();
    partial_.assign(t, 0);
    remaining_.assign(t, 0);
    std::int64_t largest = 0;
    for (int l = 0; l < t; ++l) {
      const auto& member = family.members()[l];
      auto attach = [&](const Element& e) {
        incidence_[position.at(e)].push_back(l);
        ++remaining_[l];
      };
      if (labels_vertices(kind)) {
        for (auto v : member.vertices()) attach(v);
      }
      if (labels_edges(kind)) {
        for (const auto& e : member.edges()) attach(e);
      }
      largest = std::max<std::int64_t>(largest, remaining_[l]);
    }
    used_.assign(static_cast<std::size_t>(k * largest + 1), 0);
    scratch_.resize(used_.size());
    assignment_.assign(order_.size(), 0);
  }

  std::optional<std::vector<Label>> run() {
    // Members with nothing to label are complete at weight 0 from the start.
    for (std::size_t l = 0; l < remaining_.size(); ++l) {
      if (remaining_[l] == 0) {
        if (used_[0]) return std::nullopt;
        used_[0] = 1;
      }
    }
    ++nodes_;
    if (interval_pruning_ && !intervals_feasible()) return std::nullopt;
    if (!descend(0)) return std::nullopt;
    return assignment_;
  }

  const std::vector<Element>& order() const { return order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const auto& members = incidence_[pos];
    for (Label x = 1; x <= k_; ++x) {
      ++nodes_;
      assignment_[pos] = x;
      // A member completing onto an already-taken weight cuts the branch.
      std::size_t applied = 0;
      bool clash = false;
      for (; applied < members.size(); ++applied) {
        const int l = members[applied];
        partial_[l] += x;
        if (--remaining_[l] == 0) {
          if (used_[static_cast<std::size_t>(partial_[l])]) {
            clash = true;
            ++applied;
            break;
          }
          used_[static_cast<std::size_t>(partial_[l])] = 1;
        }
      }
      if (!clash && (!interval_pruning_ || intervals_feasible()) && descend(pos + 1)) return true;
      for (std::size_t idx = applied; idx-- > 0;) {
        const int l = members[idx];
        const bool clashed_here = clash && idx + 1 == applied;
        if (remaining_[l] == 0 && !clashed_here) used_[static_cast<std::size_t>(partial_[l])] = 0;
        ++remaining_[l];
        partial_[l] -= x;
      }
    }
    assignment_[pos] = 0;
    return false;
  }

  /// Every incomplete member must still be able to take a distinct weight
  /// in [partial + remaining, partial + remaining * k] that no completed
  /// member holds. Greedy by right endpoint decides this exactly for
  /// intervals.
  bool intervals_feasible() {
    open_.clear();
    for (std::size_t l = 0; l < remaining_.size(); ++l) {
      if (remaining_[l] == 0) continue;
      open_.push_back({partial_[l] + remaining_[l], partial_[l] + remaining_[l] * k_});
    }
    if (open_.empty()) return true;
    std::sort(open_.begin(), open_.end(), [](const Interval& a, const Interval& b) {
      return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
    });
    std::copy(used_.begin(), used_.end(), scratch_.begin());
    for (const auto& interval : open_) {
      Weight p = interval.lo;
      while (p <= interval.hi && scratch_[static_cast<std::size_t>(p)]) ++p;
      if (p > interval.hi) return false;
      scratch_[static_cast<std::size_t>(p)] = 1;
    }
    return true;
  }

  struct Interval {
    Weight lo;
    Weight hi;
  };

  Label k_;
  bool interval_pruning_;
  std::vector<Element> order_;
  std::vector<std::vector<int>> incidence_;
  std::vector<Weight> partial_;
  std::vector<std::int64_t> remaining_;
  std::vector<char> used_;
  std::vector<char> scratch_;
  std::vector<Interval> open_;
  std::vector<Label> assignment_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether `family` admits an irregular labeling of `kind` with all
/// labels in 1..k. The witness returned is the lexicographically smallest
/// label vector in search_order() and has been checked by verify_irregular.
/// Instances over the size cap raise ResourceLimit rather than answering.
inline std::optional<Labeling> exists_irregular(const CoverFamily& family, LabelingKind kind,
                                                Label k, const SearchOptions& options = {},
                                                std::uint64_t* nodes_explored = nullptr) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "label budget k must be positive");
  if (options.cap_bits < 0 || options.cap_bits > 120) {
    throw Error(ErrorCode::InvalidParameter, "cap_bits must lie in 0..120");
  }
  auto covering = is_edge_covering(family);
  if (!covering.covered) {
    throw Error(ErrorCode::MalformedFamily,
                "family does not cover edge " + to_string(covering.uncovered.front()));
  }
  const auto domain_size = labeled_domain(family.host(), kind).size();
  if (!detail::within_cap(k, domain_size, options.cap_bits)) {
    throw Error(ErrorCode::ResourceLimit,
                std::to_string(domain_size) + " elements at k=" + std::to_string(k) +
                    " exceed the search cap of 2^" + std::to_string(options.cap_bits) +
                    " labelings");
  }
  detail::IrregularSearch search(family, kind, k, options.interval_pruning);
  auto found = search.run();
  if (nodes_explored) *nodes_explored += search.nodes();
  if (!found) return std::nullopt;

  Labeling witness(kind, k);
  for (std::size_t p = 0; p < search.order().size(); ++p) witness.set(search.order()[p], (*found)[p]);
  auto verdict = verify_irregular(witness, family);
  if (!verdict.accepted) {
    throw std::logic_error("search produced a labeling the verifier rejects: " +
                           describe(*verdict.violation));
  }
  return witness;
}

/// Covering lower bound for `family`, or 1 when members differ in size
/// (the bound assumes every member is a copy of one pattern).
inline Label family_lower_bound(const CoverFamily& family, LabelingKind kind) {
  const auto& first = family.members().front();
  for (const auto& member : family.members()) {
    if (member.vertices().size() != first.vertices().size() ||
        member.edges().size() != first.edges().size()) {
      return 1;
    }
  }
  const auto vh = static_cast<std::int64_t>(first.vertices().size());
  const auto eh = static_cast<std::int64_t>(first.edges().size());
  if ((kind == LabelingKind::Vertex && vh == 0) || (kind == LabelingKind::Edge && eh == 0) ||
      vh + eh == 0) {
    return 1;
  }
  return lower_bound(kind, family.t(), vh, eh);
}

/// Smallest k <= k_max admitting an irregular labeling. Budgets below the
/// covering lower bound are skipped unless the options disable it.
inline SearchResult min_strength(const CoverFamily& family, LabelingKind kind, Label k_max,
                                 const SearchOptions& options = {}) {
  if (k_max < 1) throw Error(ErrorCode::InvalidParameter, "k_max must be positive");
  SearchResult result;
  result.first_k_searched = options.start_at_lower_bound ? family_lower_bound(family, kind) : 1;
  for (Label k = result.first_k_searched; k <= k_max; ++k) {
    if (auto witness = exists_irregular(family, kind, k, options, &result.nodes_explored)) {
      result.minimal_k = k;
      result.witness = std::move(witness);
      break;
    }
  }
  return result;
}

}  // namespace hirreg
