#include <gtest/gtest.h>

#include <limits>

#include "hirreg/construct.hpp"
#include "hirreg/verify.hpp"
#include "reference.hpp"

using namespace hirreg;

namespace {

Labeling all_ones(LabelingKind kind, const Graph& host, Label k = 1) {
  Labeling l(kind, k);
  for (const auto& e : labeled_domain(host, kind)) l.set(e, 1);
  return l;
}

}  // namespace

TEST(SubgraphWeight, VertexConstructionSmallest) {
  auto shape = CoverShape::checked(2, 2, 3);
  auto family = enumerate_windows(shape);
  auto l = construct_vertex_labeling(shape);
  EXPECT_EQ(subgraph_weight(l, family.member(1)), 4);
  EXPECT_EQ(subgraph_weight(l, family.member(2)), 5);
}

TEST(SubgraphWeight, EdgeConstructionSmallest) {
  auto shape = CoverShape::checked(2, 2, 3);
  auto l = construct_edge_labeling(shape);
  EXPECT_EQ(subgraph_weight(l, enumerate_windows(shape).member(1)), 4);
}

TEST(SubgraphWeight, AllOnesTotalCountsElements) {
  for (auto [m, c] : {std::pair{2, 2}, {2, 5}, {3, 4}, {4, 6}}) {
    auto shape = CoverShape::checked(m, c, c + 2);
    auto family = enumerate_windows(shape);
    auto l = all_ones(LabelingKind::Total, family.host());
    EXPECT_EQ(subgraph_weight(l, family.member(2)), 3 * m * c - m - c);
  }
}

TEST(SubgraphWeight, MissingLabel) {
  auto shape = CoverShape::checked(2, 2, 3);
  auto family = enumerate_windows(shape);
  Labeling partial(LabelingKind::Vertex, 2);
  partial.set(VertexId{1, 1}, 1);
  try {
    subgraph_weight(partial, family.member(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteLabeling);
  }
}

TEST(SubgraphWeight, Additivity) {
  auto shape = CoverShape::checked(3, 4, 10);
  auto family = enumerate_windows(shape);
  const auto& w = family.member(3);

  auto vl = construct_vertex_labeling(shape);
  std::vector<VertexId> left, right;
  for (auto v : w.vertices()) (v.j < 5 ? left : right).push_back(v);
  EXPECT_EQ(subgraph_weight(vl, Subgraph(left, {})) + subgraph_weight(vl, Subgraph(right, {})),
            subgraph_weight(vl, w));

  auto el = construct_edge_labeling(shape);
  std::vector<EdgeId> vertical, horizontal;
  for (const auto& e : w.edges()) (e.vertical() ? vertical : horizontal).push_back(e);
  std::vector<VertexId> all(w.vertices().begin(), w.vertices().end());
  EXPECT_EQ(subgraph_weight(el, Subgraph(all, vertical)) + subgraph_weight(el, Subgraph(all, horizontal)),
            subgraph_weight(el, w));
}

TEST(SubgraphWeight, OverflowIsAnError) {
  auto family = enumerate_windows(CoverShape::checked(2, 2, 3));
  auto l = all_ones(LabelingKind::Vertex, family.host(), std::numeric_limits<Label>::max());
  l.set(VertexId{1, 1}, std::numeric_limits<Label>::max());
  l.set(VertexId{1, 2}, std::numeric_limits<Label>::max());
  EXPECT_THROW(subgraph_weight(l, family.member(1)), Error);
}

TEST(WeightProfile, ConsecutiveRunsMatchReference) {
  using RK = reference::Kind;
  const std::pair<LabelingKind, RK> kinds[] = {
      {LabelingKind::Vertex, RK::Vertex}, {LabelingKind::Edge, RK::Edge}, {LabelingKind::Total, RK::Total}};
  for (auto [kind, rk] : kinds) {
    for (int m = 2; m <= 4; ++m) {
      for (int c = m; c <= 6; ++c) {
        for (int n = c; n <= 16; ++n) {
          auto shape = CoverShape::checked(m, c, n);
          auto profile = weight_profile(construct_labeling(kind, shape), enumerate_windows(shape));
          auto expected = reference::profile(reference::formula_labels(rk, m, c, n), rk, c);
          ASSERT_EQ(profile, WeightProfile(expected.begin(), expected.end()));
          const Weight base = kind == LabelingKind::Vertex ? m * c
                              : kind == LabelingKind::Edge ? 2 * m * c - m - c
                                                           : 3 * m * c - m - c;
          ASSERT_TRUE(is_consecutive_run(profile, base)) << m << "," << c << "," << n;
        }
      }
    }
  }
}

TEST(VerifyIrregular, AcceptsConstructions) {
  auto shape = CoverShape::checked(3, 3, 11);
  auto family = enumerate_windows(shape);
  for (auto kind : kAllKinds) {
    auto verdict = verify_irregular(construct_labeling(kind, shape), family);
    EXPECT_TRUE(verdict.accepted);
    EXPECT_FALSE(verdict.violation.has_value());
  }
}

TEST(VerifyIrregular, AllOnesCollidesOnFirstPair) {
  auto family = enumerate_windows(CoverShape::checked(2, 2, 5));
  for (auto kind : kAllKinds) {
    auto verdict = verify_irregular(all_ones(kind, family.host(), 3), family);
    ASSERT_FALSE(verdict.accepted);
    ASSERT_TRUE(verdict.violation);
    auto hit = std::get<Collision>(*verdict.violation);
    EXPECT_EQ(hit.l1, 1);
    EXPECT_EQ(hit.l2, 2);
  }
}

TEST(VerifyIrregular, BudgetBreachIsRangeViolation) {
  auto shape = CoverShape::checked(2, 3, 7);
  auto family = enumerate_windows(shape);
  auto l = construct_edge_labeling(shape);
  auto target = canonical_edge({2, 4}, {2, 5});
  l.set(target, l.k() + 1);
  auto verdict = verify_irregular(l, family);
  ASSERT_FALSE(verdict.accepted);
  auto range = std::get<RangeViolation>(*verdict.violation);
  EXPECT_EQ(range.element, Element(target));
  EXPECT_EQ(range.label, l.k() + 1);
  EXPECT_EQ(range.k, l.k());
}

TEST(VerifyIrregular, RangeReportedBeforeCollision) {
  auto family = enumerate_windows(CoverShape::checked(2, 2, 4));
  auto l = all_ones(LabelingKind::Vertex, family.host(), 2);
  l.set(VertexId{2, 4}, 0);
  l.set(VertexId{1, 3}, 5);
  auto verdict = verify_irregular(l, family);
  auto range = std::get<RangeViolation>(*verdict.violation);
  EXPECT_EQ(range.element, Element(VertexId{1, 3}));  // canonical order: row 1 first
}

TEST(VerifyIrregular, UncoveringFamilyIsMalformed) {
  auto grid = make_grid({2, 4});
  CoverFamily partial(grid, {window_subgraph(2, 2, 1), window_subgraph(2, 2, 2)});
  Labeling l = all_ones(LabelingKind::Vertex, grid);
  try {
    verify_irregular(l, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedFamily);
  }
}

TEST(VerifyIrregular, ForeignOrMissingElements) {
  auto shape = CoverShape::checked(2, 2, 3);
  auto family = enumerate_windows(shape);
  auto l = construct_vertex_labeling(shape);
  l.set(VertexId{3, 1}, 1);
  EXPECT_THROW(verify_irregular(l, family), Error);

  Labeling sparse(LabelingKind::Vertex, 2);
  sparse.set(VertexId{1, 1}, 1);
  try {
    verify_irregular(sparse, family);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteLabeling);
  }
}

TEST(FirstCollision, LexicographicallySmallestPair) {
  EXPECT_FALSE(first_collision({1, 2, 3}));
  auto a = first_collision({5, 3, 5, 3});
  EXPECT_EQ(a->l1, 1);
  EXPECT_EQ(a->l2, 3);
  auto b = first_collision({3, 7, 7, 3});
  EXPECT_EQ(b->l1, 1);
  EXPECT_EQ(b->l2, 4);
  auto c = first_collision({9, 7, 8, 7, 9});
  EXPECT_EQ(c->l1, 1);
  EXPECT_EQ(c->l2, 5);
  auto d = first_collision({4, 6, 6, 6});
  EXPECT_EQ(d->l1, 2);
  EXPECT_EQ(d->l2, 3);
}

TEST(VerifyIrregular, GeneralGraphFamily) {
  // Path u_1^1 - u_1^2 - u_1^3 - u_1^4 covered by its three edges.
  std::vector<VertexId> vs{{1, 1}, {1, 2}, {1, 3}, {1, 4}};
  std::vector<EdgeId> es{EdgeId::between({1, 1}, {1, 2}), EdgeId::between({1, 2}, {1, 3}),
                         EdgeId::between({1, 3}, {1, 4})};
  Graph path(vs, es);
  std::vector<Subgraph> members;
  for (std::size_t idx = 0; idx < es.size(); ++idx) {
    members.emplace_back(std::vector<VertexId>{es[idx].a(), es[idx].b()}, std::vector<EdgeId>{es[idx]});
  }
  CoverFamily family(path, members);
  Labeling l(LabelingKind::Vertex, 2);
  l.set(VertexId{1, 1}, 1);
  l.set(VertexId{1, 2}, 1);
  l.set(VertexId{1, 3}, 2);
  l.set(VertexId{1, 4}, 2);
  EXPECT_TRUE(verify_irregular(l, family).accepted);  // weights 2, 3, 4
}
