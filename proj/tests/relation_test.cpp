#include "coincide/error.hpp"
#include "coincide/relation.hpp"

#include <gtest/gtest.h>

#include <queue>

using namespace coincide;

namespace {

std::vector<Edge> edge_list(const FiniteRelation& r) { return r.edges(); }

// Reachability by length >= 1 paths, computed with Warshall's algorithm.
std::vector<std::vector<bool>> reach(const FiniteRelation& r) {
  const std::size_t n = r.ground_size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (const auto& [x, y] : r.edges())
    m[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][k] && m[k][j])
          m[i][j] = true;
  return m;
}

FiniteRelation from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < n * n; ++c)
    if (mask >> c & 1)
      edges.emplace_back(c / n, c % n);
  return FiniteRelation(n, edges);
}

} // namespace

TEST(FiniteRelation, RejectsEmptyAndOutOfRange) {
  EXPECT_THROW(FiniteRelation(3, std::span<const Edge>{}), InputError);
  EXPECT_THROW(FiniteRelation(2, {{0, 2}}), InputError);
  EXPECT_THROW(FiniteRelation(0, {{0, 0}}), InputError);
}

TEST(FiniteRelation, MergesDuplicatesAndSorts) {
  const FiniteRelation r(3, {{1, 2}, {0, 1}, {1, 2}});
  EXPECT_EQ(edge_list(r), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Inverse, TransposesEdges) {
  EXPECT_EQ(edge_list(inverse(FiniteRelation(3, {{0, 1}, {1, 2}}))), (std::vector<Edge>{{1, 0}, {2, 1}}));
  const FiniteRelation sym(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(inverse(sym), sym);
}

TEST(Inverse, ExampleTwoRelationOnIntegers) {
  // Points -3..3 at indices 0..6; (x, y) in R iff x >= 0.
  std::vector<Edge> edges;
  for (PointId x = 3; x < 7; ++x)
    for (PointId y = 0; y < 7; ++y)
      edges.emplace_back(x, y);
  const FiniteRelation inv = inverse(FiniteRelation(7, edges));
  for (PointId x = 0; x < 7; ++x)
    for (PointId y = 0; y < 7; ++y)
      EXPECT_EQ(inv.contains(x, y), y >= 3) << x << "," << y;
}

TEST(SymmetricClosure, Basics) {
  EXPECT_EQ(edge_list(symmetric_closure(FiniteRelation(2, {{0, 1}}))), (std::vector<Edge>{{0, 1}, {1, 0}}));
  const FiniteRelation sym(3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_EQ(symmetric_closure(sym), sym);
  const std::vector<Edge> e = {{0, 1}};
  EXPECT_EQ(symmetric_closure_of(2, e), FiniteRelation(2, {{0, 1}, {1, 0}}));
}

TEST(SymmetricClosure, AgreesWithComparativeOnAllRelationsUpToThreePoints) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const FiniteRelation r = from_mask(n, mask);
      const FiniteRelation s = symmetric_closure(r);
      for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y) {
          const bool direct = (mask >> (x * n + y) & 1) || (mask >> (y * n + x) & 1);
          ASSERT_EQ(s.contains(x, y), direct);
          ASSERT_EQ(comparative(r, x, y), direct);
        }
    }
  }
}

TEST(Restrict, KeepsPairsInsideTheSubset) {
  const FiniteRelation r(3, {{0, 1}, {1, 2}});
  const PointSet e = {0, 1};
  const Restriction res = restrict(r, e);
  EXPECT_EQ(edge_list(res.relation), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(res.members, e);

  const PointSet all = {0, 1, 2};
  EXPECT_EQ(restrict(r, all).relation, r);
}

TEST(Restrict, ReindexesAndReportsLocalIndices) {
  const FiniteRelation r(4, {{1, 3}, {3, 3}, {0, 2}});
  const PointSet e = {1, 3};
  const Restriction res = restrict(r, e);
  EXPECT_EQ(edge_list(res.relation), (std::vector<Edge>{{0, 1}, {1, 1}}));
  EXPECT_EQ(res.local_index(3), std::optional<PointId>(1));
  EXPECT_EQ(res.local_index(2), std::nullopt);
}

TEST(Restrict, EmptyDomainIsAnError) {
  const FiniteRelation r(2, {{0, 1}});
  try {
    restrict(r, PointSet{});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "empty restriction domain");
  }
  EXPECT_THROW(restrict(r, PointSet{5}), DomainError);
}

TEST(Restrict, ClosureOfRestrictionInsideRestrictionOfClosure) {
  for (std::uint64_t mask = 1; mask < 512; mask += 7) {
    const FiniteRelation r = from_mask(3, mask);
    for (std::uint64_t emask = 1; emask < 8; ++emask) {
      PointSet e;
      for (PointId x = 0; x < 3; ++x)
        if (emask >> x & 1)
          e.push_back(x);
      const FiniteRelation lhs = restrict(symmetric_closure(r), e).relation;
      const FiniteRelation rhs = symmetric_closure(restrict(r, e).relation);
      for (const auto& [x, y] : rhs.edges())
        EXPECT_TRUE(lhs.contains(x, y));
      if (e.size() == 3)
        EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Comparative, BasicCases) {
  const FiniteRelation r(3, {{0, 1}});
  EXPECT_TRUE(comparative(r, 0, 1));
  EXPECT_TRUE(comparative(r, 1, 0));
  EXPECT_FALSE(comparative(r, 1, 2));
}

TEST(Classify, UniversalRelationIsCompleteEquivalence) {
  const RelationClass c = classify(universal_relation(3));
  EXPECT_TRUE(c.equivalence);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(c.preorder);
  EXPECT_FALSE(c.antisymmetric);
}

TEST(Classify, SingleLoop) {
  const RelationClass c = classify(FiniteRelation(1, {{0, 0}}));
  EXPECT_TRUE(c.reflexive);
  EXPECT_TRUE(c.symmetric);
  EXPECT_TRUE(c.transitive);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(c.equivalence);
  EXPECT_TRUE(c.total_order);
}

TEST(Classify, ExampleTwoRelationOnIntegers) {
  std::vector<Edge> edges;
  for (PointId x = 3; x < 7; ++x)
    for (PointId y = 0; y < 7; ++y)
      edges.emplace_back(x, y);
  const RelationClass c = classify(FiniteRelation(7, edges));
  EXPECT_TRUE(c.transitive);
  EXPECT_FALSE(c.reflexive);
  EXPECT_FALSE(c.irreflexive);
  EXPECT_FALSE(c.symmetric);
  EXPECT_FALSE(c.antisymmetric);
}

TEST(Classify, ComparatorLessEqualIsTotalOrder) {
  const FiniteRelation r = relation_from_comparator(3, [](PointId a, PointId b) { return a <= b; });
  EXPECT_EQ(r.edges().size(), 6u);
  EXPECT_TRUE(classify(r).total_order);
}

TEST(Classify, FlagsAgreeWithQuantifiersOnAllThreePointRelations) {
  const std::size_t n = 3;
  for (std::uint64_t mask = 1; mask < 512; ++mask) {
    const FiniteRelation r = from_mask(n, mask);
    auto in = [&](PointId x, PointId y) { return (mask >> (x * n + y) & 1) != 0; };
    bool refl = true, irrefl = true, sym = true, anti = true, trans = true, comp = true, weak = true;
    for (PointId x = 0; x < n; ++x) {
      refl = refl && in(x, x);
      irrefl = irrefl && !in(x, x);
      for (PointId y = 0; y < n; ++y) {
        sym = sym && (!in(x, y) || in(y, x));
        anti = anti && (!(in(x, y) && in(y, x)) || x == y);
        comp = comp && (in(x, y) || in(y, x));
        weak = weak && (x == y || in(x, y) || in(y, x));
        for (PointId z = 0; z < n; ++z)
          trans = trans && (!(in(x, y) && in(y, z)) || in(x, z));
      }
    }
    const RelationClass c = classify(r);
    ASSERT_EQ(c.reflexive, refl) << mask;
    ASSERT_EQ(c.irreflexive, irrefl) << mask;
    ASSERT_EQ(c.symmetric, sym) << mask;
    ASSERT_EQ(c.antisymmetric, anti) << mask;
    ASSERT_EQ(c.transitive, trans) << mask;
    ASSERT_EQ(c.complete, comp) << mask;
    ASSERT_EQ(c.weakly_complete, weak) << mask;
    ASSERT_EQ(c.preorder, refl && trans);
    ASSERT_EQ(c.partial_order, refl && trans && anti);
    ASSERT_EQ(c.equivalence, refl && trans && sym);
    ASSERT_EQ(c.tolerance, refl && sym);
    ASSERT_EQ(c.strict_order, irrefl && trans);
    ASSERT_EQ(c.total_order, comp && refl && trans && anti);
  }
}

TEST(FgClosed, IdentityMapsAndT3) {
  const FiniteRelation r(3, {{0, 0}, {0, 1}, {1, 2}});
  EXPECT_TRUE(is_fg_closed(r, {0, 1, 2}, {0, 1, 2}));
  EXPECT_TRUE(is_fg_closed(r, {0, 0, 1}, {0, 1, 2}));
}

TEST(FgClosed, ReportsFirstViolation) {
  const FiniteRelation r(2, {{0, 1}});
  // g = id, f swaps: (g0, g1) = (0,1) in R but (f0, f1) = (1,0) is not.
  EXPECT_EQ(fg_closed_violation(r, {1, 0}, {0, 1}), std::optional<Edge>(Edge{0, 1}));
  EXPECT_THROW(fg_closed_violation(r, {0}, {0, 1}), DomainError);
}

TEST(FindPath, ShortestLexicographic) {
  EXPECT_EQ(find_path(FiniteRelation(3, {{0, 1}, {1, 2}}), 0, 2)->nodes, (std::vector<PointId>{0, 1, 2}));
  EXPECT_FALSE(find_path(FiniteRelation(2, {{0, 1}}), 1, 0));
  const FiniteRelation diamond(4, {{0, 2}, {0, 1}, {2, 3}, {1, 3}});
  EXPECT_EQ(find_path(diamond, 0, 3)->nodes, (std::vector<PointId>{0, 1, 3}));
}

TEST(FindPath, CompleteRelationGivesLengthOne) {
  const FiniteRelation r = universal_relation(4);
  for (PointId i = 0; i < 4; ++i)
    for (PointId j = 0; j < 4; ++j)
      if (i != j)
        EXPECT_EQ(find_path(r, i, j)->length(), 1u);
}

TEST(FindPath, EqualEndpointsNeedACycle) {
  EXPECT_FALSE(find_path(FiniteRelation(2, {{0, 1}}), 0, 0));
  EXPECT_EQ(find_path(FiniteRelation(2, {{0, 1}, {1, 0}}), 0, 0)->nodes, (std::vector<PointId>{0, 1, 0}));
  EXPECT_EQ(find_path(FiniteRelation(1, {{0, 0}}), 0, 0)->nodes, (std::vector<PointId>{0, 0}));
}

TEST(FindPath, AgreesWithReachabilityOnAllThreePointRelations) {
  for (std::uint64_t mask = 1; mask < 512; ++mask) {
    const FiniteRelation r = from_mask(3, mask);
    const auto m = reach(r);
    for (PointId x = 0; x < 3; ++x)
      for (PointId y = 0; y < 3; ++y) {
        const auto p = find_path(r, x, y);
        ASSERT_EQ(p.has_value(), static_cast<bool>(m[x][y]));
        if (!p)
          continue;
        ASSERT_GE(p->length(), 1u);
        ASSERT_EQ(p->nodes.front(), x);
        ASSERT_EQ(p->nodes.back(), y);
        for (std::size_t i = 0; i + 1 < p->nodes.size(); ++i)
          ASSERT_TRUE(r.contains(p->nodes[i], p->nodes[i + 1]));
      }
  }
}

TEST(Connected, Cases) {
  const FiniteRelation r(2, {{0, 1}});
  EXPECT_TRUE(is_connected(r, PointSet{1}));
  EXPECT_FALSE(is_connected(r, PointSet{0, 1}));
  EXPECT_EQ(connectivity_violation(r, PointSet{0, 1}), std::optional<Edge>(Edge{1, 0}));
  EXPECT_TRUE(is_connected(symmetric_closure(r), PointSet{0, 1}));
}

TEST(Directed, Cases) {
  EXPECT_TRUE(is_directed(FiniteRelation(3, {{0, 2}, {1, 2}}), PointSet{0, 1}));
  EXPECT_TRUE(is_directed(universal_relation(3), PointSet{0, 1, 2}));
  EXPECT_FALSE(is_directed(FiniteRelation(3, {{0, 2}, {1, 0}}), PointSet{0, 1}));
}

TEST(Directed, DirectedUnderSymmetricClosureImpliesConnected) {
  for (std::uint64_t mask = 1; mask < 512; ++mask) {
    const FiniteRelation s = symmetric_closure(from_mask(3, mask));
    const PointSet all = {0, 1, 2};
    if (is_directed(s, all))
      ASSERT_TRUE(is_connected(s, all)) << mask;
  }
}

TEST(SpecialRelations, Universal) {
  EXPECT_EQ(edge_list(universal_relation(2)), (std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}
