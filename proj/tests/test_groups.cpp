#include <gtest/gtest.h>

#include "reebsym/error.hpp"
#include "reebsym/perm_group.hpp"
#include "support.hpp"

namespace reebsym {
namespace {

Permutation P(std::vector<int> images) { return Permutation(std::move(images)); }

TEST(Permutation, RejectsNonBijections) {
  EXPECT_REEBSYM_ERROR(P({0, 0}), ErrorCode::kNotAPermutation);
  EXPECT_REEBSYM_ERROR(P({1, 2}), ErrorCode::kNotAPermutation);
  EXPECT_REEBSYM_ERROR(P({-1, 0}), ErrorCode::kNotAPermutation);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation g = P({1, 2, 0});
  const Permutation h = P({1, 0, 2});
  const Permutation gh = g * h;
  for (int x = 0; x < 3; ++x) EXPECT_EQ(gh(x), g(h(x)));
  EXPECT_NE(g * h, h * g);
}

TEST(Permutation, InverseOrderAndCycles) {
  const Permutation p = P({1, 2, 0, 4, 3});
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.order(), 6);
  EXPECT_EQ(p.cycle_string(), "(0 1 2)(3 4)");
  EXPECT_EQ(Permutation::identity(3).cycle_string(), "()");
  EXPECT_EQ(Permutation::identity(3).order(), 1);
}

TEST(PermGroup, TrivialGroup) {
  const PermGroup g(4);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_trivial());
  EXPECT_TRUE(g.elements().front().is_identity());
  EXPECT_EQ(classify(g).label(), "Z1");
}

TEST(PermGroup, ClosureOfTranspositionAndFourCycleIsSym4) {
  const PermGroup g = closure(4, {P({1, 0, 2, 3}), P({1, 2, 3, 0})});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(g.elements().front().is_identity());
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  const std::map<std::int64_t, int> expected{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  EXPECT_EQ(order_profile(g), expected);
  EXPECT_EQ(classify(g).label(), "S4");
}

TEST(PermGroup, Alt4Profile) {
  const PermGroup g = closure(4, {P({1, 2, 0, 3}), P({1, 0, 3, 2})});
  EXPECT_EQ(g.order(), 12u);
  const std::map<std::int64_t, int> expected{{1, 1}, {2, 3}, {3, 8}};
  EXPECT_EQ(order_profile(g), expected);
  EXPECT_EQ(classify(g).label(), "A4");
}

TEST(PermGroup, Alt5) {
  const PermGroup g = closure(5, {P({1, 2, 3, 4, 0}), P({1, 2, 0, 3, 4})});
  EXPECT_EQ(g.order(), 60u);
  const std::map<std::int64_t, int> expected{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  EXPECT_EQ(order_profile(g), expected);
  EXPECT_EQ(classify(g).label(), "A5");
}

TEST(PermGroup, CyclicProfile) {
  const PermGroup g = closure(6, {P({1, 2, 3, 4, 5, 0})});
  const std::map<std::int64_t, int> expected{{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  EXPECT_EQ(order_profile(g), expected);
  EXPECT_EQ(classify(g).label(), "Z6");
}

TEST(PermGroup, DihedralWithPresentation) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      r[i] = (i + 1) % n;
      s[i] = (n - i) % n;
    }
    const PermGroup g = closure(n, {P(r), P(s)});
    EXPECT_EQ(g.order(), static_cast<std::size_t>(2 * n));
    const GroupClass cls = classify(g);
    EXPECT_EQ(cls.kind, GroupClass::Kind::kDihedral);
    EXPECT_EQ(cls.n, n);
    const auto w = dihedral_witness(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->r.order(), n);
    EXPECT_EQ(w->s.order(), 2);
    EXPECT_EQ((w->r * w->s).order(), 2);
    EXPECT_EQ(closure(n, {w->r, w->s}).order(), g.order());
  }
}

TEST(PermGroup, KleinIsD2) {
  const PermGroup g = closure(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})});
  EXPECT_EQ(classify(g).label(), "D2");
  EXPECT_TRUE(is_in_so3_list(classify(g)));
}

TEST(PermGroup, OtherGroupsAreOutsideTheList) {
  // Z2 x Z2 x Z2 is not a finite subgroup of SO(3).
  const PermGroup g = closure(6, {P({1, 0, 2, 3, 4, 5}), P({0, 1, 3, 2, 4, 5}), P({0, 1, 2, 3, 5, 4})});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(classify(g).kind, GroupClass::Kind::kOther);
  EXPECT_FALSE(is_in_so3_list(classify(g)));
}

TEST(PermGroup, ErrorsOnMismatchAndCap) {
  EXPECT_REEBSYM_ERROR(closure(3, {P({1, 0})}), ErrorCode::kDegreeMismatch);
  EXPECT_REEBSYM_ERROR(closure(5, {P({1, 2, 3, 4, 0}), P({1, 0, 2, 3, 4})}, 100),
                       ErrorCode::kGroupTooLarge);
}

TEST(PermGroup, ReducedGeneratorsGenerateSameGroup) {
  const PermGroup full = closure(4, {P({1, 0, 2, 3}), P({1, 2, 3, 0})});
  const PermGroup again = closure_with_reduced_generators(4, full.elements());
  EXPECT_EQ(again.elements(), full.elements());
  EXPECT_LE(again.generators().size(), 3u);
  EXPECT_EQ(closure(4, again.generators()).elements(), full.elements());
}

TEST(PermGroup, PowersStartAtIdentity) {
  const auto ps = powers(P({1, 2, 0}));
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_TRUE(ps[0].is_identity());
  EXPECT_EQ(ps[2], P({2, 0, 1}));
}

TEST(Generators, RoundTrip) {
  const std::vector<Permutation> gens{P({1, 2, 0}), P({0, 2, 1})};
  const std::string text = serialize_generators(gens);
  EXPECT_EQ(parse_generators(text, 3), gens);
  EXPECT_EQ(serialize_generators(parse_generators(text, 3)), text);
  EXPECT_EQ(parse_generators(serialize_generators({}), 3).size(), 0u);
  EXPECT_REEBSYM_ERROR(parse_generators(text, 4), ErrorCode::kDegreeMismatch);
  EXPECT_REEBSYM_ERROR(parse_generators("{\"generators\": [[0, 0]]}", 2), ErrorCode::kNotAPermutation);
  EXPECT_REEBSYM_ERROR(parse_generators("{\"gens\": []}", 2), ErrorCode::kSyntaxError);
  EXPECT_REEBSYM_ERROR(parse_generators("[", 2), ErrorCode::kSyntaxError);
}

}  // namespace
}  // namespace reebsym
