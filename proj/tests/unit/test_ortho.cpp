#include <gtest/gtest.h>

#include "fa/catalog.hpp"
#include "fa/enumerate.hpp"
#include "fa/errors.hpp"
#include "fa/io.hpp"
#include "fa/ortho.hpp"

namespace fa {
namespace {

// Order-theoretic oracles computed from scratch on the sum table.
struct Oracle {
  const PartialAlgebra& e;

  bool le(int a, int b) const {
    for (int c = 0; c < e.size(); ++c)
      if (e.sum(a, c) == b) return true;
    return false;
  }
  std::optional<int> join(int a, int b) const {
    std::vector<int> ub;
    for (int u = 0; u < e.size(); ++u)
      if (le(a, u) && le(b, u)) ub.push_back(u);
    for (int u : ub) {
      bool least = true;
      for (int w : ub) least = least && le(u, w);
      if (least) return u;
    }
    return std::nullopt;
  }
  bool orthoalgebra() const {
    for (int a = 0; a < e.size(); ++a)
      if (e.defined(a, a) && a != e.zero) return false;
    return true;
  }
  bool orthomodular() const {
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b)
        if (e.defined(a, b) && join(a, b) != std::optional<int>(e.sum(a, b))) return false;
    return true;
  }
};

std::vector<PartialAlgebra> instance_set() {
  std::vector<PartialAlgebra> out;
  for (const auto& entry : builtin_catalog())
    if (entry.table() && entry.kind == CatalogKind::EffectAlgebra && entry.table()->size() <= 16)
      out.push_back(*entry.table());
  for (int n = 1; n <= 4; ++n)
    for (auto& e : enumerate_tables(n, EnumKind::EffectAlgebra)) out.push_back(e);
  return out;
}

TEST(BoxslashTest, EqualsOrderOracle) {
  for (const auto& e : instance_set()) {
    Oracle o{e};
    BoxslashRelation expected(e.size());
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b)
        expected.set(a, b, e.defined(a, b) && o.join(a, b) == std::optional<int>(e.sum(a, b)));
    EXPECT_EQ(boxslash_relation(to_relfa(e)), expected) << e.name;
    EXPECT_EQ(boxslash_order_oracle(e), expected) << e.name;
  }
}

TEST(BoxslashTest, ParallelEqualsSerial) {
  for (const auto& entry : builtin_catalog()) {
    auto f = entry.relfa();
    EXPECT_EQ(boxslash_relation(f), boxslash_relation_serial(f)) << entry.name;
  }
}

TEST(BoxslashTest, PointwiseMatchesMatrix) {
  auto f = to_relfa(*construct_catalog("MO2").table());
  auto rel = boxslash_relation(f);
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b) EXPECT_EQ(boxslash(f, a, b), rel(a, b));
}

TEST(BoxslashTest, GroupAlgebraIsTotal) {
  auto f = group_algebra(cyclic_group(3));
  auto rel = boxslash_relation(f);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_TRUE(rel(a, b));
}

TEST(ClassifyTest, FlagsEqualOracles) {
  for (const auto& e : instance_set()) {
    auto flags = classify(to_relfa(e));
    Oracle o{e};
    EXPECT_TRUE(flags.effect_algebra.value) << e.name;
    ASSERT_TRUE(flags.orthoalgebra.has_value()) << e.name;
    ASSERT_TRUE(flags.orthomodular_poset.has_value()) << e.name;
    EXPECT_EQ(flags.orthoalgebra->value, o.orthoalgebra()) << e.name;
    EXPECT_EQ(flags.orthomodular_poset->value, o.orthomodular()) << e.name;
  }
}

TEST(ClassifyTest, ChainTwoIsNotAnOrthoalgebra) {
  auto e = chain(2);
  auto flags = classify(to_relfa(e));
  EXPECT_TRUE(flags.effect_algebra.value);
  ASSERT_TRUE(flags.orthoalgebra.has_value());
  EXPECT_FALSE(flags.orthoalgebra->value);
  EXPECT_EQ(flags.orthoalgebra->witness, std::vector<int>{1});
}

TEST(ClassifyTest, WrightTriangleIsOrthoalgebraButNotOrthomodular) {
  auto s = parse_input(default_catalog_dir() + "/wright_triangle.json");
  const auto& e = *s.table();
  ASSERT_TRUE(is_valid_effect_algebra(e));
  auto flags = classify(to_relfa(e));
  Oracle o{e};
  EXPECT_TRUE(o.orthoalgebra());
  EXPECT_FALSE(o.orthomodular());
  EXPECT_TRUE(flags.orthoalgebra->value);
  EXPECT_FALSE(flags.orthomodular_poset->value);
  EXPECT_FALSE(coherence_check(e).holds);
}

TEST(ClassifyTest, BooleanAlgebrasAreOrthomodular) {
  for (int k = 1; k <= 3; ++k) {
    auto flags = classify(to_relfa(boolean(k)));
    EXPECT_TRUE(flags.orthoalgebra->value);
    EXPECT_TRUE(flags.orthomodular_poset->value);
    EXPECT_TRUE(coherence_check(boolean(k)).holds);
  }
}

TEST(ClassifyTest, GroupAlgebraIsNotAnEffectAlgebra) {
  auto flags = classify(group_algebra(cyclic_group(2)));
  EXPECT_FALSE(flags.effect_algebra.value);
  EXPECT_FALSE(flags.orthoalgebra.has_value());
  EXPECT_TRUE(flags.commutative.value);
  EXPECT_TRUE(flags.cancellative.value);
}

TEST(ClassifyTest, NonCommutativeGroupIsFlagged) {
  auto flags = classify(group_algebra(symmetric_group3()));
  EXPECT_FALSE(flags.commutative.value);
  EXPECT_EQ(flags.commutative.witness.size(), 2u);
}

TEST(InverseTest, EquivalencesHoldOnCatalog) {
  for (const auto& entry : builtin_catalog()) {
    auto f = entry.relfa();
    for (int a = 0; a < f.size(); ++a) EXPECT_TRUE(inverse_analysis(f, a).equivalences_hold) << entry.name << " " << a;
  }
}

TEST(InverseTest, GroupElementsAreInvertible) {
  auto f = group_algebra(cyclic_group(5));
  for (int a = 0; a < 5; ++a) {
    auto r = inverse_analysis(f, a);
    ASSERT_TRUE(r.right_inverse.has_value());
    EXPECT_EQ((a + *r.right_inverse) % 5, 0);
    EXPECT_TRUE(r.F_boxslash_a);
  }
}

TEST(InverseTest, OnlyZeroIsInvertibleInAnEffectAlgebra) {
  auto e = chain(3);
  auto f = to_relfa(e);
  for (int a = 0; a < e.size(); ++a) EXPECT_EQ(inverse_analysis(f, a).right_inverse.has_value(), a == e.zero);
}

TEST(RotationTest, RotationIsTheSupplement) {
  auto e = zk_interval({1, 2});
  auto f = to_relfa(e);
  for (int a = 0; a < e.size(); ++a) {
    EXPECT_EQ(rotate_edge(f, a), supplements(e, a).right);
    EXPECT_EQ(rotate_edge_inverse(f, a), supplements(e, a).left);
  }
}

TEST(RotationTest, GroupRotationIsInverse) {
  auto f = group_algebra(cyclic_group(4));
  for (int a = 0; a < 4; ++a) EXPECT_EQ((a + rotate_edge(f, a)) % 4, 0);
}

PartialAlgebra non_commutative_pea() {
  for (auto& e : enumerate_tables(5, EnumKind::PseudoEffectAlgebra))
    if (!is_commutative(e)) return e;
  throw std::runtime_error("no non-commutative pseudo effect algebra of size 5");
}

TEST(BraidingTest, CommutativeCatalogPasses) {
  for (const auto& entry : builtin_catalog()) {
    if (!entry.table()) continue;
    auto flags = classify(entry.relfa());
    EXPECT_TRUE(flags.braided_left.value) << entry.name;
    EXPECT_TRUE(flags.braided_right.value) << entry.name;
    auto bf = braiding_brute_force(*entry.table());
    EXPECT_TRUE(bf.left && bf.right) << entry.name;
  }
}

TEST(BraidingTest, NonCommutativePseudoEffectAlgebraAgreesWithBruteForce) {
  auto e = non_commutative_pea();
  ASSERT_TRUE(is_valid_pseudo_effect_algebra(e));
  auto flags = classify(to_relfa(e));
  auto bf = braiding_brute_force(e);
  EXPECT_EQ(flags.braided_left.value, bf.left);
  EXPECT_EQ(flags.braided_right.value, bf.right);
  EXPECT_FALSE(flags.commutative.value);
}

TEST(BraidingTest, BruteForceFindsFailure) {
  // a⊕b = 1 but no x with x⊕a = 1
  std::vector<std::array<std::string, 3>> sums = {{"0", "0", "0"}, {"0", "a", "a"}, {"a", "0", "a"}, {"0", "b", "b"},
                                                  {"b", "0", "b"}, {"0", "1", "1"}, {"1", "0", "1"}, {"a", "b", "1"}};
  auto e = PartialAlgebra::from_triples("lopsided", {"0", "a", "b", "1"}, sums, "0", "1");
  auto bf = braiding_brute_force(e);
  EXPECT_FALSE(bf.left && bf.right);
}

}  // namespace
}  // namespace fa
