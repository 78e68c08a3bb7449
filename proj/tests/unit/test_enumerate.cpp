#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fa/catalog.hpp"
#include "fa/enumerate.hpp"
#include "fa/errors.hpp"

namespace fa {
namespace {

// Axioms checked directly; 0 is index 0 and 1 is index n-1.
bool pea_axioms(const PartialAlgebra& e, bool commutative) {
  const int n = e.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (commutative && e.sum(a, b) != e.sum(b, a)) return false;
      if (!e.defined(a, b)) continue;
      int s = e.sum(a, b);
      for (int c = 0; c < n; ++c) {
        if (!e.defined(s, c)) continue;
        if (!e.defined(b, c) || !e.defined(a, e.sum(b, c)) || e.sum(a, e.sum(b, c)) != e.sum(s, c)) return false;
      }
      bool left = false, right = false;
      for (int c = 0; c < n; ++c) {
        left = left || e.sum(c, a) == s;
        right = right || e.sum(b, c) == s;
      }
      if (!left || !right) return false;
    }
  for (int a = 0; a < n; ++a) {
    int l = 0, r = 0;
    for (int c = 0; c < n; ++c) {
      l += e.sum(c, a) == e.one;
      r += e.sum(a, c) == e.one;
    }
    if (l != 1 || r != 1) return false;
    if (a != e.zero && (e.defined(a, e.one) || e.defined(e.one, a))) return false;
  }
  return true;
}

std::vector<int> min_encoding(const PartialAlgebra& e) {
  const int n = e.size();
  std::vector<int> mid(n - 2);
  std::iota(mid.begin(), mid.end(), 1);
  std::vector<int> best;
  do {
    std::vector<int> p(n), inv(n);
    p[0] = 0;
    p[n - 1] = n - 1;
    for (int i = 0; i < n - 2; ++i) p[i + 1] = mid[i];
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    std::vector<int> enc;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int s = e.sum(p[a], p[b]);
        enc.push_back(s == kUndefined ? -1 : inv[s]);
      }
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return best;
}

// Isomorphism classes by exhaustive search over tables with the 0 row fixed.
std::set<std::vector<int>> brute_force_classes(int n, bool commutative) {
  PartialAlgebra e;
  for (int i = 0; i < n; ++i) e.elements.push_back(std::to_string(i));
  e.zero = 0;
  e.one = n - 1;
  e.table.assign(static_cast<size_t>(n) * n, kUndefined);
  for (int a = 0; a < n; ++a) e.table[a] = e.table[static_cast<size_t>(a) * n] = a;
  std::vector<size_t> free;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) free.push_back(static_cast<size_t>(a) * n + b);
  std::set<std::vector<int>> out;
  std::vector<int> choice(free.size(), -1);
  while (true) {
    for (size_t i = 0; i < free.size(); ++i) e.table[free[i]] = choice[i] < 0 ? kUndefined : choice[i];
    if (pea_axioms(e, commutative)) out.insert(min_encoding(e));
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = -1;
    if (i == choice.size()) break;
  }
  return out;
}

TEST(EnumerateTest, EffectAlgebraClassesMatchBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::vector<int>> got;
    for (const auto& e : enumerate_tables(n, EnumKind::EffectAlgebra)) got.insert(min_encoding(e));
    EXPECT_EQ(got, brute_force_classes(n, true)) << n;
  }
}

TEST(EnumerateTest, PseudoEffectAlgebraClassesMatchBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::vector<int>> got;
    for (const auto& e : enumerate_tables(n, EnumKind::PseudoEffectAlgebra)) got.insert(min_encoding(e));
    EXPECT_EQ(got, brute_force_classes(n, false)) << n;
  }
}

TEST(EnumerateTest, KnownSmallCounts) {
  EXPECT_EQ(enumerate_tables(2, EnumKind::EffectAlgebra).size(), 1u);
  EXPECT_EQ(enumerate_tables(3, EnumKind::EffectAlgebra).size(), 1u);
  // chain(3), boolean(2), and two self-supplemented atoms
  EXPECT_EQ(enumerate_tables(4, EnumKind::EffectAlgebra).size(), 3u);
}

TEST(EnumerateTest, RepresentativesAreCanonicalAndDistinct) {
  for (int n = 2; n <= 5; ++n) {
    auto tables = enumerate_tables(n, EnumKind::EffectAlgebra);
    std::set<std::vector<int>> seen;
    for (const auto& e : tables) {
      EXPECT_EQ(e.zero, 0);
      EXPECT_EQ(e.one, n - 1);
      EXPECT_EQ(canonical_table(e), e.table) << e.name;
      EXPECT_TRUE(seen.insert(e.table).second) << e.name;
      EXPECT_TRUE(is_valid_effect_algebra(e)) << e.name;
    }
  }
}

TEST(EnumerateTest, CanonicalFormIsRelabelingInvariant) {
  auto b = boolean(2);
  auto swapped = b;
  std::swap(swapped.elements[1], swapped.elements[2]);
  EXPECT_EQ(canonical_form(b).table, canonical_form(swapped).table);
  EXPECT_EQ(canonical_table(b), canonical_table(swapped));
  EXPECT_NE(canonical_table(b), canonical_table(chain(3)));
}

TEST(EnumerateTest, ParallelEqualsSerial) {
  EnumerationOptions serial;
  serial.parallel = false;
  for (int n = 1; n <= 5; ++n)
    for (auto kind : {EnumKind::EffectAlgebra, EnumKind::PseudoEffectAlgebra}) {
      auto a = enumerate_tables(n, kind), b = enumerate_tables(n, kind, serial);
      ASSERT_EQ(a.size(), b.size());
      for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].table, b[i].table);
    }
}

TEST(EnumerateTest, FrobeniusResultsValidateAndAreDistinct) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& f : enumerate_frobenius(n)) {
      EXPECT_TRUE(validate(StructureKind::Frobenius, f).pass) << f.name;
      EXPECT_TRUE(seen.insert(canonical_relfa(f)).second) << f.name;
    }
    EXPECT_FALSE(seen.empty());
  }
}

TEST(EnumerateTest, BoundIsEnforced) {
  EXPECT_THROW(enumerate_tables(kDefaultEnumerationBound + 1, EnumKind::EffectAlgebra), InputError);
  EXPECT_THROW(parse_enum_kind("monoid"), InputError);
  EXPECT_EQ(parse_enum_kind("effect-algebra"), EnumKind::EffectAlgebra);
}

}  // namespace
}  // namespace fa
