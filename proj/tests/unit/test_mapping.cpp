#include <gtest/gtest.h>

#include "fa/catalog.hpp"
#include "fa/enumerate.hpp"
#include "fa/errors.hpp"
#include "fa/mapping.hpp"

namespace fa {
namespace {

// Every map E → F checked against the definition directly.
std::vector<PMMorphism> brute_force_morphisms(const PartialAlgebra& e, const PartialAlgebra& f) {
  std::vector<PMMorphism> out;
  std::vector<int> h(e.size(), 0);
  while (true) {
    bool ok = h[e.zero] == f.zero;
    for (int a = 0; ok && a < e.size(); ++a)
      for (int b = 0; ok && b < e.size(); ++b)
        if (e.defined(a, b)) ok = f.defined(h[a], h[b]) && f.sum(h[a], h[b]) == h[e.sum(a, b)];
    if (ok) out.push_back({h});
    int i = e.size() - 1;
    while (i >= 0 && ++h[i] == f.size()) h[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<PartialAlgebra> small_algebras() { return {chain(1), chain(2), boolean(2), chain(3)}; }

TEST(PMMorphismTest, MatchesBruteForce) {
  for (const auto& e : small_algebras())
    for (const auto& f : small_algebras()) {
      auto got = pm_morphisms(e, f);
      EXPECT_EQ(got, brute_force_morphisms(e, f)) << e.name << " → " << f.name;
      for (const auto& h : got) EXPECT_TRUE(is_pm_morphism(e, f, h));
    }
}

TEST(PMMorphismTest, KnownCounts) {
  // chain(1) → chain(1): 1 ↦ 0 or 1 ↦ 1
  EXPECT_EQ(pm_morphisms(chain(1), chain(1)).size(), 2u);
  // boolean(2) → chain(1): both atoms to 0, or exactly one atom to 1
  EXPECT_EQ(pm_morphisms(boolean(2), chain(1)).size(), 3u);
}

TEST(PMMorphismTest, ParallelEqualsSerial) {
  for (const auto& e : small_algebras())
    for (const auto& f : small_algebras()) EXPECT_EQ(pm_morphisms(e, f), pm_morphisms_serial(e, f));
}

TEST(ConjugateTest, SatisfiesDefiningEquation) {
  auto e = chain(2), f = chain(3);
  for (const auto& h : pm_morphisms(e, f))
    for (int b = 0; b < f.size(); ++b) {
      if (!f.defined(b, h.map[e.one])) {
        EXPECT_THROW(conjugate(e, f, h, b), ContractError);
        continue;
      }
      auto g = conjugate(e, f, h, b);
      for (int a = 0; a < e.size(); ++a) EXPECT_EQ(f.sum(b, h.map[a]), f.sum(g.map[a], b));
    }
}

TEST(MappingComplexTest, VerticesAreMorphisms) {
  for (const auto& e : {chain(1), chain(2)})
    for (const auto& f : {chain(1), boolean(2)}) {
      auto ne = nerve(to_relfa(e)), nf = nerve(to_relfa(f));
      auto mc = mapping_complex(ne.complex, nf.complex);
      auto expected = pm_morphisms(e, f);
      ASSERT_EQ(mc.complex.vertex_count(), static_cast<int>(expected.size()));
      std::vector<PMMorphism> got;
      for (const auto& m : mc.level[0].maps) got.push_back(vertex_morphism(ne, nf, m, mc.level[0]));
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected);
    }
}

TEST(MappingComplexTest, LevelProductsHaveLatticePathCounts) {
  auto x = nerve(to_relfa(chain(1))).complex;
  auto mc = mapping_complex(x, x);
  // Δⁿ × X with one vertex: n + 1 vertices
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(mc.level[n].product.vertex_count(), n + 1);
}

TEST(MappingTheoremTest, ChainOneCounts) {
  auto r = verify_mapping_theorem(chain(1), chain(1));
  EXPECT_TRUE(r.holds);
  for (int side = 0; side < 2; ++side) {
    EXPECT_EQ(r.vertices[side], 2);
    EXPECT_EQ(r.edges[side], 3);
    EXPECT_EQ(r.marked[side], 2);
    EXPECT_EQ(r.triangles[side], 4u);
  }
}

TEST(MappingTheoremTest, HoldsOnSmallPairs) {
  for (const auto& e : {chain(1), chain(2), boolean(2)})
    for (const auto& f : {chain(1), chain(2), boolean(2)}) {
      auto r = verify_mapping_theorem(e, f);
      EXPECT_TRUE(r.holds) << e.name << " → " << f.name;
      EXPECT_TRUE(r.isomorphism.has_value());
    }
}

TEST(HomObjectTest, ComponentsAreIntervals) {
  auto hom = hom_object_ea(chain(1), chain(2));
  ASSERT_EQ(hom.morphisms.size(), 3u);  // 1 ↦ 0, 1, 2
  // [0, h(1)′] has 3, 2, 1 elements
  std::vector<int> sizes;
  for (const auto& c : hom.components) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(hom.algebra.size(), 6);
  EXPECT_TRUE(validate(StructureKind::Frobenius, hom.algebra).pass);
}

TEST(EvaluationFibrationTest, PassesOnSmallPairs) {
  for (const auto& e : {chain(1), chain(2)})
    for (const auto& f : {chain(1), boolean(2)}) {
      std::vector<LiftingResult> details;
      auto rep = eval_fibration_check(e, f, &details);
      EXPECT_TRUE(rep.pass) << e.name << " → " << f.name;
      EXPECT_FALSE(details.empty());
    }
}

TEST(EvaluationFibrationTest, ProjectionIsAMorphism) {
  auto ev = evaluation_fibration(chain(2), chain(1));
  EXPECT_TRUE(is_morphism(ev.total.complex, ev.base.complex, ev.p));
}

TEST(EnrichedCompositionTest, IsAMorphism) {
  auto c = enriched_compose(chain(1), chain(1), chain(1));
  EXPECT_TRUE(c.is_morphism);
  EXPECT_TRUE(is_morphism(c.domain, c.result.complex, c.map));
  auto d = enriched_compose(chain(1), chain(2), chain(1));
  EXPECT_TRUE(d.is_morphism);
}

TEST(EnrichedCompositionTest, ComposesVertexMorphisms) {
  auto e = chain(1), f = chain(2), g = chain(1);
  auto c = enriched_compose(e, f, g);
  auto ne = nerve(to_relfa(e)), nf = nerve(to_relfa(f)), ng = nerve(to_relfa(g));
  for (int v = 0; v < c.domain.vertex_count(); ++v) {
    auto [k, h] = c.domain_coords[c.domain.identity(v)];
    int kv = c.left.complex.source(k), hv = c.right.complex.source(h);
    auto km = vertex_morphism(nf, ng, c.left.level[0].maps[kv], c.left.level[0]);
    auto hm = vertex_morphism(ne, nf, c.right.level[0].maps[hv], c.right.level[0]);
    auto rm = vertex_morphism(ne, ng, c.result.level[0].maps[c.map.vertex_map[v]], c.result.level[0]);
    for (int a = 0; a < e.size(); ++a) EXPECT_EQ(rm.map[a], km.map[hm.map[a]]);
  }
}

}  // namespace
}  // namespace fa
