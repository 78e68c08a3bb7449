#include <gtest/gtest.h>

#include <functional>

#include "fa/catalog.hpp"
#include "fa/complex.hpp"
#include "fa/errors.hpp"
#include "fa/lifting.hpp"
#include "fa/nerve.hpp"
#include "fa/shapes.hpp"

namespace fa {
namespace {

// Brute force over all vertex and edge assignments, filtered by is_morphism.
std::vector<ComplexMorphism> brute_force_maps(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y) {
  std::vector<ComplexMorphism> out;
  ComplexMorphism m;
  m.vertex_map.assign(x.vertex_count(), 0);
  m.edge_map.assign(x.edge_count(), 0);
  std::function<void(int)> edges = [&](int e) {
    if (e == x.edge_count()) {
      if (is_morphism(x, y, m)) out.push_back(m);
      return;
    }
    for (int c = 0; c < y.edge_count(); ++c) {
      if (y.source(c) != m.vertex_map[x.source(e)] || y.target(c) != m.vertex_map[x.target(e)]) continue;
      m.edge_map[e] = c;
      edges(e + 1);
    }
  };
  std::function<void(int)> vertices = [&](int v) {
    if (v == x.vertex_count()) {
      edges(0);
      return;
    }
    for (int w = 0; w < y.vertex_count(); ++w) {
      m.vertex_map[v] = w;
      vertices(v + 1);
    }
  };
  vertices(0);
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedEpsilonComplex nerve_of(const PartialAlgebra& e) { return nerve(to_relfa(e)).complex; }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(ComplexTest, SimplexCounts) {
  for (int n = 0; n <= 3; ++n) {
    auto d = simplex(n);
    EXPECT_EQ(d.vertex_count(), n + 1);
    EXPECT_EQ(d.edge_count(), binomial(n + 2, 2));
    EXPECT_EQ(static_cast<long>(d.triangle_count()), binomial(n + 3, 3));
  }
}

TEST(ComplexTest, AddTriangleChecksEndpoints) {
  TruncatedEpsilonComplex x;
  int u = x.add_vertex("u"), v = x.add_vertex("v");
  int a = x.add_edge("a", u, v);
  EXPECT_THROW(x.add_triangle(a, a, a), ContractError);
}

TEST(ComplexTest, DegenerateTrianglesArePresent) {
  auto d = simplex(1);
  int e = d.find_edge("01");
  EXPECT_TRUE(d.has_triangle(e, e, d.identity(0)));
  EXPECT_TRUE(d.has_triangle(d.identity(1), e, e));
}

TEST(ComplexTest, ProductOfSimplicesCounts) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto p = product(simplex(m), simplex(n));
      EXPECT_EQ(p.vertex_count(), (m + 1) * (n + 1));
      EXPECT_EQ(p.edge_count(), binomial(m + 2, 2) * binomial(n + 2, 2));
      EXPECT_EQ(static_cast<long>(p.triangle_count()), binomial(m + 3, 3) * binomial(n + 3, 3));
    }
}

TEST(ComplexTest, ProductMarkingIsCoordinatewise) {
  auto p = product(sigma(1), sigma(1));
  EXPECT_EQ(p.marked_edges().size(), 1u);
  auto q = product(simplex(1), sigma(1));
  EXPECT_TRUE(q.marked_edges().empty());
}

TEST(ShapeTest, HornsMissOneFace) {
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto h = horn(n, i);
      EXPECT_EQ(h.codomain.triangle_count() - h.domain.triangle_count(), n == 2 ? 3u : 1u);
      EXPECT_TRUE(is_morphism(h.domain, h.codomain, h.inclusion));
    }
  EXPECT_EQ(horn(2, 1).domain.edge_count(), 5);
}

TEST(ShapeTest, BoxInclusionIsAMorphism) {
  for (const char* name : {"box(horn[2,0],horn[2,1])", "box(boundary[1],boundary[2])", "box(faces[1;0],boundary[2])"}) {
    auto s = make_shape(name);
    EXPECT_TRUE(is_morphism(s.domain, s.codomain, s.inclusion)) << name;
    EXPECT_EQ(s.name, name);
  }
}

TEST(ShapeTest, BoxWithEmptyFactorIsTheOtherInclusion) {
  auto a = make_shape("box(boundary[0],boundary[2])");
  auto b = boundary(2);
  EXPECT_EQ(a.domain.edge_count(), b.domain.edge_count());
  EXPECT_EQ(a.domain.triangle_count(), b.domain.triangle_count());
  EXPECT_EQ(a.codomain.triangle_count(), b.codomain.triangle_count());
}

TEST(ShapeTest, UnknownShapeIsAnInputError) {
  EXPECT_THROW(make_shape("horn[2,5]"), InputError);
  EXPECT_THROW(make_shape("cube[3]"), InputError);
}

TEST(SolverTest, SimplicesOfChainNerveAreLatticePaths) {
  // n-simplices of N(chain(k)): sequences of n elements with sum ≤ k.
  for (int k = 1; k <= 4; ++k) {
    auto x = nerve_of(chain(k));
    for (int n = 0; n <= 3; ++n)
      EXPECT_EQ(static_cast<long>(ExtensionSolver(simplex(n), x).count()), binomial(k + n, n)) << k << " " << n;
  }
}

TEST(SolverTest, SimplicesOfGroupNerveArePowers) {
  auto x = nerve(group_algebra(cyclic_group(3))).complex;
  EXPECT_EQ(ExtensionSolver(simplex(2), x).count(), 9u);
  EXPECT_EQ(ExtensionSolver(simplex(3), x).count(), 27u);
}

TEST(SolverTest, MatchesBruteForce) {
  std::vector<TruncatedEpsilonComplex> targets = {nerve_of(chain(2)), nerve_of(boolean(2)),
                                                  nerve(group_algebra(cyclic_group(3))).complex};
  std::vector<TruncatedEpsilonComplex> sources = {simplex(2), horn(2, 1).domain, sigma(2), boundary(2).domain,
                                                  braiding_cylinder()};
  for (const auto& y : targets)
    for (const auto& x : sources) EXPECT_EQ(hom_maps(x, y), brute_force_maps(x, y)) << x.name << " -> " << y.name;
}

TEST(SolverTest, FixedEdgesRestrictTheSearch) {
  auto x = nerve_of(chain(2));
  auto d = simplex(2);
  ExtensionSolver s(d, x);
  ASSERT_TRUE(s.fix_edge(d.find_edge("01"), x.find_edge("1")));
  ASSERT_TRUE(s.fix_edge(d.find_edge("12"), x.find_edge("1")));
  auto m = s.all();
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(x.edge_name(m[0].edge_map[d.find_edge("02")]), "2");
}

TEST(SolverTest, InjectiveModeSkipsRepeatedEdges) {
  auto x = nerve_of(chain(2));
  auto d = simplex(1);
  ExtensionSolver s(d, x);
  s.set_injective(true);
  // both identity loops of Δ¹ would land on the single identity
  EXPECT_EQ(s.count(), 0u);
  auto c = simplex(1);
  auto d2 = simplex(2);
  ExtensionSolver t(c, d2);
  t.set_injective(true);
  EXPECT_EQ(t.count(), 3u);
}

struct BruteLift {
  size_t none = 0, unique = 0, multiple = 0;
};

BruteLift brute_force_lifting(const ShapeInclusion& f, const TruncatedEpsilonComplex& y) {
  BruteLift r;
  auto full = brute_force_maps(f.codomain, y);
  for (const auto& b : brute_force_maps(f.domain, y)) {
    size_t n = 0;
    for (const auto& m : full) n += compose(m, f.inclusion) == b;
    (n == 0 ? r.none : n == 1 ? r.unique : r.multiple)++;
  }
  return r;
}

TEST(LiftingTest, MatchesBruteForce) {
  std::vector<TruncatedEpsilonComplex> targets = {nerve_of(chain(2)), nerve_of(boolean(2)),
                                                  nerve(group_algebra(cyclic_group(2))).complex};
  for (const char* name : {"horn[2,0]", "horn[2,1]", "horn[2,2]", "boundary[2]", "ehorn[2,0]", "ehorn[2,2]",
                           "sigma1-mark", "braiding-left", "braiding-right", "faces[2;0 2|1]"}) {
    auto f = make_shape(name);
    for (const auto& y : targets) {
      auto r = check_lifting(f, y, LiftMode::Exists);
      auto oracle = brute_force_lifting(f, y);
      EXPECT_EQ(r.none, oracle.none) << name << " " << y.name;
      EXPECT_EQ(r.unique, oracle.unique) << name << " " << y.name;
      EXPECT_EQ(r.multiple, oracle.multiple) << name << " " << y.name;
    }
  }
}

TEST(LiftingTest, InnerHornFailsOnChainTwo) {
  // a⊕b undefined exactly for (1,2), (2,1), (2,2)
  auto r = check_lifting(horn(2, 1), nerve_of(chain(2)), LiftMode::Exists);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.problems, 9u);
  EXPECT_EQ(r.none, 3u);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->verdict, LiftVerdict::NoExtension);
}

TEST(LiftingTest, BoundaryTwoFailsOnChainOne) {
  // triangles (d0, d1, d2) with d2 + d0 = d1: 3 of the 8 boundary maps
  auto r = check_lifting(boundary(2), nerve_of(chain(1)), LiftMode::Exists);
  EXPECT_EQ(r.problems, 8u);
  EXPECT_EQ(r.none, 5u);
  EXPECT_EQ(r.unique, 3u);
}

TEST(LiftingTest, EpsilonHornsAreUniquelyFillable) {
  for (const auto& entry : builtin_catalog()) {
    auto x = nerve(entry.relfa()).complex;
    for (int n = 1; n <= 2; ++n) {
      EXPECT_TRUE(check_lifting(epsilon_horn(n, 0), x, LiftMode::Unique).pass) << entry.name;
      EXPECT_TRUE(check_lifting(epsilon_horn(n, n), x, LiftMode::Unique).pass) << entry.name;
    }
  }
}

TEST(LiftingTest, ParallelEqualsSerial) {
  auto y = nerve_of(boolean(2));
  for (const char* name : {"horn[2,1]", "horn[3,1]", "box(horn[2,0],horn[2,1])"}) {
    auto f = make_shape(name);
    for (auto mode : {LiftMode::Exists, LiftMode::Unique}) {
      auto a = check_lifting(f, y, mode);
      auto b = check_lifting_serial(f, y, mode);
      EXPECT_EQ(a.problems, b.problems);
      EXPECT_EQ(a.none, b.none);
      EXPECT_EQ(a.unique, b.unique);
      EXPECT_EQ(a.multiple, b.multiple);
      EXPECT_EQ(a.pass, b.pass);
      EXPECT_EQ(a.failure.has_value(), b.failure.has_value());
      if (a.failure && b.failure) {
        EXPECT_EQ(a.failure->boundary, b.failure->boundary);
      }
    }
  }
}

TEST(LiftingTest, CertificateReplays) {
  auto y = nerve_of(chain(2));
  auto f = horn(2, 1);
  auto r = check_lifting(f, y, LiftMode::Exists);
  ASSERT_TRUE(r.failure.has_value());
  auto again = solve_lifting_problem(f, y, r.failure->boundary);
  EXPECT_EQ(again.verdict, LiftVerdict::NoExtension);
  auto fill = generic_filler(f, y, r.failure->boundary);
  EXPECT_FALSE(fill.extension.has_value());
  EXPECT_FALSE(fill.trace.empty());
}

TEST(LiftingTest, RelativeLiftingAgainstIdentityIsUnique) {
  auto y = nerve_of(chain(2));
  ComplexMorphism id;
  for (int v = 0; v < y.vertex_count(); ++v) id.vertex_map.push_back(v);
  for (int e = 0; e < y.edge_count(); ++e) id.edge_map.push_back(e);
  auto r = check_relative_lifting(horn(2, 1), y, y, id, LiftMode::Unique);
  EXPECT_TRUE(r.pass);
}

TEST(LiftingTest, RelativeLiftingAgainstTerminalMapIsAbsoluteLifting) {
  // p: N(chain 2) → Σ⁰ reduces relative lifting to ordinary lifting.
  auto x = nerve_of(chain(2));
  auto point = sigma(0);
  ComplexMorphism p;
  p.vertex_map.assign(x.vertex_count(), 0);
  p.edge_map.assign(x.edge_count(), 0);
  auto rel = check_relative_lifting(horn(2, 1), x, point, p, LiftMode::Exists);
  auto abs = check_lifting(horn(2, 1), x, LiftMode::Exists);
  EXPECT_FALSE(rel.pass);
  EXPECT_EQ(rel.none, abs.none);
  EXPECT_EQ(rel.problems, abs.problems);
}

TEST(LiftingTest, NondegenerateSimplexCounts) {
  // N(chain(2)): non-identity edges 1, 2; non-degenerate triangles need a, b ≠ 0: only (1,1).
  auto x = nerve_of(chain(2));
  EXPECT_EQ(count_nondegenerate_simplices(x, 1), 2u);
  EXPECT_EQ(count_nondegenerate_simplices(x, 2), 1u);
}

}  // namespace
}  // namespace fa
