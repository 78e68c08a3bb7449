#include "fa/mapping.hpp"

#include <algorithm>
#include <map>

#include "fa/catalog.hpp"
#include "fa/errors.hpp"
#include "fa/isomorphism.hpp"
#include "fa/parallel.hpp"
#include "fa/shapes.hpp"

namespace fa {

// ---------------------------------------------------------------------------
// Partial monoid morphisms

bool is_pm_morphism(const PartialAlgebra& e, const PartialAlgebra& f, const PMMorphism& h) {
  if (static_cast<int>(h.map.size()) != e.size() || h.map[e.zero] != f.zero) return false;
  for (const auto& [a, b, c] : e.sum_triples())
    if (f.sum(h.map[a], h.map[b]) != h.map[c]) return false;
  return true;
}

namespace {

std::vector<int> atoms_first(const PartialAlgebra& e) {
  std::vector<bool> composite(e.size(), false);
  for (const auto& [a, b, c] : e.sum_triples())
    if (a != e.zero && b != e.zero) composite[c] = true;
  std::vector<int> order;
  for (int x = 0; x < e.size(); ++x)
    if (x != e.zero && !composite[x]) order.push_back(x);
  for (int x = 0; x < e.size(); ++x)
    if (x != e.zero && composite[x]) order.push_back(x);
  return order;
}

class PMSearch {
 public:
  PMSearch(const PartialAlgebra& e, const PartialAlgebra& f) : e_(e), f_(f), order_(atoms_first(e)) {
    h_.assign(e.size(), -1);
    h_[e.zero] = f.zero;
    triples_ = e.sum_triples();
  }

  void run_from(int first_image, std::vector<PMMorphism>& out) {
    if (order_.empty()) {
      if (first_image == f_.zero) out.push_back({h_});
      return;
    }
    h_[order_[0]] = first_image;
    if (consistent()) search(1, out);
    h_[order_[0]] = -1;
  }

  int first_choices() const { return f_.size(); }

 private:
  bool consistent() const {
    for (const auto& [a, b, c] : triples_) {
      if (h_[a] < 0 || h_[b] < 0) continue;
      int s = f_.sum(h_[a], h_[b]);
      if (s == kUndefined) return false;
      if (h_[c] >= 0 && h_[c] != s) return false;
    }
    return true;
  }

  void search(size_t depth, std::vector<PMMorphism>& out) {
    if (depth == order_.size()) {
      out.push_back({h_});
      return;
    }
    int x = order_[depth];
    for (int y = 0; y < f_.size(); ++y) {
      h_[x] = y;
      if (consistent()) search(depth + 1, out);
    }
    h_[x] = -1;
  }

  const PartialAlgebra& e_;
  const PartialAlgebra& f_;
  std::vector<int> order_;
  std::vector<int> h_;
  std::vector<Triple> triples_;
};

std::vector<PMMorphism> pm_impl(const PartialAlgebra& e, const PartialAlgebra& f, bool parallel) {
  const int k = f.size();
  std::vector<std::vector<PMMorphism>> parts(k);
  if (parallel) {
    FA_PARALLEL_FOR
    for (int y = 0; y < k; ++y) PMSearch(e, f).run_from(y, parts[y]);
  } else {
    for (int y = 0; y < k; ++y) PMSearch(e, f).run_from(y, parts[y]);
  }
  std::vector<PMMorphism> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PMMorphism> pm_morphisms(const PartialAlgebra& e, const PartialAlgebra& f) { return pm_impl(e, f, true); }

std::vector<PMMorphism> pm_morphisms_serial(const PartialAlgebra& e, const PartialAlgebra& f) {
  return pm_impl(e, f, false);
}

PMMorphism conjugate(const PartialAlgebra& e, const PartialAlgebra& f, const PMMorphism& h, int b) {
  if (!f.defined(b, h.map[e.one]))
    throw ContractError("conjugate: " + f.elements[b] + " is not in [0, h(1)-]");
  PMMorphism g;
  for (int a = 0; a < e.size(); ++a) {
    int target = f.sum(b, h.map[a]);
    int found = -1;
    for (int x = 0; x < f.size(); ++x)
      if (f.sum(x, b) == target) {
        if (found >= 0) throw ContractError("conjugate: solution for " + e.elements[a] + " is not unique");
        found = x;
      }
    if (found < 0) throw ContractError("conjugate: no solution for " + e.elements[a]);
    g.map.push_back(found);
  }
  if (!is_pm_morphism(e, f, g)) throw ContractError("conjugate: result is not a morphism");
  return g;
}

// ---------------------------------------------------------------------------
// Mapping complexes

int MappingLevel::find(const ComplexMorphism& m) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), m);
  if (it == maps.end() || *it != m) return -1;
  return static_cast<int>(it - maps.begin());
}

ComplexMorphism simplex_morphism(int k, int n, const std::vector<int>& vertices) {
  auto a = simplex(k);
  auto b = simplex(n);
  ComplexMorphism m;
  m.vertex_map = vertices;
  for (int e = 0; e < a.edge_count(); ++e)
    m.edge_map.push_back(b.edges_between(vertices[a.source(e)], vertices[a.target(e)]).front());
  return m;
}

ComplexMorphism product_morphism(const MappingLevel& from, const MappingLevel& to, const ComplexMorphism& phi,
                                 const ComplexMorphism& psi) {
  ComplexMorphism m;
  for (int v = 0; v < from.product.vertex_count(); ++v) {
    int i = v / from.x_vertices, x = v % from.x_vertices;
    m.vertex_map.push_back(phi.vertex_map[i] * to.x_vertices + psi.vertex_map[x]);
  }
  for (const auto& [se, xe] : from.coords) m.edge_map.push_back(to.edge_at(phi.edge_map[se], psi.edge_map[xe]));
  return m;
}

namespace {

MappingLevel make_level(int n, const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y) {
  MappingLevel l;
  l.dim = n;
  auto s = simplex(n);
  l.product = product(s, x, &l.coords);
  l.x_vertices = x.vertex_count();
  l.x_edges = x.edge_count();
  l.index.assign(static_cast<size_t>(s.edge_count()) * x.edge_count(), -1);
  for (int e = 0; e < l.product.edge_count(); ++e) {
    const auto& [se, xe] = l.coords[e];
    l.index[static_cast<size_t>(se) * x.edge_count() + xe] = e;
  }
  l.maps = hom_maps(l.product, y);
  return l;
}

ComplexMorphism identity_morphism(const TruncatedEpsilonComplex& x) {
  ComplexMorphism m;
  for (int v = 0; v < x.vertex_count(); ++v) m.vertex_map.push_back(v);
  for (int e = 0; e < x.edge_count(); ++e) m.edge_map.push_back(e);
  return m;
}

}  // namespace

MappingComplex mapping_complex(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y) {
  MappingComplex mc;
  for (int n = 0; n <= 2; ++n) mc.level[n] = make_level(n, x, y);
  const auto& l0 = mc.level[0];
  const auto& l1 = mc.level[1];
  const auto& l2 = mc.level[2];
  auto& c = mc.complex;
  c.name = "[" + x.name + "," + y.name + "]";

  auto sigma_product = product(sigma(1), x);
  mc.sigma1_map.resize(l1.maps.size());
  for (size_t j = 0; j < l1.maps.size(); ++j) mc.sigma1_map[j] = is_morphism(sigma_product, y, l1.maps[j]);

  const auto id_x = identity_morphism(x);
  auto restrict_to = [&](const MappingLevel& to, const MappingLevel& from, const ComplexMorphism& m, int k, int n,
                         const std::vector<int>& verts) {
    auto inc = product_morphism(to, from, simplex_morphism(k, n, verts), id_x);
    return compose(m, inc);
  };

  mc.edge_of_map.assign(l1.maps.size(), -1);
  for (size_t i = 0; i < l0.maps.size(); ++i) {
    auto id = restrict_to(l1, l0, l0.maps[i], 1, 0, {0, 0});
    int j = l1.find(id);
    if (j < 0) throw ContractError("mapping_complex: missing identity edge");
    c.add_vertex("v" + std::to_string(i), "e" + std::to_string(j), mc.sigma1_map[j]);
    mc.edge_of_map[j] = c.identity(static_cast<int>(i));
  }
  for (size_t j = 0; j < l1.maps.size(); ++j) {
    if (mc.edge_of_map[j] >= 0) continue;
    int s = l0.find(restrict_to(l0, l1, l1.maps[j], 0, 1, {0}));
    int t = l0.find(restrict_to(l0, l1, l1.maps[j], 0, 1, {1}));
    mc.edge_of_map[j] = c.add_edge("e" + std::to_string(j), s, t, mc.sigma1_map[j]);
  }
  mc.map_of_edge.assign(c.edge_count(), -1);
  for (size_t j = 0; j < l1.maps.size(); ++j) mc.map_of_edge[mc.edge_of_map[j]] = static_cast<int>(j);

  for (const auto& m : l2.maps) {
    int d0 = l1.find(restrict_to(l1, l2, m, 1, 2, {1, 2}));
    int d1 = l1.find(restrict_to(l1, l2, m, 1, 2, {0, 2}));
    int d2 = l1.find(restrict_to(l1, l2, m, 1, 2, {0, 1}));
    c.add_triangle(mc.edge_of_map[d0], mc.edge_of_map[d1], mc.edge_of_map[d2]);
  }
  return mc;
}

PMMorphism vertex_morphism(const NerveComplex& ne, const NerveComplex& nf, const ComplexMorphism& level0_map,
                           const MappingLevel& level0) {
  const int n = static_cast<int>(*std::max_element(ne.edge_element.begin(), ne.edge_element.end())) + 1;
  PMMorphism h;
  h.map.assign(n, -1);
  for (int e = 0; e < ne.complex.edge_count(); ++e)
    h.map[ne.edge_element[e]] = nf.edge_element[level0_map.edge_map[level0.edge_at(0, e)]];
  return h;
}

// ---------------------------------------------------------------------------
// Hom objects

HomObject hom_object_ea(const PartialAlgebra& e, const PartialAlgebra& f) {
  HomObject h;
  h.morphisms = pm_morphisms(e, f);
  std::vector<std::string> names;
  std::vector<RelFA> parts;
  for (size_t i = 0; i < h.morphisms.size(); ++i) {
    int top = supplements(f, h.morphisms[i].map[e.one]).left;
    auto comp = interval(f, top);
    comp.name = "[0," + f.elements[top] + "]";
    std::vector<int> in_f;
    for (const auto& name : comp.elements) in_f.push_back(f.index_of(name));
    for (size_t k = 0; k < comp.elements.size(); ++k) {
      names.push_back("h" + std::to_string(i) + ":" + comp.elements[k]);
      h.component_of.push_back(static_cast<int>(i));
      h.element_in_f.push_back(in_f[k]);
    }
    parts.push_back(to_relfa(comp));
    h.components.push_back(std::move(comp));
  }
  h.algebra = RelFA("hom(" + e.name + "," + f.name + ")", names);
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& [x, y, z] : p.mu.triples()) h.algebra.mu.insert(x + offset, y + offset, z + offset);
    for (const auto& [x, y, z] : p.delta.triples()) h.algebra.delta.insert(x + offset, y + offset, z + offset);
    for (int k = 0; k < p.size(); ++k) {
      h.algebra.eta[k + offset] = p.eta[k];
      h.algebra.epsilon[k + offset] = p.epsilon[k];
    }
    offset += p.size();
  }
  return h;
}

MappingTheoremReport verify_mapping_theorem(const PartialAlgebra& e, const PartialAlgebra& f) {
  MappingTheoremReport r;
  auto ne = nerve(to_relfa(e));
  auto nf = nerve(to_relfa(f));
  auto mc = mapping_complex(ne.complex, nf.complex);
  auto hom = hom_object_ea(e, f);
  auto ng = nerve(hom.algebra);
  const auto& x = ng.complex;
  const auto& y = mc.complex;
  r.vertices[0] = x.vertex_count();
  r.vertices[1] = y.vertex_count();
  r.edges[0] = x.edge_count();
  r.edges[1] = y.edge_count();
  r.marked[0] = static_cast<int>(x.marked_edges().size());
  r.marked[1] = static_cast<int>(y.marked_edges().size());
  r.triangles[0] = x.triangle_count();
  r.triangles[1] = y.triangle_count();

  // Explicit labeling: component h ↦ vertex h, loop x over h ↦ the edge
  // whose diagonal on the unit edge of N(E) is x.
  std::map<PMMorphism, int> vertex_of;
  for (size_t i = 0; i < mc.level[0].maps.size(); ++i)
    vertex_of[vertex_morphism(ne, nf, mc.level[0].maps[i], mc.level[0])] = static_cast<int>(i);
  const int unit_edge = ne.complex.identity(0);
  const int diagonal = simplex(1).find_edge("01");
  std::map<std::pair<int, int>, int> edge_of;
  for (int g = 0; g < y.edge_count(); ++g) {
    const auto& m = mc.level[1].maps[mc.map_of_edge[g]];
    int img = m.edge_map[mc.level[1].edge_at(diagonal, unit_edge)];
    edge_of[{y.source(g), nf.edge_element[img]}] = g;
  }
  ComplexMorphism cand;
  bool ok = true;
  for (int v = 0; v < x.vertex_count() && ok; ++v) {
    auto it = vertex_of.find(hom.morphisms[hom.component_of[ng.vertex_unit[v]]]);
    ok = it != vertex_of.end();
    if (ok) cand.vertex_map.push_back(it->second);
  }
  for (int g = 0; g < x.edge_count() && ok; ++g) {
    int elem = ng.edge_element[g];
    int v = cand.vertex_map[x.source(g)];
    auto it = edge_of.find({v, hom.element_in_f[elem]});
    ok = it != edge_of.end();
    if (ok) cand.edge_map.push_back(it->second);
  }
  if (ok && is_isomorphism(x, y, cand)) {
    r.candidate_map = true;
    r.isomorphism = cand;
  } else {
    r.isomorphism = find_isomorphism(x, y);
  }
  r.holds = r.isomorphism.has_value();
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation fibration

EvaluationFibration evaluation_fibration(const PartialAlgebra& e, const PartialAlgebra& f) {
  EvaluationFibration ev;
  auto c1 = chain(1);
  auto ne = nerve(to_relfa(e));
  auto nf = nerve(to_relfa(f));
  auto n1 = nerve(to_relfa(c1));
  std::vector<int> elems(c1.size());
  elems[c1.zero] = e.zero;
  elems[c1.one] = e.one;
  auto j = nerve_map(to_relfa(c1), to_relfa(e), elems);
  ev.total = mapping_complex(ne.complex, nf.complex);
  ev.base = mapping_complex(n1.complex, nf.complex);

  auto id0 = simplex_morphism(0, 0, {0});
  auto id1 = simplex_morphism(1, 1, {0, 1});
  auto r0 = product_morphism(ev.base.level[0], ev.total.level[0], id0, j);
  auto r1 = product_morphism(ev.base.level[1], ev.total.level[1], id1, j);
  for (const auto& m : ev.total.level[0].maps) {
    int k = ev.base.level[0].find(compose(m, r0));
    if (k < 0) throw ContractError("evaluation_fibration: restriction of a vertex is missing");
    ev.p.vertex_map.push_back(k);
  }
  for (int g = 0; g < ev.total.complex.edge_count(); ++g) {
    int k = ev.base.level[1].find(compose(ev.total.level[1].maps[ev.total.map_of_edge[g]], r1));
    if (k < 0) throw ContractError("evaluation_fibration: restriction of an edge is missing");
    ev.p.edge_map.push_back(ev.base.edge_of_map[k]);
  }
  return ev;
}

ValidationReport eval_fibration_check(const PartialAlgebra& e, const PartialAlgebra& f,
                                      std::vector<LiftingResult>* details) {
  auto ev = evaluation_fibration(e, f);
  std::vector<std::string> shapes;
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) shapes.push_back("horn[" + std::to_string(n) + "," + std::to_string(i) + "]");
  shapes.insert(shapes.end(), {"boundary[2]", "boundary[3]", "sigma1-mark"});
  ValidationReport rep;
  rep.kind = StructureKind::PseudoEffectAlgebra;
  for (const auto& s : shapes) {
    auto res = check_relative_lifting(make_shape(s), ev.total.complex, ev.base.complex, ev.p, LiftMode::Unique);
    AxiomVerdict v;
    v.axiom = "unique " + s;
    v.pass = res.pass;
    if (res.failure) v.counterexample = res.failure->boundary.edge_map;
    rep.pass = rep.pass && v.pass;
    rep.axioms.push_back(std::move(v));
    if (details) details->push_back(std::move(res));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Enriched composition

EnrichedComposition enriched_compose(const PartialAlgebra& e, const PartialAlgebra& f, const PartialAlgebra& g) {
  EnrichedComposition ec;
  auto ne = nerve(to_relfa(e));
  auto nf = nerve(to_relfa(f));
  auto ng = nerve(to_relfa(g));
  ec.left = mapping_complex(nf.complex, ng.complex);
  ec.right = mapping_complex(ne.complex, nf.complex);
  ec.result = mapping_complex(ne.complex, ng.complex);
  ec.domain = product(ec.left.complex, ec.right.complex, &ec.domain_coords);

  const auto& kl = ec.left.level[1];
  const auto& hl = ec.right.level[1];
  const auto& rl = ec.result.level[1];
  ec.map.edge_map.assign(ec.domain.edge_count(), -1);
  ec.is_morphism = true;
  for (int d = 0; d < ec.domain.edge_count(); ++d) {
    const auto& [ke, he] = ec.domain_coords[d];
    const auto& k = kl.maps[ec.left.map_of_edge[ke]];
    const auto& h = hl.maps[ec.right.map_of_edge[he]];
    ComplexMorphism comp;
    for (int v = 0; v < hl.product.vertex_count(); ++v) {
      int i = v / hl.x_vertices;
      comp.vertex_map.push_back(k.vertex_map[i * kl.x_vertices + h.vertex_map[v]]);
    }
    for (int pe = 0; pe < hl.product.edge_count(); ++pe) {
      int se = hl.coords[pe].first;
      comp.edge_map.push_back(k.edge_map[kl.edge_at(se, h.edge_map[pe])]);
    }
    int idx = rl.find(comp);
    if (idx < 0) {
      ec.is_morphism = false;
      continue;
    }
    ec.map.edge_map[d] = ec.result.edge_of_map[idx];
  }
  if (!ec.is_morphism) return ec;
  for (int v = 0; v < ec.domain.vertex_count(); ++v)
    ec.map.vertex_map.push_back(ec.result.complex.identity_vertex(ec.map.edge_map[ec.domain.identity(v)]));
  ec.is_morphism = is_morphism(ec.domain, ec.result.complex, ec.map);
  return ec;
}

}  // namespace fa
