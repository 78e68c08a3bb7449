#include "fa/nerve.hpp"

#include <map>

#include "fa/errors.hpp"
#include "fa/shapes.hpp"

namespace fa {

NerveComplex nerve(const RelFA& a) {
  NerveComplex out;
  auto& x = out.complex;
  x.name = "N(" + a.name + ")";
  const int n = a.size();

  std::vector<int> vertex_of(n, -1);
  for (int u = 0; u < n; ++u) {
    if (!a.eta[u] || !a.mu.contains(u, u, u)) continue;
    vertex_of[u] = static_cast<int>(out.vertex_unit.size());
    out.vertex_unit.push_back(u);
  }

  struct Raw {
    int u, elem, v;
  };
  std::vector<Raw> raw;
  std::vector<int> uses(n, 0);
  for (int u : out.vertex_unit)
    for (int e = 0; e < n; ++e)
      for (int v : out.vertex_unit)
        if (a.mu.contains(e, u, e) && a.mu.contains(v, e, e)) {
          raw.push_back({u, e, v});
          ++uses[e];
        }
  auto edge_label = [&](const Raw& r) {
    if (uses[r.elem] == 1) return a.elements[r.elem];
    return "(" + a.elements[r.u] + "," + a.elements[r.elem] + "," + a.elements[r.v] + ")";
  };

  std::map<std::array<int, 3>, int> edge_index;
  for (int u : out.vertex_unit) {
    Raw id{u, u, u};
    x.add_vertex(a.elements[u], edge_label(id), a.epsilon[u]);
    out.edge_element.push_back(u);
  }
  for (size_t i = 0; i < out.vertex_unit.size(); ++i) {
    int u = out.vertex_unit[i];
    int e = x.identity(static_cast<int>(i));
    out.edge_element[e] = u;
    edge_index[{u, u, u}] = e;
  }
  for (const auto& r : raw) {
    if (r.u == r.elem && r.v == r.elem) continue;
    int e = x.add_edge(edge_label(r), vertex_of[r.u], vertex_of[r.v], a.epsilon[r.elem]);
    out.edge_element.push_back(r.elem);
    edge_index[{r.u, r.elem, r.v}] = e;
  }

  // Triangle ((v,b,w), (u,c,w), (u,a,v)) iff μ(b,a) ∋ c.
  const int m = x.edge_count();
  for (int ea = 0; ea < m; ++ea)
    for (int w = 0; w < x.vertex_count(); ++w)
      for (int eb : x.edges_between(x.target(ea), w))
        for (int c : a.mu.image(out.edge_element[eb], out.edge_element[ea])) {
          auto it = edge_index.find({out.vertex_unit[x.source(ea)], c, out.vertex_unit[w]});
          if (it != edge_index.end()) x.add_triangle(eb, it->second, ea);
        }
  return out;
}

ComplexMorphism nerve_map(const RelFA& a, const RelFA& b, const std::vector<int>& element_map) {
  auto na = nerve(a);
  auto nb = nerve(b);
  ComplexMorphism f;
  for (int u : na.vertex_unit) {
    int img = element_map[u];
    auto it = std::find(nb.vertex_unit.begin(), nb.vertex_unit.end(), img);
    if (it == nb.vertex_unit.end()) throw ContractError("nerve_map: unit '" + a.elements[u] + "' not sent to a vertex");
    f.vertex_map.push_back(static_cast<int>(it - nb.vertex_unit.begin()));
  }
  for (int e = 0; e < na.complex.edge_count(); ++e) {
    int s = f.vertex_map[na.complex.source(e)], t = f.vertex_map[na.complex.target(e)];
    int found = -1;
    for (int g : nb.complex.edges_between(s, t))
      if (nb.edge_element[g] == element_map[na.edge_element[e]]) found = g;
    if (found < 0)
      throw ContractError("nerve_map: edge '" + na.complex.edge_name(e) + "' has no image");
    f.edge_map.push_back(found);
  }
  if (!is_morphism(na.complex, nb.complex, f)) throw ContractError("nerve_map: element map is not a morphism");
  return f;
}

ValidationReport NerveRecognition::report() const {
  ValidationReport r;
  r.kind = StructureKind::Frobenius;
  r.pass = pass;
  for (const auto& c : checks) {
    AxiomVerdict v;
    v.axiom = std::string(to_string(c.result.mode)) + " " + c.item;
    v.pass = c.result.pass;
    if (!c.result.pass && c.result.failure) v.counterexample = c.result.failure->boundary.edge_map;
    (c.required ? r.axioms : r.derived).push_back(std::move(v));
  }
  for (const auto& a : automatic) r.notes.push_back(a + ": representationally automatic");
  return r;
}

const RecognitionCheck* NerveRecognition::first_failure() const {
  for (const auto& c : checks)
    if (c.required && !c.result.pass) return &c;
  return nullptr;
}

NerveRecognition recognize_nerve_detailed(const TruncatedEpsilonComplex& x, bool optional_flags) {
  NerveRecognition rec;
  auto run = [&](const std::string& item, LiftMode mode, bool required) {
    auto shape = make_shape(item);
    RecognitionCheck c{item, required, check_lifting(shape, x, mode)};
    if (required && !c.result.pass) rec.pass = false;
    rec.checks.push_back(std::move(c));
  };
  for (int n = 1; n <= 3; ++n) {
    run("ehorn[" + std::to_string(n) + ",0]", LiftMode::Unique, true);
    run("ehorn[" + std::to_string(n) + "," + std::to_string(n) + "]", LiftMode::Unique, true);
  }
  run("assoc-02", LiftMode::Exists, true);
  if (optional_flags) {
    for (int i = 0; i <= 3; ++i) run("horn[3," + std::to_string(i) + "]", LiftMode::Exists, false);
    run("assoc-13", LiftMode::Exists, false);
  }
  rec.automatic = {"ehorn[n,0], ehorn[n,n] for n >= 4", "boundary[n] for n >= 3"};
  return rec;
}

ValidationReport recognize_nerve(const TruncatedEpsilonComplex& x) { return recognize_nerve_detailed(x).report(); }

RelFA nerve_to_algebra(const TruncatedEpsilonComplex& x) {
  auto rec = recognize_nerve_detailed(x, false);
  if (const auto* bad = rec.first_failure()) {
    std::string msg = "nerve_to_algebra: " + x.name + " fails " + std::string(to_string(bad->result.mode)) + " " +
                      bad->item;
    if (bad->result.failure) {
      msg += " at boundary [";
      const auto& em = bad->result.failure->boundary.edge_map;
      for (size_t i = 0; i < em.size(); ++i) msg += (i ? "," : "") + x.edge_name(em[i]);
      msg += "]";
    }
    throw ContractError(msg);
  }
  std::vector<std::string> names;
  for (int e = 0; e < x.edge_count(); ++e) names.push_back(x.edge_name(e));
  RelFA f(x.name, names);
  for (const auto& [d0, d1, d2] : x.triangles()) f.mu.insert(d0, d2, d1);
  for (int e = 0; e < x.edge_count(); ++e) {
    f.eta[e] = x.is_identity(e);
    f.epsilon[e] = x.marked(e);
  }
  f.delta = derive_delta(f.mu, f.epsilon);
  return f;
}

CrossValidation cross_validate_detailed(const RelFA& a) {
  CrossValidation cv;
  cv.algebraic = validate(StructureKind::Frobenius, a);
  cv.simplicial = recognize_nerve_detailed(nerve(a).complex, false).report();
  cv.agree = cv.algebraic.pass == cv.simplicial.pass;
  return cv;
}

bool cross_validate(const RelFA& a) { return cross_validate_detailed(a).agree; }

}  // namespace fa
