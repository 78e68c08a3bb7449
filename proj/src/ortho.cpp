#include "fa/ortho.hpp"

#include "fa/errors.hpp"
#include "fa/lifting.hpp"
#include "fa/nerve.hpp"
#include "fa/parallel.hpp"
#include "fa/shapes.hpp"

namespace fa {

std::vector<std::pair<int, int>> BoxslashRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((*this)(a, b)) out.emplace_back(a, b);
  return out;
}

bool boxslash(const RelFA& f, int a, int b) {
  const int n = f.size();
  for (int q = 0; q < n; ++q)
    for (int d : f.mu.image(q, a))
      for (int p = 0; p < n; ++p) {
        if (!f.mu.contains(b, p, d)) continue;
        bool found = false;
        for (int l = 0; l < n && !found; ++l) found = f.mu.contains(l, a, p) && f.mu.contains(b, l, q);
        if (!found) return false;
      }
  return true;
}

BoxslashRelation boxslash_relation(const RelFA& f) {
  const int n = f.size();
  BoxslashRelation r(n);
  FA_PARALLEL_FOR
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.set(a, b, boxslash(f, a, b));
  return r;
}

BoxslashRelation boxslash_relation_serial(const RelFA& f) {
  const int n = f.size();
  BoxslashRelation r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.set(a, b, boxslash(f, a, b));
  return r;
}

BoxslashRelation boxslash_order_oracle(const PartialAlgebra& e) {
  auto order = derived_order(e);
  BoxslashRelation r(e.size());
  for (int a = 0; a < e.size(); ++a)
    for (int b = 0; b < e.size(); ++b) {
      if (!e.defined(a, b)) continue;
      auto j = order.join(a, b);
      r.set(a, b, j && *j == e.sum(a, b));
    }
  return r;
}

bool perp(const RelFA& f, int b, int a) { return !f.mu.empty(b, a); }

namespace {

std::vector<int> cancellation_witness(const RelFA& f) {
  const int n = f.size();
  for (int a = 0; a < n; ++a)
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2)
        for (int c = 0; c < n; ++c)
          if ((f.mu.contains(a, b1, c) && f.mu.contains(a, b2, c)) ||
              (f.mu.contains(b1, a, c) && f.mu.contains(b2, a, c)))
            return {a, b1, b2};
  return {};
}

int epsilon_at(const RelFA& f, const UnitTyping& ty, int unit, bool by_target) {
  int found = -1;
  for (int e = 0; e < f.size(); ++e) {
    if (!f.epsilon[e] || (by_target ? ty.target[e] : ty.source[e]) != unit) continue;
    if (found >= 0) throw ContractError("rotate_edge: several epsilon elements at '" + f.elements[unit] + "'");
    found = e;
  }
  if (found < 0) throw ContractError("rotate_edge: no epsilon element at '" + f.elements[unit] + "'");
  return found;
}

}  // namespace

InverseAnalysis inverse_analysis(const RelFA& f, int a) {
  auto ty = unit_typing(f);
  if (!ty) throw ContractError("inverse_analysis: '" + f.name + "' has no unit typing");
  const int n = f.size();
  InverseAnalysis r;
  for (int c = 0; c < n && !r.right_inverse; ++c)
    for (int u : f.mu.image(a, c))
      if (f.eta[u]) {
        r.right_inverse = c;
        break;
      }
  r.perp_all_at_target = true;
  for (int b = 0; b < n; ++b)
    if (ty->source[b] == ty->target[a] && !perp(f, b, a)) r.perp_all_at_target = false;
  r.F_boxslash_a = true;
  r.epsilon_boxslash_a = true;
  for (int b = 0; b < n; ++b) {
    if (f.epsilon[b] && perp(f, b, a)) r.epsilon_perp = true;
    bool box = boxslash(f, b, a);
    if (!box) r.F_boxslash_a = false;
    if (!box && f.epsilon[b]) r.epsilon_boxslash_a = false;
  }
  r.cancellative = cancellation_witness(f).empty();
  const bool i = r.right_inverse.has_value();
  r.equivalences_hold = i == r.perp_all_at_target && i == r.epsilon_perp && (!r.epsilon_boxslash_a || i);
  if (r.cancellative) r.equivalences_hold = r.equivalences_hold && i == r.F_boxslash_a && i == r.epsilon_boxslash_a;
  return r;
}

BraidingBruteForce braiding_brute_force(const PartialAlgebra& e) {
  BraidingBruteForce r;
  const int n = e.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.left && e.defined(b, a)) {
        bool ok = false;
        for (int a2 = 0; a2 < n && !ok; ++a2) ok = e.sum(a2, b) == e.sum(b, a);
        if (!ok) {
          r.left = false;
          r.left_witness = {a, b};
        }
      }
      if (r.right && e.defined(a, b)) {
        bool ok = false;
        for (int a1 = 0; a1 < n && !ok; ++a1) ok = e.sum(b, a1) == e.sum(a, b);
        if (!ok) {
          r.right = false;
          r.right_witness = {a, b};
        }
      }
    }
  return r;
}

ClassificationFlags classify(const RelFA& f) {
  const int n = f.size();
  ClassificationFlags c;

  c.commutative.value = true;
  for (int a = 0; a < n && c.commutative.value; ++a)
    for (int b = a + 1; b < n; ++b)
      if (f.mu.image(a, b) != f.mu.image(b, a)) {
        c.commutative = {false, {a, b}};
        break;
      }

  c.cancellative.witness = cancellation_witness(f);
  c.cancellative.value = c.cancellative.witness.empty();

  auto box = boxslash_relation(f);
  c.epsilon_boxslash_is_eta.value = true;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int e = 0; e < n; ++e)
      if (f.epsilon[e] && !box(e, a)) in = false;
    if (in != f.eta[a]) {
      c.epsilon_boxslash_is_eta = {false, {a}};
      break;
    }
  }

  auto units = f.units();
  c.eta_singleton = {units.size() == 1, units.size() == 1 ? std::vector<int>{} : units};

  c.effect_algebra.value =
      c.commutative.value && c.cancellative.value && c.epsilon_boxslash_is_eta.value && c.eta_singleton.value;

  c.every_counit_boxslash_singleton = true;
  for (int e = 0; e < n; ++e) {
    if (!f.epsilon[e]) continue;
    int count = 0;
    for (int a = 0; a < n; ++a) count += box(e, a);
    if (count != 1) c.every_counit_boxslash_singleton = false;
  }

  if (c.effect_algebra.value) {
    if (auto table = as_partial_algebra(f)) {
      Flag oa{true, {}}, omp{true, {}};
      for (int a = 0; a < n && oa.value; ++a)
        if (!box(a, rotate_edge(f, a))) oa = {false, {a}};
      for (int a = 0; a < n && omp.value; ++a)
        for (int b = 0; b < n; ++b)
          if (perp(f, a, b) != box(a, b)) {
            omp = {false, {a, b}};
            break;
          }
      c.orthoalgebra = oa;
      c.orthomodular_poset = omp;

      auto order = derived_order(*table);
      bool oa_oracle = true, omp_oracle = true;
      for (int a = 0; a < n; ++a) {
        if (table->defined(a, a) && a != table->zero) oa_oracle = false;
        for (int b = 0; b < n; ++b)
          if (table->defined(a, b) && order.join(a, b) != std::optional<int>(table->sum(a, b))) omp_oracle = false;
      }
      c.orthoalgebra_oracle = oa_oracle;
      c.orthomodular_oracle = omp_oracle;
    }
  }

  auto x = nerve(f).complex;
  auto left = check_lifting(braiding(true), x, LiftMode::Exists);
  auto right = check_lifting(braiding(false), x, LiftMode::Exists);
  c.braided_left.value = left.pass;
  if (left.failure) c.braided_left.witness = left.failure->boundary.edge_map;
  c.braided_right.value = right.pass;
  if (right.failure) c.braided_right.witness = right.failure->boundary.edge_map;
  c.braided.value = left.pass && right.pass;
  return c;
}

CoherenceResult coherence_check(const PartialAlgebra& e) {
  CoherenceResult r;
  const int n = e.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!e.defined(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!e.defined(b, c) || !e.defined(a, c)) continue;
        if (!e.defined(e.sum(a, b), c) || !e.defined(a, e.sum(b, c))) {
          r.holds = false;
          r.witness = {a, b, c};
          return r;
        }
      }
    }
  return r;
}

int rotate_edge(const RelFA& f, int a) {
  auto ty = unit_typing(f);
  if (!ty) throw ContractError("rotate_edge: '" + f.name + "' has no unit typing");
  int e = epsilon_at(f, *ty, ty->target[a], true);
  int found = -1;
  for (int l = 0; l < f.size(); ++l) {
    if (!f.mu.contains(a, l, e)) continue;
    if (found >= 0) throw ContractError("rotate_edge: filler for '" + f.elements[a] + "' is not unique");
    found = l;
  }
  if (found < 0) throw ContractError("rotate_edge: no filler for '" + f.elements[a] + "'");
  return found;
}

int rotate_edge_inverse(const RelFA& f, int a) {
  auto ty = unit_typing(f);
  if (!ty) throw ContractError("rotate_edge_inverse: '" + f.name + "' has no unit typing");
  int e = epsilon_at(f, *ty, ty->source[a], false);
  int found = -1;
  for (int m = 0; m < f.size(); ++m) {
    if (!f.mu.contains(m, a, e)) continue;
    if (found >= 0) throw ContractError("rotate_edge_inverse: filler for '" + f.elements[a] + "' is not unique");
    found = m;
  }
  if (found < 0) throw ContractError("rotate_edge_inverse: no filler for '" + f.elements[a] + "'");
  return found;
}

}  // namespace fa
