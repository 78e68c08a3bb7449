#include "fa/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fa/errors.hpp"

namespace fa {

namespace {

int find_name(const std::vector<std::string>& names, std::string_view element) {
  auto it = std::find(names.begin(), names.end(), element);
  if (it == names.end()) return -1;
  return static_cast<int>(it - names.begin());
}

void require_distinct(const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (size_t i = 0; i < names.size(); ++i)
    if (!seen.insert(names[i]).second)
      throw InputError("/elements/" + std::to_string(i), "duplicate element name '" + names[i] + "'");
}

AxiomVerdict verdict(std::string axiom) { return AxiomVerdict{std::move(axiom), true, {}}; }

void fail(AxiomVerdict& v, std::vector<int> counterexample) {
  if (!v.pass) return;  // keep the first (lexicographically least) witness
  v.pass = false;
  v.counterexample = std::move(counterexample);
}

// Relational monoid axioms for (rel, units). `prefix` distinguishes the monoid
// from the comonoid reading of the same checks.
void check_rel_monoid(const TernaryRelation& rel, const std::vector<bool>& units,
                      const std::string& prefix, const std::string& unit_word,
                      std::vector<AxiomVerdict>& out) {
  const int n = rel.size();
  auto existence = verdict(prefix + "." + unit_word + "-existence");
  auto exactness = verdict(prefix + "." + unit_word + "-exactness");
  auto assoc = verdict(prefix + ".associativity");

  for (int a = 0; a < n && existence.pass; ++a) {
    bool right = false, left = false;
    for (int s = 0; s < n; ++s) {
      if (!units[s]) continue;
      right = right || rel.contains(a, s, a);
      left = left || rel.contains(s, a, a);
    }
    if (!right || !left) fail(existence, {a});
  }

  for (int r = 0; r < n && exactness.pass; ++r) {
    if (!units[r]) continue;
    for (int a = 0; a < n && exactness.pass; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && (rel.contains(r, a, b) || rel.contains(a, r, b))) {
          fail(exactness, {r, a, b});
          break;
        }
  }

  std::vector<char> lhs(n), rhs(n);
  for (int a = 0; a < n && assoc.pass; ++a)
    for (int b = 0; b < n && assoc.pass; ++b)
      for (int c = 0; c < n && assoc.pass; ++c) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (int x : rel.image(a, b))
          for (int d : rel.image(x, c)) lhs[d] = 1;
        for (int y : rel.image(b, c))
          for (int d : rel.image(a, y)) rhs[d] = 1;
        for (int d = 0; d < n; ++d)
          if (lhs[d] != rhs[d]) {
            fail(assoc, {a, b, c, d});
            break;
          }
      }

  out.push_back(std::move(existence));
  out.push_back(std::move(exactness));
  out.push_back(std::move(assoc));
}

void check_frobenius_identity(const RelFA& f, std::vector<AxiomVerdict>& out) {
  const int n = f.size();
  auto frob = verdict("frobenius-identity");
  // For fixed (a, b): L(c,d) ⇔ ∃x. μ(a,x)∋c ∧ δ(b)∋(x,d);  R(c,d) ⇔ ∃y. δ(a)∋(c,y) ∧ μ(y,b)∋d.
  std::vector<char> lhs(static_cast<size_t>(n) * n), rhs(static_cast<size_t>(n) * n);
  for (int a = 0; a < n && frob.pass; ++a)
    for (int b = 0; b < n && frob.pass; ++b) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (int x = 0; x < n; ++x) {
        const auto& cs = f.mu.image(a, x);
        if (cs.empty()) continue;
        for (int d : f.delta.image(b, x))
          for (int c : cs) lhs[static_cast<size_t>(c) * n + d] = 1;
      }
      for (int c = 0; c < n; ++c)
        for (int y : f.delta.image(a, c))
          for (int d : f.mu.image(y, b)) rhs[static_cast<size_t>(c) * n + d] = 1;
      for (int c = 0; c < n && frob.pass; ++c)
        for (int d = 0; d < n; ++d)
          if (lhs[static_cast<size_t>(c) * n + d] != rhs[static_cast<size_t>(c) * n + d]) {
            fail(frob, {a, b, c, d});
            break;
          }
    }
  out.push_back(std::move(frob));
}

TernaryRelation transpose_delta(const TernaryRelation& delta) {
  // δ⁻¹ as a multiplication: (x, y, z) ⇔ δ: z ↦ (x, y)
  TernaryRelation inv(delta.size());
  for (const auto& [z, x, y] : delta.triples()) inv.insert(x, y, z);
  return inv;
}

void check_partial_monoid(const PartialAlgebra& e, std::vector<AxiomVerdict>& out) {
  const int n = e.size();
  auto unit = verdict("1.unit");
  auto assoc = verdict("1.associativity");
  for (int a = 0; a < n; ++a)
    if (e.sum(e.zero, a) != a || e.sum(a, e.zero) != a) {
      fail(unit, {a});
      break;
    }
  for (int a = 0; a < n && assoc.pass; ++a)
    for (int b = 0; b < n && assoc.pass; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = e.sum(a, b), bc = e.sum(b, c);
        int lhs = ab == kUndefined ? kUndefined : e.sum(ab, c);
        int rhs = bc == kUndefined ? kUndefined : e.sum(a, bc);
        if (lhs != rhs) {
          fail(assoc, {a, b, c});
          break;
        }
      }
  out.push_back(std::move(unit));
  out.push_back(std::move(assoc));
}

void add_derived_properties(const PartialAlgebra& e, ValidationReport& report) {
  const int n = e.size();
  auto cancel = verdict("cancellativity");
  auto positive = verdict("positivity");
  for (int a = 0; a < n && cancel.pass; ++a)
    for (int b1 = 0; b1 < n && cancel.pass; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2) {
        bool left = e.defined(a, b1) && e.sum(a, b1) == e.sum(a, b2);
        bool right = e.defined(b1, a) && e.sum(b1, a) == e.sum(b2, a);
        if (left || right) {
          fail(cancel, {a, b1, b2});
          break;
        }
      }
  for (int a = 0; a < n && positive.pass; ++a)
    for (int b = 0; b < n; ++b)
      if (e.sum(a, b) == e.zero && (a != e.zero || b != e.zero)) {
        fail(positive, {a, b});
        break;
      }
  report.derived.push_back(std::move(cancel));
  report.derived.push_back(std::move(positive));
}

ValidationReport validate_table(StructureKind kind, const PartialAlgebra& e) {
  ValidationReport report;
  report.kind = kind;
  const int n = e.size();
  check_partial_monoid(e, report.axioms);

  if (kind == StructureKind::EffectAlgebra) {
    auto comm = verdict("1.commutativity");
    for (int a = 0; a < n && comm.pass; ++a)
      for (int b = a + 1; b < n; ++b)
        if (e.sum(a, b) != e.sum(b, a)) {
          fail(comm, {a, b});
          break;
        }
    report.axioms.insert(report.axioms.begin() + 1, std::move(comm));

    auto supp = verdict("2.orthosupplement");
    for (int a = 0; a < n; ++a) {
      int count = 0;
      for (int b = 0; b < n; ++b) count += e.sum(a, b) == e.one;
      if (count != 1) {
        fail(supp, {a});
        break;
      }
    }
    report.axioms.push_back(std::move(supp));

    auto top = verdict("3.top-orthogonal-only-to-zero");
    for (int a = 0; a < n; ++a)
      if (a != e.zero && e.defined(a, e.one)) {
        fail(top, {a});
        break;
      }
    report.axioms.push_back(std::move(top));
  } else {
    auto braid = verdict("2.braiding");
    for (int a = 0; a < n && braid.pass; ++a)
      for (int b = 0; b < n && braid.pass; ++b) {
        int ab = e.sum(a, b);
        if (ab == kUndefined) continue;
        bool has_a1 = false, has_b1 = false;
        for (int x = 0; x < n; ++x) {
          has_a1 = has_a1 || e.sum(b, x) == ab;
          has_b1 = has_b1 || e.sum(x, a) == ab;
        }
        if (!has_a1 || !has_b1) fail(braid, {a, b});
      }
    report.axioms.push_back(std::move(braid));

    auto supp = verdict("3.supplements");
    for (int a = 0; a < n; ++a) {
      int left = 0, right = 0;
      for (int b = 0; b < n; ++b) {
        left += e.sum(b, a) == e.one;
        right += e.sum(a, b) == e.one;
      }
      if (left != 1 || right != 1) {
        fail(supp, {a});
        break;
      }
    }
    report.axioms.push_back(std::move(supp));

    auto top = verdict("4.top-orthogonal-only-to-zero");
    for (int a = 0; a < n; ++a)
      if (a != e.zero && (e.defined(a, e.one) || e.defined(e.one, a))) {
        fail(top, {a});
        break;
      }
    report.axioms.push_back(std::move(top));
  }

  add_derived_properties(e, report);
  report.pass = std::all_of(report.axioms.begin(), report.axioms.end(),
                            [](const AxiomVerdict& v) { return v.pass; });
  return report;
}

}  // namespace

int PartialAlgebra::index_of(std::string_view element) const {
  int i = find_name(elements, element);
  if (i < 0) throw InputError("unknown element '" + std::string(element) + "'");
  return i;
}

PartialAlgebra PartialAlgebra::from_triples(std::string name, std::vector<std::string> elements,
                                            const std::vector<std::array<std::string, 3>>& sums,
                                            std::string_view zero, std::string_view one) {
  require_distinct(elements);
  PartialAlgebra e;
  e.name = std::move(name);
  e.elements = std::move(elements);
  const int n = e.size();
  if (n == 0) throw InputError("/elements", "carrier must be non-empty");
  e.table.assign(static_cast<size_t>(n) * n, kUndefined);
  e.zero = find_name(e.elements, zero);
  if (e.zero < 0) throw InputError("/zero", "dangling identifier '" + std::string(zero) + "'");
  e.one = find_name(e.elements, one);
  if (e.one < 0) throw InputError("/one", "dangling identifier '" + std::string(one) + "'");
  for (size_t k = 0; k < sums.size(); ++k) {
    int idx[3];
    for (int j = 0; j < 3; ++j) {
      idx[j] = find_name(e.elements, sums[k][j]);
      if (idx[j] < 0)
        throw InputError("/sum/" + std::to_string(k) + "/" + std::to_string(j),
                         "dangling identifier '" + sums[k][j] + "'");
    }
    int& slot = e.table[static_cast<size_t>(idx[0]) * n + idx[1]];
    if (slot != kUndefined && slot != idx[2])
      throw InputError("/sum/" + std::to_string(k),
                       "multi-valued sum: " + sums[k][0] + " + " + sums[k][1] + " is both '" +
                           e.elements[slot] + "' and '" + sums[k][2] + "'");
    slot = idx[2];
  }
  return e;
}

std::vector<Triple> PartialAlgebra::sum_triples() const {
  std::vector<Triple> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (defined(a, b)) out.push_back({a, b, sum(a, b)});
  return out;
}

RelFA::RelFA(std::string name_, std::vector<std::string> elements_)
    : name(std::move(name_)), elements(std::move(elements_)) {
  require_distinct(elements);
  const int n = size();
  mu = TernaryRelation(n);
  delta = TernaryRelation(n);
  eta.assign(n, false);
  epsilon.assign(n, false);
}

int RelFA::index_of(std::string_view element) const {
  int i = find_name(elements, element);
  if (i < 0) throw InputError("unknown element '" + std::string(element) + "'");
  return i;
}

std::vector<int> RelFA::units() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (eta[i]) out.push_back(i);
  return out;
}

std::vector<int> RelFA::counits() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (epsilon[i]) out.push_back(i);
  return out;
}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::RelMonoid: return "rel-monoid";
    case StructureKind::Frobenius: return "frobenius";
    case StructureKind::EffectAlgebra: return "effect-algebra";
    case StructureKind::PseudoEffectAlgebra: return "pseudo-effect-algebra";
  }
  return "?";
}

StructureKind parse_structure_kind(std::string_view text) {
  static const std::map<std::string_view, StructureKind> kinds = {
      {"rel-monoid", StructureKind::RelMonoid},
      {"frobenius", StructureKind::Frobenius},
      {"effect-algebra", StructureKind::EffectAlgebra},
      {"effect_algebra", StructureKind::EffectAlgebra},
      {"pseudo-effect-algebra", StructureKind::PseudoEffectAlgebra},
      {"pseudo_effect_algebra", StructureKind::PseudoEffectAlgebra},
  };
  auto it = kinds.find(text);
  if (it == kinds.end()) throw InputError("unknown kind '" + std::string(text) + "'");
  return it->second;
}

const AxiomVerdict* ValidationReport::find(std::string_view axiom) const {
  for (const auto* list : {&axioms, &derived})
    for (const auto& v : *list)
      if (v.axiom == axiom) return &v;
  return nullptr;
}

ValidationReport validate(StructureKind kind, const RelFA& f) {
  if (kind == StructureKind::EffectAlgebra || kind == StructureKind::PseudoEffectAlgebra) {
    if (auto table = as_partial_algebra(f)) return validate(kind, *table);
    ValidationReport report;
    report.kind = kind;
    report.pass = false;
    report.axioms.push_back({"partial-algebra-shape", false, {}});
    report.notes.push_back("mu is not a partial function with eta = {0}, epsilon = {1}");
    return report;
  }
  ValidationReport report;
  report.kind = kind;
  check_rel_monoid(f.mu, f.eta, "monoid", "unit", report.axioms);
  if (kind == StructureKind::Frobenius) {
    check_rel_monoid(transpose_delta(f.delta), f.epsilon, "comonoid", "counit", report.axioms);
    check_frobenius_identity(f, report.axioms);
  }
  report.pass = std::all_of(report.axioms.begin(), report.axioms.end(),
                            [](const AxiomVerdict& v) { return v.pass; });
  return report;
}

ValidationReport validate(StructureKind kind, const PartialAlgebra& e) {
  if (kind == StructureKind::RelMonoid || kind == StructureKind::Frobenius) {
    auto report = validate(kind, to_relfa(e));
    report.notes.emplace_back(delta_convention(is_commutative(e)));
    return report;
  }
  return validate_table(kind, e);
}

bool is_valid_pseudo_effect_algebra(const PartialAlgebra& e) {
  return validate_table(StructureKind::PseudoEffectAlgebra, e).pass;
}

bool is_valid_effect_algebra(const PartialAlgebra& e) {
  return validate_table(StructureKind::EffectAlgebra, e).pass;
}

bool is_commutative(const PartialAlgebra& e) {
  for (int a = 0; a < e.size(); ++a)
    for (int b = a + 1; b < e.size(); ++b)
      if (e.sum(a, b) != e.sum(b, a)) return false;
  return true;
}

DerivedOrder derived_order(const PartialAlgebra& e) {
  if (!is_valid_pseudo_effect_algebra(e))
    throw ContractError("derived_order: '" + e.name + "' is not a validated (pseudo) effect algebra");
  DerivedOrder order;
  const int n = e.size();
  order.n = n;
  order.leq.assign(static_cast<size_t>(n) * n, false);
  order.joins.assign(static_cast<size_t>(n) * n, kUndefined);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (e.defined(a, c)) order.leq[static_cast<size_t>(a) * n + e.sum(a, c)] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> upper;
      for (int u = 0; u < n; ++u)
        if (order.le(a, u) && order.le(b, u)) upper.push_back(u);
      for (int u : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](int v) { return order.le(u, v); })) {
          order.joins[static_cast<size_t>(a) * n + b] = u;
          break;
        }
    }
  return order;
}

Supplements supplements(const PartialAlgebra& e, int a) {
  if (!is_valid_pseudo_effect_algebra(e))
    throw ContractError("supplements: '" + e.name + "' is not a validated (pseudo) effect algebra");
  Supplements s{kUndefined, kUndefined};
  for (int b = 0; b < e.size(); ++b) {
    if (e.sum(b, a) == e.one) s.left = b;
    if (e.sum(a, b) == e.one) s.right = b;
  }
  return s;
}

TernaryRelation derive_delta(const TernaryRelation& mu, const std::vector<bool>& epsilon) {
  const int n = mu.size();
  // cap(b, x) ⇔ μ(b, x) meets ε
  std::vector<char> cap(static_cast<size_t>(n) * n, 0);
  for (int b = 0; b < n; ++b)
    for (int x = 0; x < n; ++x)
      for (int z : mu.image(b, x))
        if (epsilon[z]) cap[static_cast<size_t>(b) * n + x] = 1;
  TernaryRelation delta(n);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < n; ++x)
      for (int a : mu.image(c, x))
        for (int b = 0; b < n; ++b)
          if (cap[static_cast<size_t>(b) * n + x]) delta.insert(c, a, b);
  return delta;
}

std::string_view delta_convention(bool commutative) {
  if (commutative) return "delta: z -> (x,y) iff z' = x' + y'";
  return "delta: z -> (x,y) iff z~ = y~ + x~ (right supplements; rotation-derived)";
}

RelFA to_relfa(const PartialAlgebra& e) {
  RelFA f(e.name, e.elements);
  for (const auto& [a, b, c] : e.sum_triples()) f.mu.insert(a, b, c);
  f.eta[e.zero] = true;
  f.epsilon[e.one] = true;
  if (is_commutative(e) && is_valid_effect_algebra(e)) {
    // δ: c ↦ (a, b) ⇔ c′ = a′ ⊕ b′
    std::vector<int> supp(e.size());
    for (int a = 0; a < e.size(); ++a) supp[a] = supplements(e, a).right;
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b) {
        int s = e.sum(supp[a], supp[b]);
        if (s == kUndefined) continue;
        for (int c = 0; c < e.size(); ++c)
          if (supp[c] == s) f.delta.insert(c, a, b);
      }
  } else {
    f.delta = derive_delta(f.mu, f.epsilon);
  }
  return f;
}

std::optional<UnitTyping> unit_typing(const RelFA& f) {
  const int n = f.size();
  UnitTyping ty;
  auto& src = ty.source;
  auto& tgt = ty.target;
  src.assign(n, -1);
  tgt.assign(n, -1);
  for (int u = 0; u < n; ++u)
    if (f.eta[u] && !f.mu.contains(u, u, u)) return std::nullopt;
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u) {
      if (!f.eta[u]) continue;
      if (f.mu.contains(a, u, a)) {
        if (src[a] >= 0) return std::nullopt;
        src[a] = u;
      }
      if (f.mu.contains(u, a, a)) {
        if (tgt[a] >= 0) return std::nullopt;
        tgt[a] = u;
      }
    }
  for (int a = 0; a < n; ++a)
    if (src[a] < 0 || tgt[a] < 0) return std::nullopt;
  for (const auto& [x, y, z] : f.mu.triples())
    if (src[x] != tgt[y] || src[z] != src[y] || tgt[z] != tgt[x]) return std::nullopt;
  return ty;
}

bool has_unit_typing(const RelFA& f) { return unit_typing(f).has_value(); }

std::optional<PartialAlgebra> as_partial_algebra(const RelFA& f) {
  auto units = f.units();
  auto counits = f.counits();
  if (units.size() != 1 || counits.size() != 1) return std::nullopt;
  const int n = f.size();
  PartialAlgebra e;
  e.name = f.name;
  e.elements = f.elements;
  e.zero = units.front();
  e.one = counits.front();
  e.table.assign(static_cast<size_t>(n) * n, kUndefined);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& img = f.mu.image(a, b);
      if (img.size() > 1) return std::nullopt;
      if (!img.empty()) e.table[static_cast<size_t>(a) * n + b] = img.front();
    }
  return e;
}

PartialAlgebra interval(const PartialAlgebra& e, int u) {
  auto order = derived_order(e);
  std::vector<int> keep;
  for (int x = 0; x < e.size(); ++x)
    if (order.le(x, u)) keep.push_back(x);
  std::vector<int> position(e.size(), -1);
  PartialAlgebra out;
  out.name = "[" + e.elements[e.zero] + "," + e.elements[u] + "]";
  for (int x : keep) {
    position[x] = out.size();
    out.elements.push_back(e.elements[x]);
  }
  const int m = out.size();
  out.table.assign(static_cast<size_t>(m) * m, kUndefined);
  for (int x : keep)
    for (int y : keep) {
      int s = e.sum(x, y);
      if (s != kUndefined && position[s] >= 0)
        out.table[static_cast<size_t>(position[x]) * m + position[y]] = position[s];
    }
  out.zero = position[e.zero];
  out.one = position[u];
  return out;
}

}  // namespace fa
