#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fa/relation.hpp"

namespace fa {

inline constexpr int kUndefined = -1;

/// Finite partial algebra (E, ⊕, 0, 1) stored as a dense table. Used for both
/// effect algebras and pseudo effect algebras; commutativity is a property
/// checked by validation, not assumed by the layout.
struct PartialAlgebra {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> table;  // size n*n, kUndefined where a⊕b is undefined
  int zero = 0;
  int one = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int sum(int a, int b) const { return table[static_cast<size_t>(a) * size() + b]; }
  bool defined(int a, int b) const { return sum(a, b) != kUndefined; }
  int index_of(std::string_view element) const;  // throws InputError

  /// Builds a table from (a, b, a⊕b) name triples. Rejects identifiers outside
  /// the carrier, duplicate element names, and multi-valued sums.
  static PartialAlgebra from_triples(std::string name, std::vector<std::string> elements,
                                     const std::vector<std::array<std::string, 3>>& sums,
                                     std::string_view zero, std::string_view one);

  /// Defined sums as index triples in row-major order.
  std::vector<Triple> sum_triples() const;

  friend bool operator==(const PartialAlgebra&, const PartialAlgebra&) = default;
};

using EffectAlgebraTable = PartialAlgebra;
using PseudoEffectAlgebraTable = PartialAlgebra;

/// Frobenius algebra (or relational ε-monoid) in Rel.
///   mu    : (x, y, z) means μ:(x,y) ↦ z
///   delta : (z, x, y) means δ: z ↦ (x,y)
struct RelFA {
  std::string name;
  std::vector<std::string> elements;
  TernaryRelation mu;
  TernaryRelation delta;
  std::vector<bool> eta;
  std::vector<bool> epsilon;

  RelFA() = default;
  RelFA(std::string name, std::vector<std::string> elements);

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(std::string_view element) const;  // throws InputError
  std::vector<int> units() const;
  std::vector<int> counits() const;
};

enum class StructureKind { RelMonoid, Frobenius, EffectAlgebra, PseudoEffectAlgebra };

std::string_view to_string(StructureKind kind);
StructureKind parse_structure_kind(std::string_view text);  // throws InputError

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::vector<int> counterexample;  // element indices, empty on pass
};

struct ValidationReport {
  StructureKind kind = StructureKind::Frobenius;
  bool pass = true;
  std::vector<AxiomVerdict> axioms;
  std::vector<AxiomVerdict> derived;  // reported, not part of the pass flag
  std::vector<std::string> notes;

  const AxiomVerdict* find(std::string_view axiom) const;
};

ValidationReport validate(StructureKind kind, const RelFA& structure);
ValidationReport validate(StructureKind kind, const PartialAlgebra& structure);

/// True when the table passes validation as a pseudo effect algebra (every
/// effect algebra does).
bool is_valid_pseudo_effect_algebra(const PartialAlgebra& e);
bool is_valid_effect_algebra(const PartialAlgebra& e);
bool is_commutative(const PartialAlgebra& e);

/// The partial order a ≤ b ⇔ ∃c. a⊕c = b, with joins where they exist.
struct DerivedOrder {
  int n = 0;
  std::vector<bool> leq;   // n*n
  std::vector<int> joins;  // n*n, kUndefined where no least upper bound exists

  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b]; }
  std::optional<int> join(int a, int b) const {
    int j = joins[static_cast<size_t>(a) * n + b];
    if (j == kUndefined) return std::nullopt;
    return j;
  }
};

DerivedOrder derived_order(const PartialAlgebra& e);  // ContractError unless validated

struct Supplements {
  int left = 0;   // a⁻ with a⁻⊕a = 1
  int right = 0;  // a∼ with a⊕a∼ = 1; equals a′ = left in the commutative case
};

Supplements supplements(const PartialAlgebra& e, int a);

/// Comultiplication determined by μ and ε:
///   δ: c ↦ (a, b)  ⇔  ∃x. μ:(c,x) ↦ a  and  μ:(b,x) meets ε.
/// For effect algebras this is c′ = a′⊕b′; for pseudo effect algebras it reads
/// c∼ = b∼ ⊕ a∼.
TernaryRelation derive_delta(const TernaryRelation& mu, const std::vector<bool>& epsilon);

/// Description of the δ convention emitted with to_relfa results.
std::string_view delta_convention(bool commutative);

RelFA to_relfa(const PartialAlgebra& e);

/// Every unit is idempotent, every element a has exactly one unit s(a) with μ(a, s(a)) ∋ a
/// and exactly one t(a) with μ(t(a), a) ∋ a, and every μ(x,y) ∋ z respects
/// them: s(x) = t(y), s(z) = s(y), t(z) = t(x). Exactly the structures the
/// nerve sees in full.
struct UnitTyping {
  std::vector<int> source;  // s(a)
  std::vector<int> target;  // t(a)
};
std::optional<UnitTyping> unit_typing(const RelFA& f);
bool has_unit_typing(const RelFA& f);

/// Recovers the table when μ is a partial function, η = {0} and ε = {1}.
std::optional<PartialAlgebra> as_partial_algebra(const RelFA& f);

/// Interval [0, u] of a validated (pseudo) effect algebra, with u as top.
PartialAlgebra interval(const PartialAlgebra& e, int u);

}  // namespace fa
