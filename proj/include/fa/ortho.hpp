#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fa/algebra.hpp"

namespace fa {

/// Boolean matrix over element pairs.
struct BoxslashRelation {
  int n = 0;
  std::vector<std::uint8_t> bits;

  explicit BoxslashRelation(int size = 0) : n(size), bits(static_cast<size_t>(size) * size, 0) {}
  bool operator()(int a, int b) const { return bits[static_cast<size_t>(a) * n + b] != 0; }
  void set(int a, int b, bool v) { bits[static_cast<size_t>(a) * n + b] = v; }
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const BoxslashRelation&, const BoxslashRelation&) = default;
};

/// a ⊡ b by definition: for all p, q, d with μ(q,a) ∋ d and μ(b,p) ∋ d there
/// is l with μ(l,a) ∋ p and μ(b,l) ∋ q. Rows are computed in parallel.
BoxslashRelation boxslash_relation(const RelFA& f);
BoxslashRelation boxslash_relation_serial(const RelFA& f);
bool boxslash(const RelFA& f, int a, int b);

/// a ⊥ b, a∨b exists and equals a⊕b.
BoxslashRelation boxslash_order_oracle(const PartialAlgebra& e);

/// b ⊥ a in a relational monoid: μ(b,a) is nonempty.
bool perp(const RelFA& f, int b, int a);

struct InverseAnalysis {
  std::optional<int> right_inverse;  // c with μ(a,c) meeting η
  bool perp_all_at_target = false;   // b ⊥ a whenever s(b) = t(a)
  bool epsilon_perp = false;         // some e ∈ ε with e ⊥ a
  bool F_boxslash_a = false;
  bool epsilon_boxslash_a = false;
  bool cancellative = false;
  /// (i) ⇔ (ii) ⇔ (iii), and ⇔ (iv) ⇔ (v) when cancellative.
  bool equivalences_hold = false;
};

InverseAnalysis inverse_analysis(const RelFA& f, int a);

/// A flag with the elements witnessing its failure.
struct Flag {
  bool value = false;
  std::vector<int> witness;
};

struct ClassificationFlags {
  Flag commutative;
  Flag cancellative;
  Flag epsilon_boxslash_is_eta;
  Flag eta_singleton;
  Flag effect_algebra;
  std::optional<Flag> orthoalgebra;        // only for effect algebras
  std::optional<Flag> orthomodular_poset;  // only for effect algebras
  Flag braided;
  Flag braided_left, braided_right;
  /// Order-theoretic oracles computed on the recovered table.
  std::optional<bool> orthoalgebra_oracle, orthomodular_oracle;
  bool every_counit_boxslash_singleton = false;  // (v)
};

ClassificationFlags classify(const RelFA& f);

/// Braiding checked on the sum table: whenever b⊕a is defined there are
/// a₂ with a₂⊕b = b⊕a and, whenever a⊕b is defined, a₁ with b⊕a₁ = a⊕b.
struct BraidingBruteForce {
  bool left = true, right = true;
  std::vector<int> left_witness, right_witness;
};
BraidingBruteForce braiding_brute_force(const PartialAlgebra& e);

struct CoherenceResult {
  bool holds = true;
  std::vector<int> witness;  // (a, b, c) pairwise orthogonal without a⊕b⊕c
};

/// For pairwise orthogonal a, b, c both (a⊕b)⊕c and a⊕(b⊕c) are defined.
CoherenceResult coherence_check(const PartialAlgebra& e);

/// The unique l with μ(a,l) ∋ e, where e is the ε-edge with target t(a).
/// Throws ContractError when it is missing or not unique.
int rotate_edge(const RelFA& f, int a);
/// The unique m with μ(m,a) ∋ e, where e is the ε-edge with source s(a).
int rotate_edge_inverse(const RelFA& f, int a);

}  // namespace fa
