#pragma once

#include <string>
#include <vector>

#include "fa/algebra.hpp"
#include "fa/complex.hpp"
#include "fa/lifting.hpp"

namespace fa {

/// Nerve of a relational ε-monoid together with the back-references
/// edge → element and vertex → unit.
struct NerveComplex {
  TruncatedEpsilonComplex complex;
  std::vector<int> edge_element;
  std::vector<int> vertex_unit;
};

/// Vertices are the units u with μ(u,u) ∋ u; edges are the triples (u, a, v)
/// with μ(a,u) ∋ a and μ(v,a) ∋ a; the triangle ((v,b,w), (u,c,w), (u,a,v))
/// is present iff μ(b,a) ∋ c. An edge is marked iff its element is in ε.
NerveComplex nerve(const RelFA& a);

/// The map of nerves induced by an element map A → B. Throws ContractError
/// when the element map does not induce a morphism.
ComplexMorphism nerve_map(const RelFA& a, const RelFA& b, const std::vector<int>& element_map);

/// One recognition check: a shape, the lifting mode and whether it counts
/// towards the verdict.
struct RecognitionCheck {
  std::string item;
  bool required = true;
  LiftingResult result;
};

struct NerveRecognition {
  bool pass = true;
  std::vector<RecognitionCheck> checks;
  std::vector<std::string> automatic;  // items holding by representation

  ValidationReport report() const;
  const RecognitionCheck* first_failure() const;
};

/// Required: unique RLP for Λεⁿ_0 and Λεⁿ_n (n = 1, 2, 3) and RLP for
/// assoc-02. Optional flags: RLP for Λ³_i (i = 0..3) and assoc-13.
NerveRecognition recognize_nerve_detailed(const TruncatedEpsilonComplex& x, bool optional_flags = true);
ValidationReport recognize_nerve(const TruncatedEpsilonComplex& x);

/// Carrier = edges, μ = {(d0, d2, d1)}, η = identities, ε = marked edges,
/// δ derived from μ and ε. Throws ContractError when recognition fails.
RelFA nerve_to_algebra(const TruncatedEpsilonComplex& x);

/// The simplicial side runs the required checks only.
struct CrossValidation {
  bool agree = false;
  ValidationReport algebraic;
  ValidationReport simplicial;
};

CrossValidation cross_validate_detailed(const RelFA& a);
bool cross_validate(const RelFA& a);

}  // namespace fa
