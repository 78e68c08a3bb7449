#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fa/algebra.hpp"
#include "fa/complex.hpp"
#include "fa/lifting.hpp"
#include "fa/nerve.hpp"

namespace fa {

/// Element map E → F preserving 0 and all defined sums (1 need not be kept).
struct PMMorphism {
  std::vector<int> map;
  friend bool operator==(const PMMorphism&, const PMMorphism&) = default;
  friend auto operator<=>(const PMMorphism&, const PMMorphism&) = default;
};

bool is_pm_morphism(const PartialAlgebra& e, const PartialAlgebra& f, const PMMorphism& h);

/// All partial monoid morphisms in lexicographic order. Atoms are assigned
/// first and sums are propagated forward.
std::vector<PMMorphism> pm_morphisms(const PartialAlgebra& e, const PartialAlgebra& f);
std::vector<PMMorphism> pm_morphisms_serial(const PartialAlgebra& e, const PartialAlgebra& f);

/// The unique g with b⊕h(a) = g(a)⊕b. Throws ContractError unless b⊕h(1) is
/// defined or when g fails to be a morphism.
PMMorphism conjugate(const PartialAlgebra& e, const PartialAlgebra& f, const PMMorphism& h, int b);

/// One level of the mapping complex: the product Δⁿ × X and its maps to Y.
struct MappingLevel {
  int dim = 0;
  TruncatedEpsilonComplex product;
  std::vector<std::pair<int, int>> coords;  // product edge → (simplex edge, X edge)
  std::vector<int> index;                   // simplex edge * |X1| + X edge → product edge
  int x_vertices = 0, x_edges = 0;
  std::vector<ComplexMorphism> maps;  // sorted

  int edge_at(int simplex_edge, int x_edge) const { return index[static_cast<size_t>(simplex_edge) * x_edges + x_edge]; }
  int find(const ComplexMorphism& m) const;  // -1 when absent
};

/// [X,Y] truncated at dimension 2: vertices, edges and triangles are the maps
/// Δⁿ × X → Y for n = 0, 1, 2; an edge is marked when it is a map from
/// Σ¹ × X. Faces and identities are induced by the simplex maps.
struct MappingComplex {
  TruncatedEpsilonComplex complex;
  MappingLevel level[3];
  std::vector<int> edge_of_map;  // level-1 map → edge (vertex i is level-0 map i)
  std::vector<int> map_of_edge;  // edge → level-1 map
  std::vector<bool> sigma1_map;  // level-1 map is a map from Σ¹ × X
};

MappingComplex mapping_complex(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y);

/// Simplicial operator Δᵏ → Δⁿ given by a monotone vertex map.
ComplexMorphism simplex_morphism(int k, int n, const std::vector<int>& vertices);

/// φ × ψ: Δᵏ × A → Δⁿ × B between level products.
ComplexMorphism product_morphism(const MappingLevel& from, const MappingLevel& to, const ComplexMorphism& phi,
                                 const ComplexMorphism& psi);

struct HomObject {
  RelFA algebra;                        // disjoint union of the components
  std::vector<PMMorphism> morphisms;    // component index → h
  std::vector<PartialAlgebra> components;  // [0, h(1)′] in F
  std::vector<int> component_of;        // element → component
  std::vector<int> element_in_f;        // element → element of F
};

/// ⊔_h to_relfa([0, h(1)′]) over the partial monoid morphisms h: E → F.
HomObject hom_object_ea(const PartialAlgebra& e, const PartialAlgebra& f);

struct MappingTheoremReport {
  bool holds = false;
  bool candidate_map = false;  // the explicit labeling was an isomorphism
  int vertices[2] = {0, 0};    // nerve side, mapping side
  int edges[2] = {0, 0};
  int marked[2] = {0, 0};
  size_t triangles[2] = {0, 0};
  std::optional<ComplexMorphism> isomorphism;
};

/// N(hom_object_ea(E,F)) ≅ [N(E), N(F)].
MappingTheoremReport verify_mapping_theorem(const PartialAlgebra& e, const PartialAlgebra& f);

/// Restriction p: [N(E),N(F)] → [N(chain(1)),N(F)] along 0 ↦ 0, 1 ↦ 1.
struct EvaluationFibration {
  MappingComplex total, base;
  ComplexMorphism p;
};
EvaluationFibration evaluation_fibration(const PartialAlgebra& e, const PartialAlgebra& f);

/// Unique relative lifting of p against Λⁿ_i (n ≤ 3), ∂Δ², ∂Δ³ and Δ¹ ⊂ Σ¹.
ValidationReport eval_fibration_check(const PartialAlgebra& e, const PartialAlgebra& f,
                                      std::vector<LiftingResult>* details = nullptr);

/// Pointwise composition (K, H) ↦ K(s, H(s, a)) as a map of complexes
/// [N F, N G] × [N E, N F] → [N E, N G].
struct EnrichedComposition {
  MappingComplex left, right, result;  // [N F, N G], [N E, N F], [N E, N G]
  TruncatedEpsilonComplex domain;      // left × right
  std::vector<std::pair<int, int>> domain_coords;
  ComplexMorphism map;
  bool is_morphism = false;
};
EnrichedComposition enriched_compose(const PartialAlgebra& e, const PartialAlgebra& f, const PartialAlgebra& g);

/// Element map of the vertex h of [N(E), N(F)].
PMMorphism vertex_morphism(const NerveComplex& ne, const NerveComplex& nf, const ComplexMorphism& level0_map,
                           const MappingLevel& level0);

}  // namespace fa
