#pragma once

#include <string>
#include <vector>

#include "fa/complex.hpp"

namespace fa {

struct ShapeInclusion {
  std::string name;
  TruncatedEpsilonComplex domain;
  TruncatedEpsilonComplex codomain;
  ComplexMorphism inclusion;
};

/// Δⁿ: vertices 0..n, edge "ij" for i ≤ j (identity "ii"), every triangle
/// (jk, ik, ij) with i ≤ j ≤ k.
TruncatedEpsilonComplex simplex(int n);

/// Σⁿ: Δⁿ with the edge 0n marked (for n = 0 the identity loop).
TruncatedEpsilonComplex sigma(int n);

/// Union of the faces Δ^I ⊂ X over the given vertex sets (X a simplex-like
/// complex with vertices named by digits).
ShapeInclusion face_union(const TruncatedEpsilonComplex& x, const std::vector<std::vector<int>>& faces,
                          std::string name);

ShapeInclusion simplex_shape(int n);                 // ∅ ⊂ Δⁿ
ShapeInclusion sigma_shape(int n);                   // ∅ ⊂ Σⁿ
ShapeInclusion boundary(int n);                      // ∂Δⁿ ⊂ Δⁿ
ShapeInclusion horn(int n, int i);                   // Λⁿ_i ⊂ Δⁿ
ShapeInclusion epsilon_horn(int n, int i);           // Λεⁿ_i ⊂ Σⁿ, i ∈ {0, n}
ShapeInclusion assoc_02();                           // ∂0Δ³ ∪ ∂2Δ³ ⊂ Δ³
ShapeInclusion assoc_13();                           // ∂1Δ³ ∪ ∂3Δ³ ⊂ Δ³
ShapeInclusion sigma1_mark();                        // Δ¹ ⊂ Σ¹
ShapeInclusion braiding(bool left);                  // subsets of the middle cylinder
ShapeInclusion faces(int n, const std::vector<std::vector<int>>& parts);  // ∪ Δ^I ⊂ Δⁿ

/// (A1 × X0) ∪ (A0 × X1) ⊂ A1 × X1.
ShapeInclusion box_inclusion(const ShapeInclusion& f, const ShapeInclusion& g);

/// Parses Delta[n], Sigma[n], boundary[n], horn[n,i], ehorn[n,i],
/// braiding-left, braiding-right, assoc-02, assoc-13, sigma1-mark,
/// faces[n;0 2|1] and box(s,t). Throws InputError.
ShapeInclusion make_shape(const std::string& name);

/// Cylinder used by the braiding shapes: vertices 0, 1; loops a1 at 0 and
/// a2 at 1; edges b, c: 0 → 1; triangles (b, c, a1) and (a2, c, b).
TruncatedEpsilonComplex braiding_cylinder();

}  // namespace fa
