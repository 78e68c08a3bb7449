#pragma once

#include <optional>
#include <vector>

#include "fa/algebra.hpp"
#include "fa/complex.hpp"

namespace fa {

/// Bijection of carriers preserving μ, η and ε (δ is not compared).
std::optional<std::vector<int>> find_isomorphism(const RelFA& a, const RelFA& b);

/// Checks that `map` is such a bijection.
bool is_isomorphism(const RelFA& a, const RelFA& b, const std::vector<int>& map);

/// Isomorphism of truncated ε-complexes: bijective on vertices and edges,
/// preserving and reflecting triangles, identities and marking.
std::optional<ComplexMorphism> find_isomorphism(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y);

bool is_isomorphism(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y, const ComplexMorphism& f);

}  // namespace fa
