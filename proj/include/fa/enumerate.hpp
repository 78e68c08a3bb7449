#pragma once

#include <vector>

#include "fa/algebra.hpp"

namespace fa {

enum class EnumKind { EffectAlgebra, PseudoEffectAlgebra, Frobenius };

EnumKind parse_enum_kind(std::string_view text);  // throws InputError
std::string_view to_string(EnumKind kind);

inline constexpr int kDefaultEnumerationBound = 5;

struct EnumerationOptions {
  int bound = kDefaultEnumerationBound;
  bool parallel = true;
};

/// One canonical representative per isomorphism class, sorted by canonical
/// encoding. Tables have 0 at index 0 and 1 at index n-1. Throws InputError
/// when size exceeds the bound.
std::vector<PartialAlgebra> enumerate_tables(int size, EnumKind kind, const EnumerationOptions& opt = {});

/// Frobenius algebras in Rel on `size` elements, units first.
std::vector<RelFA> enumerate_frobenius(int size, const EnumerationOptions& opt = {});

/// The Frobenius algebras of the given size together with every structure
/// one bit away (one μ triple, one η or ε flag toggled) that still has a unit
/// typing, up to isomorphism; δ is derived from μ and ε.
std::vector<RelFA> enumerate_frobenius_candidates(int size, const EnumerationOptions& opt = {});

/// Lexicographically least flattened table over permutations fixing 0 and 1.
std::vector<int> canonical_table(const PartialAlgebra& e);

/// Least encoding (η, ε, μ) over all carrier permutations.
std::vector<int> canonical_relfa(const RelFA& f);

/// Canonical relabeling of `e` with elements "0", "x1", ..., "1".
PartialAlgebra canonical_form(const PartialAlgebra& e);

}  // namespace fa
