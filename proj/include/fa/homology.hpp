#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fa/algebra.hpp"
#include "fa/complex.hpp"

namespace fa {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
  static IntMatrix identity(int n);

  BigInt& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const BigInt& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Boundary matrices of the chain complex C2 → C1 → C0.
struct ChainMatrices {
  IntMatrix d1;                   // rows: vertices, columns: `edges`
  IntMatrix d2;                   // rows: `edges`, columns: `triangles`
  std::vector<int> edges;         // edge index of each C1 basis element
  std::vector<Triple> triangles;  // triangle of each C2 basis element
};

/// Normalized chains skip identity edges and degenerate triangles; ∂1 a =
/// t(a) − s(a) and ∂2 σ = d0 − d1 + d2 (identity edges contribute zero).
ChainMatrices chain_matrices(const TruncatedEpsilonComplex& x, bool normalized = true);

/// U·M·V = D with D diagonal, d1 | d2 | …, U and V unimodular. Pivots are
/// the least absolute nonzero entry, ties broken in row-major order.
struct SmithNormalForm {
  IntMatrix d, u, v;
  std::vector<BigInt> diagonal() const;  // nonzero diagonal entries
  int rank() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

struct AbelianGroupPresentation {
  int rank = 0;
  std::vector<BigInt> torsion;          // invariant factors ≥ 2, each dividing the next
  std::vector<std::string> generators;  // audit: generator names
  IntMatrix relations;                  // audit: one column per relation

  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
  friend bool operator==(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

/// H1 = ker ∂1 / im ∂2.
AbelianGroupPresentation h1(const TruncatedEpsilonComplex& x, bool normalized = true);

/// H1 of the nerve of a validated effect algebra; this is its universal group.
AbelianGroupPresentation h1_universal_group(const PartialAlgebra& e);
AbelianGroupPresentation h1_universal_group(const TruncatedEpsilonComplex& x);

/// Z^(E) modulo ⟨[a] − [a⊕b] + [b]⟩, built from the sum table directly.
AbelianGroupPresentation direct_presentation(const PartialAlgebra& e);

/// Cokernel Z^rows / column span of `relations`.
AbelianGroupPresentation cokernel(const IntMatrix& relations, std::vector<std::string> generators);

}  // namespace fa
