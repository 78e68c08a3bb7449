#include "fa/homology.hpp"

#include "fa/nerve.hpp"

namespace fa {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ChainMatrices chain_matrices(const TruncatedEpsilonComplex& x, bool normalized) {
  ChainMatrices c;
  std::vector<int> column(x.edge_count(), -1);
  for (int e = 0; e < x.edge_count(); ++e) {
    if (normalized && x.is_identity(e)) continue;
    column[e] = static_cast<int>(c.edges.size());
    c.edges.push_back(e);
  }
  for (const auto& t : x.triangles())
    if (!normalized || !x.is_degenerate(t)) c.triangles.push_back(t);

  c.d1 = IntMatrix(x.vertex_count(), static_cast<int>(c.edges.size()));
  for (size_t j = 0; j < c.edges.size(); ++j) {
    int e = c.edges[j];
    c.d1(x.target(e), static_cast<int>(j)) += 1;
    c.d1(x.source(e), static_cast<int>(j)) -= 1;
  }
  c.d2 = IntMatrix(static_cast<int>(c.edges.size()), static_cast<int>(c.triangles.size()));
  for (size_t j = 0; j < c.triangles.size(); ++j) {
    const auto& [d0, d1, d2] = c.triangles[j];
    const int col = static_cast<int>(j);
    if (column[d0] >= 0) c.d2(column[d0], col) += 1;
    if (column[d1] >= 0) c.d2(column[d1], col) -= 1;
    if (column[d2] >= 0) c.d2(column[d2], col) += 1;
  }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row[target] -= q * row[source]
void add_row(IntMatrix& m, int target, int source, const BigInt& q) {
  for (int j = 0; j < m.cols; ++j) m(target, j) -= q * m(source, j);
}

void add_col(IntMatrix& m, int target, int source, const BigInt& q) {
  for (int i = 0; i < m.rows; ++i) m(i, target) -= q * m(i, source);
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

// Floor-free quotient towards zero keeps remainders smaller than the pivot.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

std::vector<BigInt> SmithNormalForm::diagonal() const {
  std::vector<BigInt> out;
  for (int i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

int SmithNormalForm::rank() const { return static_cast<int>(diagonal().size()); }

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SmithNormalForm s{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  IntMatrix& d = s.d;
  IntMatrix& u = s.u;  // row operations applied to the identity
  IntMatrix& v = s.v;  // column operations applied to the identity
  const int limit = std::min(m.rows, m.cols);

  for (int t = 0; t < limit; ++t) {
    while (true) {
      // Least absolute nonzero entry of the trailing block, row-major ties.
      int pr = -1, pc = -1;
      BigInt best;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
          if (d(i, j) == 0) continue;
          BigInt a = abs(d(i, j));
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) return s;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = quotient(d(i, t), d(t, t));
        add_row(d, i, t, q);
        add_row(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = quotient(d(t, j), d(t, t));
        add_col(d, j, t, q);
        add_col(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an entry the pivot does not divide.
      int bad = -1;
      for (int i = t + 1; i < d.rows && bad < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(d, t, bad, -1);
      add_row(u, t, bad, -1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return s;
}

AbelianGroupPresentation cokernel(const IntMatrix& relations, std::vector<std::string> generators) {
  AbelianGroupPresentation g;
  g.generators = std::move(generators);
  g.relations = relations;
  auto snf = smith_normal_form(relations);
  auto diag = snf.diagonal();
  g.rank = relations.rows - static_cast<int>(diag.size());
  for (const auto& x : diag)
    if (x != 1) g.torsion.push_back(x);
  return g;
}

std::string AbelianGroupPresentation::to_string() const {
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

AbelianGroupPresentation h1(const TruncatedEpsilonComplex& x, bool normalized) {
  auto c = chain_matrices(x, normalized);
  // ker ∂1 is a direct summand of C1, so the torsion of H1 is that of
  // coker ∂2 and the rank is dim ker ∂1 − rank ∂2.
  int r1 = smith_normal_form(c.d1).rank();
  std::vector<std::string> names;
  for (int e : c.edges) names.push_back(x.edge_name(e));
  auto g = cokernel(c.d2, std::move(names));
  int r2 = c.d2.rows - g.rank;
  g.rank = static_cast<int>(c.edges.size()) - r1 - r2;
  return g;
}

AbelianGroupPresentation h1_universal_group(const TruncatedEpsilonComplex& x) { return h1(x); }

AbelianGroupPresentation h1_universal_group(const PartialAlgebra& e) {
  return h1(nerve(to_relfa(e)).complex);
}

AbelianGroupPresentation direct_presentation(const PartialAlgebra& e) {
  auto triples = e.sum_triples();
  IntMatrix rel(e.size(), static_cast<int>(triples.size()));
  for (size_t j = 0; j < triples.size(); ++j) {
    const auto& [a, b, c] = triples[j];
    const int col = static_cast<int>(j);
    rel(a, col) += 1;
    rel(c, col) -= 1;
    rel(b, col) += 1;
  }
  return cokernel(rel, e.elements);
}

}  // namespace fa
