#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fa/relation.hpp"

namespace fa {

struct Edge {
  int source = 0;
  int target = 0;
};

/// 2-truncated ε-simplicial complex with a triangle predicate.
///
/// A triangle (d0, d1, d2) has d2: u→v, d0: v→w, d1: u→w. Every vertex owns
/// an identity loop, and the degenerate triangles (a, a, id(s a)) and
/// (id(t a), a, a) are present for every edge a. Simplices of dimension ≥ 3
/// are implicit: an assignment of edges to all vertex pairs whose triangles
/// are all valid.
class TruncatedEpsilonComplex {
 public:
  std::string name;

  int add_vertex(std::string vertex_name, std::string identity_name = {}, bool identity_marked = false);
  int add_edge(std::string edge_name, int source, int target, bool is_marked = false);
  /// Throws ContractError when the endpoints are incompatible.
  void add_triangle(int d0, int d1, int d2);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  size_t triangle_count() const { return triangles_.size(); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  const Edge& edge(int e) const { return edges_[e]; }
  int source(int e) const { return edges_[e].source; }
  int target(int e) const { return edges_[e].target; }
  int identity(int v) const { return identity_[v]; }
  bool is_identity(int e) const { return identity_of_[e] >= 0; }
  int identity_vertex(int e) const { return identity_of_[e]; }
  bool marked(int e) const { return marked_[e] != 0; }
  void set_marked(int e, bool value) { marked_[e] = value; }

  bool has_triangle(int d0, int d1, int d2) const { return triangle_set_.count(key(d0, d1, d2)) != 0; }
  bool is_degenerate(const Triple& t) const;

  /// Triangles in insertion order (degenerate ones included).
  const std::vector<Triple>& triangles() const { return triangles_; }

  /// Candidate completions, sorted ascending.
  const std::vector<int>& d1_for(int d0, int d2) const { return lookup(by_d0_d2_, d0, d2); }
  const std::vector<int>& d0_for(int d1, int d2) const { return lookup(by_d1_d2_, d1, d2); }
  const std::vector<int>& d2_for(int d0, int d1) const { return lookup(by_d0_d1_, d0, d1); }

  /// Edges u → v, ascending.
  const std::vector<int>& edges_between(int u, int v) const;

  int find_vertex(const std::string& vertex_name) const;  // -1 when absent
  int find_edge(const std::string& edge_name) const;

  std::vector<int> marked_edges() const;

 private:
  static std::uint64_t key(int a, int b, int c) {
    return (static_cast<std::uint64_t>(a) << 42) ^ (static_cast<std::uint64_t>(b) << 21) ^
           static_cast<std::uint64_t>(c);
  }
  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  static const std::vector<int>& lookup(const std::unordered_map<std::uint64_t, std::vector<int>>& m,
                                        int a, int b);
  void insert_triangle(int d0, int d1, int d2);

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
  std::vector<int> identity_;
  std::vector<int> identity_of_;
  std::vector<std::uint8_t> marked_;
  std::vector<Triple> triangles_;
  std::unordered_set<std::uint64_t> triangle_set_;
  std::unordered_map<std::uint64_t, std::vector<int>> by_d0_d2_, by_d1_d2_, by_d0_d1_;
  std::unordered_map<std::uint64_t, std::vector<int>> between_;
};

/// Vertex and edge assignments; triangles are determined by the edges.
struct ComplexMorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;

  friend bool operator==(const ComplexMorphism&, const ComplexMorphism&) = default;
  friend auto operator<=>(const ComplexMorphism&, const ComplexMorphism&) = default;
};

/// Checks endpoints, identities, triangles and marking.
bool is_morphism(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y,
                 const ComplexMorphism& f);

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);  // g ∘ f

/// Presheaf product at truncation level: vertex (x, y) has index x*|Y0|+y;
/// edges follow their own numbering; `edge_coords`, when given, receives the
/// (e, f) pair of each product edge. An edge is marked iff both coordinates are.
TruncatedEpsilonComplex product(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y,
                                std::vector<std::pair<int, int>>* edge_coords = nullptr);

/// Subcomplex on the given vertices, edges (identities of kept vertices are
/// added) and triangles (degenerate ones of kept edges are added). Returns
/// the complex and writes the inclusion into `inclusion`.
TruncatedEpsilonComplex subcomplex(const TruncatedEpsilonComplex& x, const std::vector<bool>& keep_vertex,
                                   const std::vector<bool>& keep_edge, const std::vector<bool>& keep_triangle,
                                   ComplexMorphism& inclusion);

/// Structural equality of two complexes up to the identity relabeling.
bool same_structure(const TruncatedEpsilonComplex& a, const TruncatedEpsilonComplex& b);

}  // namespace fa
