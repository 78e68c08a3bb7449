#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fa/complex.hpp"
#include "fa/shapes.hpp"

namespace fa {

/// Constraint search for morphisms X → Y. Variables are the edges of X
/// (identity edges carry the vertex images); candidates come from the target
/// triangle indexes, and the most constrained edge is branched on first.
class ExtensionSolver {
 public:
  ExtensionSolver(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y);

  /// Fixes an edge of X. Returns false when the value is immediately inconsistent.
  bool fix_edge(int e, int value);
  bool fix_vertex(int v, int value);
  /// Fixes everything `partial` assigns along `inclusion` (A → X).
  bool fix_along(const ComplexMorphism& inclusion, const ComplexMorphism& partial);

  /// Restricts edge e of X to `allowed` (sorted) edges of Y.
  void restrict_edge(int e, std::vector<int> allowed);

  /// Only edge-injective maps (set before fixing anything).
  void set_injective(bool on) { injective_ = on; }

  /// Calls visit(morphism) for each solution until it returns false or
  /// `limit` solutions were reported. Returns the number reported.
  template <typename Visit>
  size_t enumerate(Visit&& visit, size_t limit = static_cast<size_t>(-1));

  std::optional<ComplexMorphism> first();
  size_t count(size_t limit = static_cast<size_t>(-1));
  std::vector<ComplexMorphism> all();

  size_t nodes() const { return nodes_; }
  /// Edge of X with the most dead ends during the last search (-1 if none).
  int hardest_edge() const;

 private:
  void candidates(int e, std::vector<int>& out) const;
  bool assign(int e, int value, std::vector<int>& trail_vertices);
  void unassign(int e, const std::vector<int>& trail_vertices);
  template <typename Visit>
  bool search(Visit& visit, size_t limit, size_t& reported);
  ComplexMorphism snapshot() const;

  const TruncatedEpsilonComplex& x_;
  const TruncatedEpsilonComplex& y_;
  std::vector<int> vimg_, eimg_;
  std::vector<std::vector<std::pair<int, int>>> tri_of_edge_;  // (triangle index, position)
  std::vector<std::optional<std::vector<int>>> allowed_;
  std::vector<int> identity_edges_y_, marked_y_, all_edges_y_;
  std::vector<size_t> dead_ends_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> pair_;  // Y triangles projected to position pairs (0,1), (0,2), (1,2)
  size_t unassigned_ = 0;
  size_t nodes_ = 0;
  bool consistent_ = true;
  bool injective_ = false;
};

/// All morphisms X → Y in lexicographic order of their maps.
std::vector<ComplexMorphism> hom_maps(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y);

enum class LiftMode { Exists, Unique };
std::string_view to_string(LiftMode mode);

enum class LiftVerdict { NoExtension, UniqueExtension, MultipleExtensions };
std::string_view to_string(LiftVerdict verdict);

struct LiftingCertificate {
  ComplexMorphism boundary;  // on the domain of the inclusion
  LiftVerdict verdict = LiftVerdict::NoExtension;
  std::vector<ComplexMorphism> witnesses;  // on the codomain
  ComplexMorphism base;                    // relative problems: the map into the base
};

struct LiftingResult {
  std::string shape;
  LiftMode mode = LiftMode::Exists;
  bool pass = true;
  size_t problems = 0;  // boundary maps (or commutative squares) examined
  size_t none = 0, unique = 0, multiple = 0;
  std::optional<LiftingCertificate> failure;  // first failing problem in enumeration order
};

/// Verdict for a single boundary map, by plain generate-and-test.
LiftingCertificate solve_lifting_problem(const ShapeInclusion& f, const TruncatedEpsilonComplex& y,
                                         const ComplexMorphism& boundary);

/// Every boundary map domain(f) → Y is tested; parallel over boundary maps.
LiftingResult check_lifting(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, LiftMode mode);
LiftingResult check_lifting_serial(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, LiftMode mode);

/// Lifting against p: X → Y. For every a: A → X and every g: B → Y with
/// g∘f = p∘a, counts l: B → X with l∘f = a and p∘l = g.
LiftingResult check_relative_lifting(const ShapeInclusion& f, const TruncatedEpsilonComplex& x,
                                     const TruncatedEpsilonComplex& y, const ComplexMorphism& p, LiftMode mode);

struct FillResult {
  std::optional<ComplexMorphism> extension;
  size_t nodes = 0;
  std::vector<std::string> trace;  // filled on failure
};

/// First extension of `boundary` along f in the solver's order.
FillResult generic_filler(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, const ComplexMorphism& boundary);

/// Number of maps Δᵈ → X sending no spine edge i → i+1 to an identity
/// (the non-degenerate d-simplices).
size_t count_nondegenerate_simplices(const TruncatedEpsilonComplex& x, int d);

// ---------------------------------------------------------------------------

template <typename Visit>
size_t ExtensionSolver::enumerate(Visit&& visit, size_t limit) {
  size_t reported = 0;
  nodes_ = 0;
  std::fill(dead_ends_.begin(), dead_ends_.end(), 0);
  if (!consistent_) return 0;
  search(visit, limit, reported);
  return reported;
}

template <typename Visit>
bool ExtensionSolver::search(Visit& visit, size_t limit, size_t& reported) {
  ++nodes_;
  if (unassigned_ == 0) {
    ++reported;
    if (!visit(snapshot())) return false;
    return reported < limit;
  }
  int best = -1;
  std::vector<int> best_cands, cands;
  for (int e = 0; e < x_.edge_count(); ++e) {
    if (eimg_[e] >= 0) continue;
    candidates(e, cands);
    if (best < 0 || cands.size() < best_cands.size()) {
      best = e;
      best_cands.swap(cands);
      if (best_cands.size() <= 1) break;
    }
  }
  if (best_cands.empty()) {
    ++dead_ends_[best];
    return true;
  }
  std::vector<int> trail;
  for (int value : best_cands) {
    trail.clear();
    if (assign(best, value, trail)) {
      bool go_on = search(visit, limit, reported);
      unassign(best, trail);
      if (!go_on) return false;
    } else {
      unassign(best, trail);
    }
  }
  return true;
}

}  // namespace fa
