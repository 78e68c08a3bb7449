#include "fa/lifting.hpp"

#include <algorithm>

#include "fa/errors.hpp"
#include "fa/parallel.hpp"

namespace fa {

// ---------------------------------------------------------------------------
// ExtensionSolver

ExtensionSolver::ExtensionSolver(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y)
    : x_(x), y_(y) {
  vimg_.assign(x.vertex_count(), -1);
  eimg_.assign(x.edge_count(), -1);
  tri_of_edge_.resize(x.edge_count());
  const auto& tris = x.triangles();
  for (size_t t = 0; t < tris.size(); ++t)
    for (int pos = 0; pos < 3; ++pos) {
      auto& list = tri_of_edge_[tris[t][pos]];
      std::pair<int, int> entry{static_cast<int>(t), pos};
      if (std::find(list.begin(), list.end(), entry) == list.end()) list.push_back(entry);
    }
  allowed_.resize(x.edge_count());
  for (int e = 0; e < y.edge_count(); ++e) {
    all_edges_y_.push_back(e);
    if (y.is_identity(e)) identity_edges_y_.push_back(e);
    if (y.marked(e)) marked_y_.push_back(e);
  }
  const size_t ne = static_cast<size_t>(y.edge_count());
  if (ne <= 2048) {
    pair_.assign(3 * ne * ne, 0);
    for (const auto& tri : y.triangles()) {
      pair_[0 * ne * ne + tri[0] * ne + tri[1]] = 1;
      pair_[1 * ne * ne + tri[0] * ne + tri[2]] = 1;
      pair_[2 * ne * ne + tri[1] * ne + tri[2]] = 1;
    }
  }
  dead_ends_.assign(x.edge_count(), 0);
  used_.assign(y.edge_count(), 0);
  unassigned_ = x.edge_count();
}

void ExtensionSolver::restrict_edge(int e, std::vector<int> allowed) {
  std::sort(allowed.begin(), allowed.end());
  allowed_[e] = std::move(allowed);
}

void ExtensionSolver::candidates(int e, std::vector<int>& out) const {
  out.clear();
  const int src = x_.source(e), tgt = x_.target(e);
  const int vs = vimg_[src], vt = vimg_[tgt];
  const bool is_id = x_.is_identity(e);
  const bool need_mark = x_.marked(e);
  const auto& tris = x_.triangles();

  // Smallest generating list.
  const std::vector<int>* gen = is_id ? &identity_edges_y_ : (need_mark ? &marked_y_ : &all_edges_y_);
  if (vs >= 0 && vt >= 0) {
    const auto& between = y_.edges_between(vs, vt);
    if (between.size() < gen->size()) gen = &between;
  }
  if (allowed_[e] && allowed_[e]->size() < gen->size()) gen = &*allowed_[e];
  for (const auto& [t, pos] : tri_of_edge_[e]) {
    const auto& tri = tris[t];
    int a0 = eimg_[tri[0]], a1 = eimg_[tri[1]], a2 = eimg_[tri[2]];
    const std::vector<int>* list = nullptr;
    if (pos == 1 && a0 >= 0 && a2 >= 0 && tri[0] != e && tri[2] != e) list = &y_.d1_for(a0, a2);
    if (pos == 0 && a1 >= 0 && a2 >= 0 && tri[1] != e && tri[2] != e) list = &y_.d0_for(a1, a2);
    if (pos == 2 && a0 >= 0 && a1 >= 0 && tri[0] != e && tri[1] != e) list = &y_.d2_for(a0, a1);
    if (list && list->size() < gen->size()) gen = list;
  }

  for (int c : *gen) {
    if (is_id && !y_.is_identity(c)) continue;
    if (injective_ && used_[c]) continue;
    if (need_mark && !y_.marked(c)) continue;
    if (vs >= 0 && y_.source(c) != vs) continue;
    if (vt >= 0 && y_.target(c) != vt) continue;
    if (src == tgt && y_.source(c) != y_.target(c)) continue;
    if (allowed_[e] && !std::binary_search(allowed_[e]->begin(), allowed_[e]->end(), c)) continue;
    bool ok = true;
    for (const auto& [t, pos] : tri_of_edge_[e]) {
      const auto& tri = tris[t];
      int img[3];
      int missing = -1, unknown = 0;
      for (int k = 0; k < 3; ++k) {
        img[k] = tri[k] == e ? c : eimg_[tri[k]];
        if (img[k] < 0) {
          missing = k;
          ++unknown;
        }
      }
      if (unknown == 0) {
        ok = y_.has_triangle(img[0], img[1], img[2]);
      } else if (unknown == 1 && !pair_.empty()) {
        const size_t ne = static_cast<size_t>(y_.edge_count());
        const int i = missing == 0 ? 1 : 0, j = missing == 2 ? 1 : 2;
        const size_t kind = static_cast<size_t>(i + j - 1);
        ok = pair_[kind * ne * ne + img[i] * ne + img[j]] != 0;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(c);
  }
}

bool ExtensionSolver::assign(int e, int value, std::vector<int>& trail_vertices) {
  eimg_[e] = value;
  used_[value] = 1;
  --unassigned_;
  auto bind = [&](int v, int w) {
    if (vimg_[v] < 0) {
      vimg_[v] = w;
      trail_vertices.push_back(v);
      return true;
    }
    return vimg_[v] == w;
  };
  return bind(x_.source(e), y_.source(value)) && bind(x_.target(e), y_.target(value));
}

void ExtensionSolver::unassign(int e, const std::vector<int>& trail_vertices) {
  used_[eimg_[e]] = 0;
  eimg_[e] = -1;
  ++unassigned_;
  for (int v : trail_vertices) vimg_[v] = -1;
}

bool ExtensionSolver::fix_edge(int e, int value) {
  if (!consistent_) return false;
  if (eimg_[e] >= 0) {
    consistent_ = eimg_[e] == value;
    return consistent_;
  }
  std::vector<int> cands;
  candidates(e, cands);
  if (std::find(cands.begin(), cands.end(), value) == cands.end()) {
    consistent_ = false;
    return false;
  }
  std::vector<int> trail;
  consistent_ = assign(e, value, trail);
  return consistent_;
}

bool ExtensionSolver::fix_vertex(int v, int value) {
  if (!consistent_) return false;
  return fix_edge(x_.identity(v), y_.identity(value));
}

bool ExtensionSolver::fix_along(const ComplexMorphism& inclusion, const ComplexMorphism& partial) {
  for (size_t v = 0; v < inclusion.vertex_map.size(); ++v)
    if (!fix_vertex(inclusion.vertex_map[v], partial.vertex_map[v])) return false;
  for (size_t e = 0; e < inclusion.edge_map.size(); ++e)
    if (!fix_edge(inclusion.edge_map[e], partial.edge_map[e])) return false;
  return true;
}

ComplexMorphism ExtensionSolver::snapshot() const { return ComplexMorphism{vimg_, eimg_}; }

std::optional<ComplexMorphism> ExtensionSolver::first() {
  std::optional<ComplexMorphism> out;
  enumerate([&](ComplexMorphism m) {
    out = std::move(m);
    return false;
  });
  return out;
}

size_t ExtensionSolver::count(size_t limit) {
  return enumerate([](const ComplexMorphism&) { return true; }, limit);
}

std::vector<ComplexMorphism> ExtensionSolver::all() {
  std::vector<ComplexMorphism> out;
  enumerate([&](ComplexMorphism m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

int ExtensionSolver::hardest_edge() const {
  auto it = std::max_element(dead_ends_.begin(), dead_ends_.end());
  if (it == dead_ends_.end() || *it == 0) return -1;
  return static_cast<int>(it - dead_ends_.begin());
}

std::vector<ComplexMorphism> hom_maps(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y) {
  auto maps = ExtensionSolver(x, y).all();
  std::sort(maps.begin(), maps.end());
  return maps;
}

// ---------------------------------------------------------------------------
// Lifting checks

std::string_view to_string(LiftMode mode) { return mode == LiftMode::Exists ? "exists" : "unique"; }

std::string_view to_string(LiftVerdict verdict) {
  switch (verdict) {
    case LiftVerdict::NoExtension: return "no-extension";
    case LiftVerdict::UniqueExtension: return "unique-extension";
    case LiftVerdict::MultipleExtensions: return "multiple-extensions";
  }
  return "?";
}

namespace {

// Plain generate-and-test: free vertices first, then edges in index order,
// each checked against the triangles it completes.
class NaiveExtender {
 public:
  NaiveExtender(const ShapeInclusion& f, const TruncatedEpsilonComplex& y) : f_(f), b_(f.codomain), y_(y) {
    std::vector<char> fixed_v(b_.vertex_count(), 0), fixed_e(b_.edge_count(), 0);
    for (int v : f.inclusion.vertex_map) fixed_v[v] = 1;
    for (int e : f.inclusion.edge_map) fixed_e[e] = 1;
    for (int v = 0; v < b_.vertex_count(); ++v)
      if (!fixed_v[v]) free_vertices_.push_back(v);
    for (int e = 0; e < b_.edge_count(); ++e)
      if (!fixed_e[e]) free_edges_.push_back(e);
    tris_of_.resize(b_.edge_count());
    const auto& tris = b_.triangles();
    for (size_t t = 0; t < tris.size(); ++t) {
      for (int k = 0; k < 3; ++k) tris_of_[tris[t][k]].push_back(static_cast<int>(t));
      if (fixed_e[tris[t][0]] && fixed_e[tris[t][1]] && fixed_e[tris[t][2]]) closed_.push_back(static_cast<int>(t));
    }
  }

  void run(const ComplexMorphism& boundary, size_t limit) {
    vimg_.assign(b_.vertex_count(), -1);
    eimg_.assign(b_.edge_count(), -1);
    for (size_t v = 0; v < f_.inclusion.vertex_map.size(); ++v)
      vimg_[f_.inclusion.vertex_map[v]] = boundary.vertex_map[v];
    for (size_t e = 0; e < f_.inclusion.edge_map.size(); ++e) eimg_[f_.inclusion.edge_map[e]] = boundary.edge_map[e];
    found.clear();
    limit_ = limit;
    for (int t : closed_) {
      const auto& tri = b_.triangles()[t];
      if (!y_.has_triangle(eimg_[tri[0]], eimg_[tri[1]], eimg_[tri[2]])) return;
    }
    for (int e = 0; e < b_.edge_count(); ++e)
      if (eimg_[e] >= 0 && b_.marked(e) && !y_.marked(eimg_[e])) return;
    vertices(0);
  }

  std::vector<ComplexMorphism> found;

 private:
  void vertices(size_t i) {
    if (found.size() >= limit_) return;
    if (i == free_vertices_.size()) {
      edges(0);
      return;
    }
    for (int w = 0; w < y_.vertex_count(); ++w) {
      vimg_[free_vertices_[i]] = w;
      vertices(i + 1);
    }
    vimg_[free_vertices_[i]] = -1;
  }

  bool triangles_ok(int e) const {
    for (int t : tris_of_[e]) {
      const auto& tri = b_.triangles()[t];
      int a = eimg_[tri[0]], c = eimg_[tri[1]], d = eimg_[tri[2]];
      if (a >= 0 && c >= 0 && d >= 0 && !y_.has_triangle(a, c, d)) return false;
    }
    return true;
  }

  void edges(size_t i) {
    if (found.size() >= limit_) return;
    if (i == free_edges_.size()) {
      found.push_back(ComplexMorphism{vimg_, eimg_});
      return;
    }
    int e = free_edges_[i];
    for (int c : y_.edges_between(vimg_[b_.source(e)], vimg_[b_.target(e)])) {
      if (b_.is_identity(e) && c != y_.identity(vimg_[b_.source(e)])) continue;
      if (b_.marked(e) && !y_.marked(c)) continue;
      eimg_[e] = c;
      if (triangles_ok(e)) edges(i + 1);
    }
    eimg_[e] = -1;
  }

  const ShapeInclusion& f_;
  const TruncatedEpsilonComplex& b_;
  const TruncatedEpsilonComplex& y_;
  std::vector<int> vimg_, eimg_;
  std::vector<int> free_vertices_, free_edges_;
  std::vector<std::vector<int>> tris_of_;
  std::vector<int> closed_;  // triangles with every edge on the boundary
  size_t limit_ = 2;
};

LiftVerdict verdict_of(size_t n) {
  if (n == 0) return LiftVerdict::NoExtension;
  if (n == 1) return LiftVerdict::UniqueExtension;
  return LiftVerdict::MultipleExtensions;
}

bool passes(LiftMode mode, LiftVerdict v) {
  return mode == LiftMode::Exists ? v != LiftVerdict::NoExtension : v == LiftVerdict::UniqueExtension;
}

void tally(LiftingResult& r, const LiftingCertificate& c) {
  ++r.problems;
  switch (c.verdict) {
    case LiftVerdict::NoExtension: ++r.none; break;
    case LiftVerdict::UniqueExtension: ++r.unique; break;
    case LiftVerdict::MultipleExtensions: ++r.multiple; break;
  }
  if (!passes(r.mode, c.verdict) && !r.failure) {
    r.pass = false;
    r.failure = c;
  }
}

LiftingCertificate certificate(NaiveExtender& ext, const ComplexMorphism& boundary) {
  ext.run(boundary, 2);
  LiftingCertificate c;
  c.boundary = boundary;
  c.verdict = verdict_of(ext.found.size());
  c.witnesses = ext.found;
  return c;
}

// Boundary maps are streamed in solver order and solved in fixed-size batches;
// only counts and the first failure are kept.
LiftingResult lifting_impl(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, LiftMode mode, bool parallel) {
  constexpr size_t kBatch = 4096;
  LiftingResult result;
  result.shape = f.name;
  result.mode = mode;
  std::vector<ComplexMorphism> batch;
  std::vector<LiftVerdict> verdicts;
  batch.reserve(kBatch);
  auto flush = [&] {
    const int n = static_cast<int>(batch.size());
    verdicts.assign(n, LiftVerdict::NoExtension);
    if (parallel) {
      FA_PARALLEL_REGION {
        NaiveExtender ext(f, y);
        FA_PARALLEL_LOOP
        for (int i = 0; i < n; ++i) {
          ext.run(batch[i], 2);
          verdicts[i] = verdict_of(ext.found.size());
        }
      }
    } else {
      NaiveExtender ext(f, y);
      for (int i = 0; i < n; ++i) {
        ext.run(batch[i], 2);
        verdicts[i] = verdict_of(ext.found.size());
      }
    }
    for (int i = 0; i < n; ++i) {
      bool had_failure = result.failure.has_value();
      LiftingCertificate c;
      c.verdict = verdicts[i];
      tally(result, c);
      if (!had_failure && result.failure) {
        NaiveExtender ext(f, y);
        result.failure = certificate(ext, batch[i]);
      }
    }
    batch.clear();
  };
  ExtensionSolver solver(f.domain, y);
  solver.enumerate([&](ComplexMorphism m) {
    batch.push_back(std::move(m));
    if (batch.size() == kBatch) flush();
    return true;
  });
  flush();
  return result;
}

}  // namespace

LiftingCertificate solve_lifting_problem(const ShapeInclusion& f, const TruncatedEpsilonComplex& y,
                                         const ComplexMorphism& boundary) {
  NaiveExtender ext(f, y);
  return certificate(ext, boundary);
}

LiftingResult check_lifting(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, LiftMode mode) {
  return lifting_impl(f, y, mode, true);
}

LiftingResult check_lifting_serial(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, LiftMode mode) {
  return lifting_impl(f, y, mode, false);
}

LiftingResult check_relative_lifting(const ShapeInclusion& f, const TruncatedEpsilonComplex& x,
                                     const TruncatedEpsilonComplex& y, const ComplexMorphism& p, LiftMode mode) {
  if (!is_morphism(x, y, p)) throw ContractError("check_relative_lifting: p is not a morphism");
  LiftingResult result;
  result.shape = f.name;
  result.mode = mode;
  std::vector<std::vector<int>> fiber(y.edge_count());
  for (int e = 0; e < x.edge_count(); ++e) fiber[p.edge_map[e]].push_back(e);

  auto tops = hom_maps(f.domain, x);
  const int n = static_cast<int>(tops.size());
  std::vector<std::vector<LiftingCertificate>> certs(n);
  FA_PARALLEL_FOR
  for (int i = 0; i < n; ++i) {
    const auto& a = tops[i];
    auto pa = compose(p, a);
    ExtensionSolver bases(f.codomain, y);
    bases.fix_along(f.inclusion, pa);
    auto gs = bases.all();
    std::sort(gs.begin(), gs.end());
    for (const auto& g : gs) {
      ExtensionSolver lifts(f.codomain, x);
      for (int e = 0; e < f.codomain.edge_count(); ++e) lifts.restrict_edge(e, fiber[g.edge_map[e]]);
      LiftingCertificate c;
      c.boundary = a;
      c.base = g;
      if (lifts.fix_along(f.inclusion, a))
        lifts.enumerate(
            [&](ComplexMorphism l) {
              c.witnesses.push_back(std::move(l));
              return true;
            },
            2);
      c.verdict = verdict_of(c.witnesses.size());
      certs[i].push_back(std::move(c));
    }
  }
  for (const auto& list : certs)
    for (const auto& c : list) tally(result, c);
  return result;
}

FillResult generic_filler(const ShapeInclusion& f, const TruncatedEpsilonComplex& y, const ComplexMorphism& boundary) {
  FillResult r;
  ExtensionSolver solver(f.codomain, y);
  if (!solver.fix_along(f.inclusion, boundary)) {
    r.trace.push_back("boundary assignment is inconsistent with the target");
    return r;
  }
  r.extension = solver.first();
  r.nodes = solver.nodes();
  if (!r.extension) {
    r.trace.push_back("search exhausted after " + std::to_string(r.nodes) + " nodes");
    int hard = solver.hardest_edge();
    if (hard >= 0) r.trace.push_back("most dead ends at edge '" + f.codomain.edge_name(hard) + "'");
  }
  return r;
}

size_t count_nondegenerate_simplices(const TruncatedEpsilonComplex& x, int d) {
  auto shape = simplex_shape(d);
  size_t count = 0;
  ExtensionSolver solver(shape.codomain, x);
  std::vector<int> spine;
  for (int i = 0; i < d; ++i) spine.push_back(shape.codomain.find_edge(std::to_string(i) + std::to_string(i + 1)));
  solver.enumerate([&](const ComplexMorphism& m) {
    bool nondegenerate = std::none_of(spine.begin(), spine.end(), [&](int e) { return x.is_identity(m.edge_map[e]); });
    if (nondegenerate) ++count;
    return true;
  });
  return count;
}

}  // namespace fa
