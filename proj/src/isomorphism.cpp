#include "fa/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "fa/lifting.hpp"

namespace fa {

namespace {

// Invariants of an element: unit/counit flags, row and column sizes of μ,
// number of idempotent-like entries.
std::vector<int> element_signature(const RelFA& f, int x) {
  const int n = f.size();
  int row = 0, col = 0, out = 0, self = 0;
  for (int y = 0; y < n; ++y) {
    row += static_cast<int>(f.mu.image(x, y).size());
    col += static_cast<int>(f.mu.image(y, x).size());
    for (int z = 0; z < n; ++z) out += f.mu.contains(y, z, x);
  }
  self = static_cast<int>(f.mu.image(x, x).size());
  return {f.eta[x] ? 1 : 0, f.epsilon[x] ? 1 : 0, row, col, out, self, f.mu.contains(x, x, x) ? 1 : 0};
}

class RelSearch {
 public:
  RelSearch(const RelFA& a, const RelFA& b) : a_(a), b_(b), n_(a.size()) {
    for (int x = 0; x < n_; ++x) {
      sig_a_.push_back(element_signature(a, x));
      sig_b_.push_back(element_signature(b, x));
    }
    map_.assign(n_, -1);
    used_.assign(n_, false);
    // Assign elements with rare signatures first.
    std::map<std::vector<int>, int> freq;
    for (const auto& s : sig_a_) ++freq[s];
    for (int x = 0; x < n_; ++x) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int p, int q) { return freq[sig_a_[p]] < freq[sig_a_[q]]; });
  }

  std::optional<std::vector<int>> run() {
    if (a_.size() != b_.size() || a_.mu.count() != b_.mu.count()) return std::nullopt;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(int x) const {
    // Every μ triple among assigned elements involving x.
    for (int y = 0; y < n_; ++y) {
      if (map_[y] < 0) continue;
      for (int z = 0; z < n_; ++z) {
        if (map_[z] < 0) continue;
        if (a_.mu.contains(x, y, z) != b_.mu.contains(map_[x], map_[y], map_[z])) return false;
        if (a_.mu.contains(y, x, z) != b_.mu.contains(map_[y], map_[x], map_[z])) return false;
        if (a_.mu.contains(y, z, x) != b_.mu.contains(map_[y], map_[z], map_[x])) return false;
      }
    }
    return true;
  }

  bool search(int depth) {
    if (depth == n_) return true;
    int x = order_[depth];
    for (int y = 0; y < n_; ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      map_[x] = y;
      used_[y] = true;
      if (consistent(x) && search(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = false;
    }
    return false;
  }

  const RelFA& a_;
  const RelFA& b_;
  int n_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<int> map_, order_;
  std::vector<bool> used_;
};

// Edge invariants: identity, marking, loop, triangle incidences by position
// (degenerate triangles excluded), endpoint degrees.
std::vector<int> edge_signature(const TruncatedEpsilonComplex& x, int e, const std::vector<std::array<int, 3>>& inc,
                                const std::vector<int>& out_deg, const std::vector<int>& in_deg) {
  return {x.is_identity(e) ? 1 : 0,
          x.marked(e) ? 1 : 0,
          x.source(e) == x.target(e) ? 1 : 0,
          inc[e][0],
          inc[e][1],
          inc[e][2],
          out_deg[x.source(e)],
          in_deg[x.source(e)],
          out_deg[x.target(e)],
          in_deg[x.target(e)]};
}

std::vector<std::vector<int>> edge_signatures(const TruncatedEpsilonComplex& x) {
  std::vector<std::array<int, 3>> inc(x.edge_count(), {0, 0, 0});
  for (const auto& t : x.triangles()) {
    if (x.is_degenerate(t)) continue;
    for (int k = 0; k < 3; ++k) ++inc[t[k]][k];
  }
  std::vector<int> out_deg(x.vertex_count(), 0), in_deg(x.vertex_count(), 0);
  for (int e = 0; e < x.edge_count(); ++e) {
    ++out_deg[x.source(e)];
    ++in_deg[x.target(e)];
  }
  std::vector<std::vector<int>> sig;
  for (int e = 0; e < x.edge_count(); ++e) sig.push_back(edge_signature(x, e, inc, out_deg, in_deg));
  return sig;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const RelFA& a, const RelFA& b) {
  return RelSearch(a, b).run();
}

bool is_isomorphism(const RelFA& a, const RelFA& b, const std::vector<int>& map) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : map) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (int x = 0; x < n; ++x) {
    if (a.eta[x] != b.eta[map[x]] || a.epsilon[x] != b.epsilon[map[x]]) return false;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.mu.contains(x, y, z) != b.mu.contains(map[x], map[y], map[z])) return false;
  }
  return true;
}

std::optional<ComplexMorphism> find_isomorphism(const TruncatedEpsilonComplex& x,
                                                const TruncatedEpsilonComplex& y) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count() ||
      x.triangle_count() != y.triangle_count() || x.marked_edges().size() != y.marked_edges().size())
    return std::nullopt;
  auto sx = edge_signatures(x), sy = edge_signatures(y);
  std::map<std::vector<int>, std::vector<int>> by_sig;
  for (int e = 0; e < y.edge_count(); ++e) by_sig[sy[e]].push_back(e);
  ExtensionSolver solver(x, y);
  solver.set_injective(true);
  for (int e = 0; e < x.edge_count(); ++e) {
    auto it = by_sig.find(sx[e]);
    if (it == by_sig.end()) return std::nullopt;
    solver.restrict_edge(e, it->second);
  }
  // Edge-injective with equal counts is bijective; triangles and marks are
  // then reflected since their counts agree.
  return solver.first();
}

bool is_isomorphism(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y, const ComplexMorphism& f) {
  if (!is_morphism(x, y, f)) return false;
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count() ||
      x.triangle_count() != y.triangle_count())
    return false;
  std::vector<bool> seen(y.edge_count(), false);
  for (int e : f.edge_map) {
    if (seen[e]) return false;
    seen[e] = true;
  }
  for (int e = 0; e < x.edge_count(); ++e)
    if (x.marked(e) != y.marked(f.edge_map[e])) return false;
  return true;
}

}  // namespace fa
