#include "fa/complex.hpp"

#include <algorithm>

#include "fa/errors.hpp"

namespace fa {

namespace {

const std::vector<int> kNone;

void sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

const std::vector<int>& TruncatedEpsilonComplex::lookup(
    const std::unordered_map<std::uint64_t, std::vector<int>>& m, int a, int b) {
  auto it = m.find(pair_key(a, b));
  return it == m.end() ? kNone : it->second;
}

int TruncatedEpsilonComplex::add_vertex(std::string vertex_name, std::string identity_name,
                                        bool identity_marked) {
  int v = vertex_count();
  if (identity_name.empty()) identity_name = "id(" + vertex_name + ")";
  vertex_names_.push_back(std::move(vertex_name));
  int e = edge_count();
  edge_names_.push_back(std::move(identity_name));
  edges_.push_back({v, v});
  identity_.push_back(e);
  identity_of_.push_back(v);
  marked_.push_back(identity_marked);
  between_[pair_key(v, v)].push_back(e);
  insert_triangle(e, e, e);
  return v;
}

int TruncatedEpsilonComplex::add_edge(std::string edge_name, int source, int target, bool is_marked) {
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
    throw ContractError("add_edge: endpoint out of range for '" + edge_name + "'");
  int e = edge_count();
  edge_names_.push_back(std::move(edge_name));
  edges_.push_back({source, target});
  identity_of_.push_back(-1);
  marked_.push_back(is_marked);
  sorted_insert(between_[pair_key(source, target)], e);
  insert_triangle(e, e, identity_[source]);
  insert_triangle(identity_[target], e, e);
  return e;
}

void TruncatedEpsilonComplex::add_triangle(int d0, int d1, int d2) {
  const int n = edge_count();
  if (d0 < 0 || d1 < 0 || d2 < 0 || d0 >= n || d1 >= n || d2 >= n)
    throw ContractError("add_triangle: edge out of range");
  if (source(d0) != target(d2) || source(d1) != source(d2) || target(d1) != target(d0))
    throw ContractError("add_triangle: incompatible endpoints (" + edge_name(d0) + ", " + edge_name(d1) +
                        ", " + edge_name(d2) + ")");
  insert_triangle(d0, d1, d2);
}

void TruncatedEpsilonComplex::insert_triangle(int d0, int d1, int d2) {
  if (!triangle_set_.insert(key(d0, d1, d2)).second) return;
  triangles_.push_back({d0, d1, d2});
  sorted_insert(by_d0_d2_[pair_key(d0, d2)], d1);
  sorted_insert(by_d1_d2_[pair_key(d1, d2)], d0);
  sorted_insert(by_d0_d1_[pair_key(d0, d1)], d2);
}

bool TruncatedEpsilonComplex::is_degenerate(const Triple& t) const {
  const auto& [d0, d1, d2] = t;
  return (d0 == d1 && d2 == identity(source(d0))) || (d1 == d2 && d0 == identity(target(d1)));
}

const std::vector<int>& TruncatedEpsilonComplex::edges_between(int u, int v) const {
  return lookup(between_, u, v);
}

int TruncatedEpsilonComplex::find_vertex(const std::string& vertex_name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), vertex_name);
  return it == vertex_names_.end() ? -1 : static_cast<int>(it - vertex_names_.begin());
}

int TruncatedEpsilonComplex::find_edge(const std::string& edge_name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), edge_name);
  return it == edge_names_.end() ? -1 : static_cast<int>(it - edge_names_.begin());
}

std::vector<int> TruncatedEpsilonComplex::marked_edges() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (marked(e)) out.push_back(e);
  return out;
}

bool is_morphism(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y, const ComplexMorphism& f) {
  if (static_cast<int>(f.vertex_map.size()) != x.vertex_count() ||
      static_cast<int>(f.edge_map.size()) != x.edge_count())
    return false;
  for (int v : f.vertex_map)
    if (v < 0 || v >= y.vertex_count()) return false;
  for (int e : f.edge_map)
    if (e < 0 || e >= y.edge_count()) return false;
  for (int v = 0; v < x.vertex_count(); ++v)
    if (f.edge_map[x.identity(v)] != y.identity(f.vertex_map[v])) return false;
  for (int e = 0; e < x.edge_count(); ++e) {
    int g = f.edge_map[e];
    if (y.source(g) != f.vertex_map[x.source(e)] || y.target(g) != f.vertex_map[x.target(e)]) return false;
    if (x.marked(e) && !y.marked(g)) return false;
  }
  for (const auto& [d0, d1, d2] : x.triangles())
    if (!y.has_triangle(f.edge_map[d0], f.edge_map[d1], f.edge_map[d2])) return false;
  return true;
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
  ComplexMorphism h;
  h.vertex_map.reserve(f.vertex_map.size());
  h.edge_map.reserve(f.edge_map.size());
  for (int v : f.vertex_map) h.vertex_map.push_back(g.vertex_map[v]);
  for (int e : f.edge_map) h.edge_map.push_back(g.edge_map[e]);
  return h;
}

TruncatedEpsilonComplex product(const TruncatedEpsilonComplex& x, const TruncatedEpsilonComplex& y,
                                std::vector<std::pair<int, int>>* edge_coords) {
  TruncatedEpsilonComplex p;
  p.name = x.name + "x" + y.name;
  const int ny = y.vertex_count();
  const int my = y.edge_count();
  // Identity edges are created with their vertices, so collect the final
  // edge index of each pair first.
  std::vector<int> edge_index(static_cast<size_t>(x.edge_count()) * my, -1);
  for (int a = 0; a < x.vertex_count(); ++a)
    for (int b = 0; b < ny; ++b) {
      int v = p.add_vertex("(" + x.vertex_name(a) + "," + y.vertex_name(b) + ")",
                           "(" + x.edge_name(x.identity(a)) + "," + y.edge_name(y.identity(b)) + ")",
                           x.marked(x.identity(a)) && y.marked(y.identity(b)));
      edge_index[static_cast<size_t>(x.identity(a)) * my + y.identity(b)] = p.identity(v);
    }
  for (int e = 0; e < x.edge_count(); ++e)
    for (int f = 0; f < my; ++f) {
      auto& slot = edge_index[static_cast<size_t>(e) * my + f];
      if (slot >= 0) continue;
      slot = p.add_edge("(" + x.edge_name(e) + "," + y.edge_name(f) + ")", x.source(e) * ny + y.source(f),
                        x.target(e) * ny + y.target(f), x.marked(e) && y.marked(f));
    }
  if (edge_coords) {
    edge_coords->assign(p.edge_count(), {-1, -1});
    for (int e = 0; e < x.edge_count(); ++e)
      for (int f = 0; f < my; ++f) (*edge_coords)[edge_index[static_cast<size_t>(e) * my + f]] = {e, f};
  }
  auto idx = [&](int e, int f) { return edge_index[static_cast<size_t>(e) * my + f]; };
  for (const auto& s : x.triangles())
    for (const auto& t : y.triangles()) p.add_triangle(idx(s[0], t[0]), idx(s[1], t[1]), idx(s[2], t[2]));
  return p;
}

TruncatedEpsilonComplex subcomplex(const TruncatedEpsilonComplex& x, const std::vector<bool>& keep_vertex,
                                   const std::vector<bool>& keep_edge, const std::vector<bool>& keep_triangle,
                                   ComplexMorphism& inclusion) {
  TruncatedEpsilonComplex s;
  s.name = x.name;
  inclusion.vertex_map.clear();
  inclusion.edge_map.clear();
  std::vector<int> vpos(x.vertex_count(), -1), epos(x.edge_count(), -1);
  for (int v = 0; v < x.vertex_count(); ++v) {
    if (!keep_vertex[v]) continue;
    vpos[v] = s.add_vertex(x.vertex_name(v), x.edge_name(x.identity(v)), x.marked(x.identity(v)));
    inclusion.vertex_map.push_back(v);
    epos[x.identity(v)] = s.identity(vpos[v]);
  }
  inclusion.edge_map.assign(s.edge_count(), -1);
  for (int v = 0; v < x.vertex_count(); ++v)
    if (vpos[v] >= 0) inclusion.edge_map[s.identity(vpos[v])] = x.identity(v);
  for (int e = 0; e < x.edge_count(); ++e) {
    if (!keep_edge[e] || epos[e] >= 0) continue;
    if (vpos[x.source(e)] < 0 || vpos[x.target(e)] < 0)
      throw ContractError("subcomplex: edge '" + x.edge_name(e) + "' kept without its endpoints");
    epos[e] = s.add_edge(x.edge_name(e), vpos[x.source(e)], vpos[x.target(e)], x.marked(e));
    inclusion.edge_map.push_back(e);
  }
  const auto& tris = x.triangles();
  for (size_t i = 0; i < tris.size(); ++i) {
    if (!keep_triangle[i]) continue;
    const auto& [d0, d1, d2] = tris[i];
    if (epos[d0] < 0 || epos[d1] < 0 || epos[d2] < 0)
      throw ContractError("subcomplex: triangle kept without its edges");
    s.add_triangle(epos[d0], epos[d1], epos[d2]);
  }
  return s;
}

bool same_structure(const TruncatedEpsilonComplex& a, const TruncatedEpsilonComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.triangle_count() != b.triangle_count())
    return false;
  for (int e = 0; e < a.edge_count(); ++e)
    if (a.source(e) != b.source(e) || a.target(e) != b.target(e) || a.marked(e) != b.marked(e) ||
        a.is_identity(e) != b.is_identity(e))
      return false;
  for (const auto& [d0, d1, d2] : a.triangles())
    if (!b.has_triangle(d0, d1, d2)) return false;
  return true;
}

}  // namespace fa
