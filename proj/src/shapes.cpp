#include "fa/shapes.hpp"

#include <algorithm>
#include <sstream>

#include "fa/errors.hpp"

namespace fa {

namespace {

constexpr int kMaxShapeDim = 6;

void check_dim(int n, const std::string& what) {
  if (n < 0 || n > kMaxShapeDim) throw InputError(what + ": dimension " + std::to_string(n) + " out of range");
}

std::string edge_label(int i, int j) { return std::to_string(i) + std::to_string(j); }

std::vector<int> all_but(int n, int skip) {
  std::vector<int> out;
  for (int v = 0; v <= n; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

ShapeInclusion empty_into(TruncatedEpsilonComplex x, std::string name) {
  ShapeInclusion s;
  s.name = std::move(name);
  s.domain.name = "empty";
  s.codomain = std::move(x);
  return s;
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad integer '" + s + "' in shape '" + context + "'");
  }
}

std::vector<int> int_list(const std::string& s, char sep, const std::string& context) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep))
    if (!tok.empty()) out.push_back(parse_int(tok, context));
  return out;
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TruncatedEpsilonComplex simplex(int n) {
  check_dim(n, "simplex");
  TruncatedEpsilonComplex x;
  x.name = "Delta[" + std::to_string(n) + "]";
  for (int i = 0; i <= n; ++i) x.add_vertex(std::to_string(i), edge_label(i, i));
  std::vector<std::vector<int>> e(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) e[i][i] = x.identity(i);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e[i][j] = x.add_edge(edge_label(i, j), i, j);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) x.add_triangle(e[j][k], e[i][k], e[i][j]);
  return x;
}

TruncatedEpsilonComplex sigma(int n) {
  auto x = simplex(n);
  x.name = "Sigma[" + std::to_string(n) + "]";
  x.set_marked(x.find_edge(edge_label(0, n)), true);
  return x;
}

ShapeInclusion face_union(const TruncatedEpsilonComplex& x, const std::vector<std::vector<int>>& parts,
                          std::string name) {
  std::vector<bool> in_face(x.vertex_count(), false);
  std::vector<std::vector<bool>> member(parts.size(), std::vector<bool>(x.vertex_count(), false));
  for (size_t f = 0; f < parts.size(); ++f)
    for (int v : parts[f]) {
      if (v < 0 || v >= x.vertex_count()) throw InputError("face vertex " + std::to_string(v) + " out of range");
      member[f][v] = true;
      in_face[v] = true;
    }
  auto within = [&](std::initializer_list<int> vs) {
    for (const auto& m : member)
      if (std::all_of(vs.begin(), vs.end(), [&](int v) { return m[v]; })) return true;
    return false;
  };
  std::vector<bool> keep_edge(x.edge_count());
  for (int e = 0; e < x.edge_count(); ++e) keep_edge[e] = within({x.source(e), x.target(e)});
  const auto& tris = x.triangles();
  std::vector<bool> keep_tri(tris.size());
  for (size_t i = 0; i < tris.size(); ++i)
    keep_tri[i] = within({x.source(tris[i][2]), x.target(tris[i][2]), x.target(tris[i][0])});
  ShapeInclusion s;
  s.name = std::move(name);
  s.codomain = x;
  s.domain = subcomplex(x, in_face, keep_edge, keep_tri, s.inclusion);
  s.domain.name = s.name;
  return s;
}

ShapeInclusion simplex_shape(int n) { return empty_into(simplex(n), "Delta[" + std::to_string(n) + "]"); }

ShapeInclusion sigma_shape(int n) {
  check_dim(n, "sigma");
  if (n == 0) {
    TruncatedEpsilonComplex x;
    x.name = "Sigma[0]";
    x.add_vertex("0", "00", true);
    return empty_into(std::move(x), "Sigma[0]");
  }
  return empty_into(sigma(n), "Sigma[" + std::to_string(n) + "]");
}

ShapeInclusion boundary(int n) {
  check_dim(n, "boundary");
  if (n == 0) return empty_into(simplex(0), "boundary[0]");
  std::vector<std::vector<int>> parts;
  for (int i = 0; i <= n; ++i) parts.push_back(all_but(n, i));
  return face_union(simplex(n), parts, "boundary[" + std::to_string(n) + "]");
}

ShapeInclusion horn(int n, int i) {
  check_dim(n, "horn");
  if (n < 1 || i < 0 || i > n) throw InputError("horn: need n >= 1 and 0 <= i <= n");
  std::vector<std::vector<int>> parts;
  for (int j = 0; j <= n; ++j)
    if (j != i) parts.push_back(all_but(n, j));
  return face_union(simplex(n), parts, "horn[" + std::to_string(n) + "," + std::to_string(i) + "]");
}

ShapeInclusion epsilon_horn(int n, int i) {
  check_dim(n, "ehorn");
  if (n < 1 || (i != 0 && i != n)) throw InputError("ehorn: need n >= 1 and i in {0, n}");
  std::vector<std::vector<int>> parts;
  for (int j = 0; j <= n; ++j)
    if (j != i) parts.push_back(all_but(n, j));
  return face_union(sigma(n), parts, "ehorn[" + std::to_string(n) + "," + std::to_string(i) + "]");
}

ShapeInclusion assoc_02() { return face_union(simplex(3), {{1, 2, 3}, {0, 1, 3}}, "assoc-02"); }

ShapeInclusion assoc_13() { return face_union(simplex(3), {{0, 2, 3}, {0, 1, 2}}, "assoc-13"); }

ShapeInclusion sigma1_mark() {
  ShapeInclusion s;
  s.name = "sigma1-mark";
  s.domain = simplex(1);
  s.codomain = sigma(1);
  for (int v = 0; v < 2; ++v) s.inclusion.vertex_map.push_back(v);
  for (int e = 0; e < s.domain.edge_count(); ++e) s.inclusion.edge_map.push_back(e);
  return s;
}

TruncatedEpsilonComplex braiding_cylinder() {
  TruncatedEpsilonComplex x;
  x.name = "cylinder";
  int v0 = x.add_vertex("0", "id0");
  int v1 = x.add_vertex("1", "id1");
  int a1 = x.add_edge("a1", v0, v0);
  int a2 = x.add_edge("a2", v1, v1);
  int b = x.add_edge("b", v0, v1);
  int c = x.add_edge("c", v0, v1);
  x.add_triangle(b, c, a1);
  x.add_triangle(a2, c, b);
  return x;
}

ShapeInclusion braiding(bool left) {
  auto x = braiding_cylinder();
  int dropped_edge = x.find_edge(left ? "a2" : "a1");
  std::vector<bool> keep_v(x.vertex_count(), true), keep_e(x.edge_count(), true);
  keep_e[dropped_edge] = false;
  const auto& tris = x.triangles();
  std::vector<bool> keep_t(tris.size());
  for (size_t i = 0; i < tris.size(); ++i)
    keep_t[i] = tris[i][0] != dropped_edge && tris[i][1] != dropped_edge && tris[i][2] != dropped_edge;
  ShapeInclusion s;
  s.name = left ? "braiding-left" : "braiding-right";
  s.codomain = x;
  s.domain = subcomplex(x, keep_v, keep_e, keep_t, s.inclusion);
  s.domain.name = s.name;
  return s;
}

ShapeInclusion faces(int n, const std::vector<std::vector<int>>& parts) {
  std::string name = "faces[" + std::to_string(n) + ";";
  for (size_t f = 0; f < parts.size(); ++f) {
    if (f) name += "|";
    for (size_t i = 0; i < parts[f].size(); ++i) name += (i ? " " : "") + std::to_string(parts[f][i]);
  }
  return face_union(simplex(n), parts, name + "]");
}

ShapeInclusion box_inclusion(const ShapeInclusion& f, const ShapeInclusion& g) {
  const auto& a1 = f.codomain;
  const auto& x1 = g.codomain;
  std::vector<std::pair<int, int>> coords;
  auto prod = product(a1, x1, &coords);
  const int nx = x1.vertex_count();
  const int mx = x1.edge_count();
  std::vector<bool> a0_vertex(a1.vertex_count(), false), x0_vertex(nx, false);
  std::vector<int> a0_edge(a1.edge_count(), -1), x0_edge(mx, -1);
  for (size_t i = 0; i < f.inclusion.vertex_map.size(); ++i) a0_vertex[f.inclusion.vertex_map[i]] = true;
  for (size_t i = 0; i < g.inclusion.vertex_map.size(); ++i) x0_vertex[g.inclusion.vertex_map[i]] = true;
  for (size_t i = 0; i < f.inclusion.edge_map.size(); ++i) a0_edge[f.inclusion.edge_map[i]] = static_cast<int>(i);
  for (size_t i = 0; i < g.inclusion.edge_map.size(); ++i) x0_edge[g.inclusion.edge_map[i]] = static_cast<int>(i);

  std::vector<bool> keep_v(prod.vertex_count()), keep_e(prod.edge_count());
  for (int v = 0; v < prod.vertex_count(); ++v) keep_v[v] = a0_vertex[v / nx] || x0_vertex[v % nx];
  for (int e = 0; e < prod.edge_count(); ++e) keep_e[e] = a0_edge[coords[e].first] >= 0 || x0_edge[coords[e].second] >= 0;
  auto in_sub = [](const TruncatedEpsilonComplex& sub, const std::vector<int>& pre, int d0, int d1, int d2) {
    return pre[d0] >= 0 && pre[d1] >= 0 && pre[d2] >= 0 && sub.has_triangle(pre[d0], pre[d1], pre[d2]);
  };
  const auto& tris = prod.triangles();
  std::vector<bool> keep_t(tris.size());
  for (size_t i = 0; i < tris.size(); ++i) {
    const auto& [d0, d1, d2] = tris[i];
    keep_t[i] = in_sub(f.domain, a0_edge, coords[d0].first, coords[d1].first, coords[d2].first) ||
                in_sub(g.domain, x0_edge, coords[d0].second, coords[d1].second, coords[d2].second);
  }
  ShapeInclusion s;
  s.name = "box(" + f.name + "," + g.name + ")";
  s.codomain = prod;
  s.codomain.name = s.name;
  s.domain = subcomplex(prod, keep_v, keep_e, keep_t, s.inclusion);
  s.domain.name = s.name;
  return s;
}

ShapeInclusion make_shape(const std::string& name) {
  if (name == "braiding-left") return braiding(true);
  if (name == "braiding-right") return braiding(false);
  if (name == "assoc-02") return assoc_02();
  if (name == "assoc-13") return assoc_13();
  if (name == "sigma1-mark") return sigma1_mark();
  if (name.rfind("box(", 0) == 0 && name.back() == ')') {
    auto args = split_top_level(name.substr(4, name.size() - 5));
    if (args.size() != 2) throw InputError("box takes two shapes: '" + name + "'");
    return box_inclusion(make_shape(args[0]), make_shape(args[1]));
  }
  auto open = name.find('[');
  if (open == std::string::npos || name.back() != ']') throw InputError("unknown shape '" + name + "'");
  std::string head = name.substr(0, open);
  std::string body = name.substr(open + 1, name.size() - open - 2);
  if (head == "faces") {
    auto semi = body.find(';');
    if (semi == std::string::npos) throw InputError("faces needs 'n;I|J': '" + name + "'");
    int n = parse_int(body.substr(0, semi), name);
    check_dim(n, "faces");
    std::vector<std::vector<int>> parts;
    std::stringstream in(body.substr(semi + 1));
    std::string part;
    while (std::getline(in, part, '|')) parts.push_back(int_list(part, ' ', name));
    return faces(n, parts);
  }
  auto args = int_list(body, ',', name);
  auto need = [&](size_t k) {
    if (args.size() != k) throw InputError("wrong number of parameters in '" + name + "'");
  };
  if (head == "Delta") return need(1), simplex_shape(args[0]);
  if (head == "Sigma") return need(1), sigma_shape(args[0]);
  if (head == "boundary") return need(1), boundary(args[0]);
  if (head == "horn") return need(2), horn(args[0], args[1]);
  if (head == "ehorn") return need(2), epsilon_horn(args[0], args[1]);
  throw InputError("unknown shape '" + name + "'");
}

}  // namespace fa
