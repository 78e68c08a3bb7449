#include "fa/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fa/errors.hpp"

namespace fa {

namespace {

std::string ptr(const std::string& base, size_t i) { return base + "/" + std::to_string(i); }

const Json& field(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw InputError("/" + key, "missing field '" + key + "'");
  return doc.at(key);
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where, "expected an array");
  std::vector<std::string> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], ptr(where, i)));
  return out;
}

template <size_t N>
std::vector<std::array<std::string, N>> tuple_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where, "expected an array");
  std::vector<std::array<std::string, N>> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array() || v[i].size() != N)
      throw InputError(ptr(where, i), "expected a " + std::to_string(N) + "-element array");
    std::array<std::string, N> t;
    for (size_t j = 0; j < N; ++j) t[j] = as_string(v[i][j], ptr(ptr(where, i), j));
    out.push_back(t);
  }
  return out;
}

void check_unique(const std::vector<std::string>& names, const std::string& where) {
  std::set<std::string> seen;
  for (size_t i = 0; i < names.size(); ++i)
    if (!seen.insert(names[i]).second) throw InputError(ptr(where, i), "duplicate name '" + names[i] + "'");
}

FileKind parse_kind(const Json& doc) {
  auto k = as_string(field(doc, "kind"), "/kind");
  static const std::map<std::string, FileKind> kinds = {
      {"effect_algebra", FileKind::EffectAlgebra},
      {"pseudo_effect_algebra", FileKind::PseudoEffectAlgebra},
      {"relfa", FileKind::RelFA},
      {"complex", FileKind::Complex},
  };
  auto it = kinds.find(k);
  if (it == kinds.end()) throw InputError("/kind", "unknown kind '" + k + "'");
  return it->second;
}

PartialAlgebra parse_table(const Json& doc, const std::string& name, SeedOrder order) {
  auto elements = string_list(field(doc, "elements"), "/elements");
  check_unique(elements, "/elements");
  if (order == SeedOrder::Sorted) std::sort(elements.begin(), elements.end());
  auto sums = tuple_list<3>(field(doc, "sum"), "/sum");
  return PartialAlgebra::from_triples(name, elements, sums, as_string(field(doc, "zero"), "/zero"),
                                      as_string(field(doc, "one"), "/one"));
}

RelFA parse_relfa(const Json& doc, const std::string& name, SeedOrder order, std::vector<std::string>& notes) {
  auto elements = string_list(field(doc, "elements"), "/elements");
  check_unique(elements, "/elements");
  if (order == SeedOrder::Sorted) std::sort(elements.begin(), elements.end());
  RelFA f(name, elements);
  auto resolve = [&](const std::string& id, const std::string& where) {
    auto it = std::find(f.elements.begin(), f.elements.end(), id);
    if (it == f.elements.end()) throw InputError(where, "dangling identifier '" + id + "'");
    return static_cast<int>(it - f.elements.begin());
  };
  auto mu = tuple_list<3>(field(doc, "mu"), "/mu");
  for (size_t i = 0; i < mu.size(); ++i)
    f.mu.insert(resolve(mu[i][0], ptr(ptr("/mu", i), 0)), resolve(mu[i][1], ptr(ptr("/mu", i), 1)),
                resolve(mu[i][2], ptr(ptr("/mu", i), 2)));
  auto eta = string_list(field(doc, "eta"), "/eta");
  for (size_t i = 0; i < eta.size(); ++i) f.eta[resolve(eta[i], ptr("/eta", i))] = true;
  auto eps = string_list(field(doc, "epsilon"), "/epsilon");
  for (size_t i = 0; i < eps.size(); ++i) f.epsilon[resolve(eps[i], ptr("/epsilon", i))] = true;
  if (doc.contains("delta")) {
    auto delta = tuple_list<3>(doc.at("delta"), "/delta");
    for (size_t i = 0; i < delta.size(); ++i)
      f.delta.insert(resolve(delta[i][0], ptr(ptr("/delta", i), 0)),
                     resolve(delta[i][1], ptr(ptr("/delta", i), 1)),
                     resolve(delta[i][2], ptr(ptr("/delta", i), 2)));
  } else {
    f.delta = derive_delta(f.mu, f.epsilon);
    notes.emplace_back("delta derived from mu and epsilon");
  }
  return f;
}

TruncatedEpsilonComplex parse_complex(const Json& doc, const std::string& name, SeedOrder order) {
  TruncatedEpsilonComplex x;
  x.name = name;
  auto vertices = string_list(field(doc, "vertices"), "/vertices");
  check_unique(vertices, "/vertices");
  if (order == SeedOrder::Sorted) std::sort(vertices.begin(), vertices.end());
  std::map<std::string, std::string> identities;
  if (doc.contains("identities")) {
    const auto& ids = doc.at("identities");
    if (!ids.is_object()) throw InputError("/identities", "expected an object");
    for (const auto& [v, e] : ids.items()) {
      if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
        throw InputError("/identities/" + v, "dangling identifier '" + v + "'");
      identities[v] = as_string(e, "/identities/" + v);
    }
  }
  std::set<std::string> marked_names;
  std::vector<std::string> marked_list;
  if (doc.contains("marked")) {
    marked_list = string_list(doc.at("marked"), "/marked");
    marked_names.insert(marked_list.begin(), marked_list.end());
  }
  for (const auto& v : vertices) {
    auto it = identities.find(v);
    std::string id = it == identities.end() ? "id(" + v + ")" : it->second;
    if (x.find_edge(id) >= 0) throw InputError("/identities/" + v, "duplicate name '" + id + "'");
    x.add_vertex(v, id, marked_names.count(id) != 0);
  }
  auto edges = tuple_list<3>(field(doc, "edges"), "/edges");
  if (order == SeedOrder::Sorted) std::sort(edges.begin(), edges.end());
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& [e, s, t] = edges[i];
    if (x.find_edge(e) >= 0) throw InputError(ptr(ptr("/edges", i), 0), "duplicate name '" + e + "'");
    int sv = x.find_vertex(s), tv = x.find_vertex(t);
    if (sv < 0) throw InputError(ptr(ptr("/edges", i), 1), "dangling identifier '" + s + "'");
    if (tv < 0) throw InputError(ptr(ptr("/edges", i), 2), "dangling identifier '" + t + "'");
    x.add_edge(e, sv, tv, marked_names.count(e) != 0);
  }
  for (size_t i = 0; i < marked_list.size(); ++i)
    if (x.find_edge(marked_list[i]) < 0)
      throw InputError(ptr("/marked", i), "dangling identifier '" + marked_list[i] + "'");
  if (doc.contains("triangles")) {
    auto tris = tuple_list<3>(doc.at("triangles"), "/triangles");
    for (size_t i = 0; i < tris.size(); ++i) {
      int d[3];
      for (int j = 0; j < 3; ++j) {
        d[j] = x.find_edge(tris[i][j]);
        if (d[j] < 0) throw InputError(ptr(ptr("/triangles", i), j), "dangling identifier '" + tris[i][j] + "'");
      }
      try {
        x.add_triangle(d[0], d[1], d[2]);
      } catch (const ContractError& err) {
        throw InputError(ptr("/triangles", i), err.what());
      }
    }
  }
  return x;
}

}  // namespace

std::string_view to_string(FileKind kind) {
  switch (kind) {
    case FileKind::EffectAlgebra: return "effect_algebra";
    case FileKind::PseudoEffectAlgebra: return "pseudo_effect_algebra";
    case FileKind::RelFA: return "relfa";
    case FileKind::Complex: return "complex";
  }
  return "?";
}

StructureFile parse_structure(const Json& doc, SeedOrder order) {
  if (!doc.is_object()) throw InputError("", "document must be a JSON object");
  StructureFile s;
  s.kind = parse_kind(doc);
  s.name = doc.contains("name") ? as_string(doc.at("name"), "/name") : std::string("unnamed");
  switch (s.kind) {
    case FileKind::EffectAlgebra:
    case FileKind::PseudoEffectAlgebra: s.structure = parse_table(doc, s.name, order); break;
    case FileKind::RelFA: s.structure = parse_relfa(doc, s.name, order, s.notes); break;
    case FileKind::Complex: s.structure = parse_complex(doc, s.name, order); break;
  }
  return s;
}

StructureFile parse_text(const std::string& text, SeedOrder order) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    size_t line = 1 + std::count(text.begin(), text.begin() + std::min(err.byte, text.size()), '\n');
    throw InputError("line " + std::to_string(line), "malformed JSON");
  }
  return parse_structure(doc, order);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StructureFile parse_input(const std::string& path, SeedOrder order) {
  try {
    return parse_text(read_file(path), order);
  } catch (const InputError& err) {
    if (err.location() == path) throw;
    throw InputError(path + (err.location().empty() ? "" : ":" + err.location()),
                     std::string(err.what()).substr(err.location().empty() ? 0 : err.location().size() + 2));
  }
}

Json to_json(const PartialAlgebra& e, FileKind kind) {
  Json j;
  j["kind"] = to_string(kind);
  j["name"] = e.name;
  j["elements"] = e.elements;
  j["zero"] = e.elements[e.zero];
  j["one"] = e.elements[e.one];
  Json sums = Json::array();
  for (const auto& [a, b, c] : e.sum_triples()) sums.push_back({e.elements[a], e.elements[b], e.elements[c]});
  j["sum"] = sums;
  return j;
}

Json to_json(const RelFA& f) {
  Json j;
  j["kind"] = "relfa";
  j["name"] = f.name;
  j["elements"] = f.elements;
  auto triples = [&](const TernaryRelation& r) {
    Json out = Json::array();
    for (const auto& [x, y, z] : r.triples()) out.push_back({f.elements[x], f.elements[y], f.elements[z]});
    return out;
  };
  j["mu"] = triples(f.mu);
  j["delta"] = triples(f.delta);
  Json eta = Json::array(), eps = Json::array();
  for (int i : f.units()) eta.push_back(f.elements[i]);
  for (int i : f.counits()) eps.push_back(f.elements[i]);
  j["eta"] = eta;
  j["epsilon"] = eps;
  return j;
}

Json to_json(const TruncatedEpsilonComplex& x) {
  Json j;
  j["kind"] = "complex";
  j["name"] = x.name;
  Json vertices = Json::array(), ids = Json::object(), edges = Json::array(), marked = Json::array(),
       tris = Json::array();
  for (int v = 0; v < x.vertex_count(); ++v) {
    vertices.push_back(x.vertex_name(v));
    ids[x.vertex_name(v)] = x.edge_name(x.identity(v));
  }
  for (int e = 0; e < x.edge_count(); ++e) {
    if (x.marked(e)) marked.push_back(x.edge_name(e));
    if (x.is_identity(e)) continue;
    edges.push_back({x.edge_name(e), x.vertex_name(x.source(e)), x.vertex_name(x.target(e))});
  }
  for (const auto& t : x.triangles())
    if (!x.is_degenerate(t)) tris.push_back({x.edge_name(t[0]), x.edge_name(t[1]), x.edge_name(t[2])});
  j["vertices"] = vertices;
  j["identities"] = ids;
  j["edges"] = edges;
  j["marked"] = marked;
  j["triangles"] = tris;
  return j;
}

Json to_json(const StructureFile& s) {
  if (auto* t = s.table()) return to_json(*t, s.kind);
  if (auto* f = s.relfa()) return to_json(*f);
  return to_json(*s.complex());
}

}  // namespace fa
