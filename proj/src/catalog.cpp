#include "fa/catalog.hpp"

#include <algorithm>
#include <filesystem>

#include "fa/errors.hpp"
#include "fa/io.hpp"

#ifndef FA_CATALOG_DIR
#define FA_CATALOG_DIR "catalog"
#endif

namespace fa {

namespace {

std::string tuple_name(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Interval [0, u] in Z^k with mixed-radix indexing (first coordinate slowest).
PartialAlgebra grid_interval(const std::vector<int>& u, std::string name,
                             std::string (*label)(const std::vector<int>&)) {
  if (u.empty()) throw InputError("interval: need at least one coordinate");
  for (int x : u)
    if (x < 0) throw InputError("interval: coordinates must be non-negative");
  const int k = static_cast<int>(u.size());
  int n = 1;
  for (int x : u) n *= x + 1;
  std::vector<std::vector<int>> points(n, std::vector<int>(k));
  for (int i = 0; i < n; ++i)
    for (int c = k - 1, r = i; c >= 0; --c) {
      points[i][c] = r % (u[c] + 1);
      r /= u[c] + 1;
    }
  auto index = [&](const std::vector<int>& p) {
    int i = 0;
    for (int c = 0; c < k; ++c) i = i * (u[c] + 1) + p[c];
    return i;
  };
  PartialAlgebra e;
  e.name = std::move(name);
  for (const auto& p : points) e.elements.push_back(label(p));
  e.table.assign(static_cast<size_t>(n) * n, kUndefined);
  std::vector<int> s(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool ok = true;
      for (int c = 0; c < k; ++c) {
        s[c] = points[a][c] + points[b][c];
        ok = ok && s[c] <= u[c];
      }
      if (ok) e.table[static_cast<size_t>(a) * n + b] = index(s);
    }
  e.zero = 0;
  e.one = n - 1;
  return e;
}

std::string bit_label(const std::vector<int>& p) {
  std::string s;
  for (int x : p) s += static_cast<char>('0' + x);
  return s;
}

std::string int_label(const std::vector<int>& p) { return std::to_string(p[0]); }

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
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

int parse_int(const std::string& s, const std::string& context) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad integer '" + s + "' in '" + context + "'");
  }
}

CatalogEntry table_entry(PartialAlgebra e) {
  auto kind = is_commutative(e) ? CatalogKind::EffectAlgebra : CatalogKind::PseudoEffectAlgebra;
  std::string name = e.name;
  return CatalogEntry{name, kind, std::move(e)};
}

}  // namespace

PartialAlgebra chain(int n) {
  if (n < 0) throw InputError("chain: n must be non-negative");
  return grid_interval({n}, "chain(" + std::to_string(n) + ")", int_label);
}

PartialAlgebra boolean(int k) {
  if (k < 1) throw InputError("boolean: k must be positive");
  return grid_interval(std::vector<int>(k, 1), "boolean(" + std::to_string(k) + ")", bit_label);
}

PartialAlgebra zk_interval(const std::vector<int>& u) {
  std::string args;
  for (size_t i = 0; i < u.size(); ++i) args += (i ? "," : "") + std::to_string(u[i]);
  return grid_interval(u, "zk_interval(" + args + ")", tuple_name);
}

PartialAlgebra renamed(const PartialAlgebra& e, std::string name, std::vector<std::string> elements) {
  if (elements.size() != e.elements.size()) throw InputError("renamed: wrong number of names");
  PartialAlgebra out = e;
  out.name = std::move(name);
  out.elements = std::move(elements);
  std::vector<std::string> sorted = out.elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("renamed: duplicate element name");
  return out;
}

PartialAlgebra horizontal_sum(const PartialAlgebra& a, const PartialAlgebra& b) {
  std::vector<int> pos(b.size(), -1);
  PartialAlgebra out;
  out.name = "horizontal_sum(" + a.name + "," + b.name + ")";
  out.elements = a.elements;
  pos[b.zero] = a.zero;
  pos[b.one] = a.one;
  for (int x = 0; x < b.size(); ++x) {
    if (x == b.zero || x == b.one) continue;
    if (std::find(a.elements.begin(), a.elements.end(), b.elements[x]) != a.elements.end())
      throw InputError("horizontal_sum: element name '" + b.elements[x] + "' occurs in both summands");
    pos[x] = static_cast<int>(out.elements.size());
    out.elements.push_back(b.elements[x]);
  }
  const int n = out.size();
  out.table.assign(static_cast<size_t>(n) * n, kUndefined);
  for (const auto& [x, y, z] : a.sum_triples()) out.table[static_cast<size_t>(x) * n + y] = z;
  for (const auto& [x, y, z] : b.sum_triples()) out.table[static_cast<size_t>(pos[x]) * n + pos[y]] = pos[z];
  out.zero = a.zero;
  out.one = a.one;
  return out;
}

PartialAlgebra direct_product(const PartialAlgebra& a, const PartialAlgebra& b) {
  PartialAlgebra out;
  out.name = "direct_product(" + a.name + "," + b.name + ")";
  const int nb = b.size();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < nb; ++y) out.elements.push_back("(" + a.elements[x] + "," + b.elements[y] + ")");
  const int n = out.size();
  out.table.assign(static_cast<size_t>(n) * n, kUndefined);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int s = a.sum(p / nb, q / nb), t = b.sum(p % nb, q % nb);
      if (s != kUndefined && t != kUndefined) out.table[static_cast<size_t>(p) * n + q] = s * nb + t;
    }
  out.zero = a.zero * nb + b.zero;
  out.one = a.one * nb + b.one;
  return out;
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic_group: n must be positive");
  GroupTable g;
  g.name = "Z/" + std::to_string(n);
  for (int i = 0; i < n; ++i) g.elements.push_back(std::to_string(i));
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return g;
}

GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  g.name = "S3";
  for (const auto& q : perms) g.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  const int n = static_cast<int>(perms.size());
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c;  // (a∘b)(i) = a(b(i))
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[static_cast<size_t>(a) * n + b] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

void check_group(const GroupTable& t) {
  const int n = t.size();
  if (n == 0 || static_cast<int>(t.mul.size()) != n * n) throw InputError("group: malformed table");
  for (int a = 0; a < n; ++a) {
    if (t(t.identity, a) != a || t(a, t.identity) != a) throw InputError("group: identity law fails");
    bool inverse = false;
    for (int b = 0; b < n; ++b) inverse = inverse || (t(a, b) == t.identity && t(b, a) == t.identity);
    if (!inverse) throw InputError("group: element without inverse");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) throw InputError("group: associativity fails");
  }
}

RelFA group_algebra(const GroupTable& t) {
  check_group(t);
  RelFA f("group_algebra(" + t.name + ")", t.elements);
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      f.mu.insert(a, b, t(a, b));
      f.delta.insert(t(a, b), a, b);
    }
  f.eta[t.identity] = true;
  f.epsilon[t.identity] = true;
  return f;
}

RelFA CatalogEntry::relfa() const {
  if (auto* t = table()) return to_relfa(*t);
  return std::get<RelFA>(structure);
}

const std::string& default_catalog_dir() {
  static const std::string dir = FA_CATALOG_DIR;
  return dir;
}

std::vector<CatalogEntry> builtin_catalog(const std::string& fixture_dir) {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 5; ++n) out.push_back(table_entry(chain(n)));
  for (int k = 1; k <= 3; ++k) out.push_back(table_entry(boolean(k)));
  for (const auto& u : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 1, 2}})
    out.push_back(table_entry(zk_interval(u)));
  out.push_back(construct_catalog("MO2"));
  out.push_back(table_entry(horizontal_sum(chain(2), boolean(2))));
  out.push_back(table_entry(direct_product(chain(1), chain(2))));
  for (int n = 2; n <= 5; ++n) {
    auto f = group_algebra(cyclic_group(n));
    out.push_back(CatalogEntry{f.name, CatalogKind::RelFA, f});
  }
  auto s3 = group_algebra(symmetric_group3());
  out.push_back(CatalogEntry{s3.name, CatalogKind::RelFA, s3});

  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(fixture_dir))
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    auto s = parse_input(path.string());
    switch (s.kind) {
      case FileKind::EffectAlgebra:
        out.push_back(CatalogEntry{s.name, CatalogKind::EffectAlgebra, *s.table()});
        break;
      case FileKind::PseudoEffectAlgebra:
        out.push_back(CatalogEntry{s.name, CatalogKind::PseudoEffectAlgebra, *s.table()});
        break;
      case FileKind::RelFA: out.push_back(CatalogEntry{s.name, CatalogKind::RelFA, *s.relfa()}); break;
      case FileKind::Complex: break;
    }
  }
  return out;
}

std::vector<CatalogEntry> builtin_catalog() { return builtin_catalog(default_catalog_dir()); }

CatalogEntry construct_catalog(const std::string& name) {
  auto open = name.find('(');
  if (name == "MO2") {
    auto block = boolean(2);
    auto a = renamed(block, "A", {"0", "a", "a'", "1"});
    auto b = renamed(block, "B", {"0", "b", "b'", "1"});
    auto mo2 = horizontal_sum(a, b);
    mo2.name = "MO2";
    return table_entry(mo2);
  }
  if (open == std::string::npos || name.back() != ')')
    throw InputError("unknown catalog name '" + name + "'");
  std::string head = name.substr(0, open);
  auto args = split_top_level(name.substr(open + 1, name.size() - open - 2));
  auto one_int = [&] {
    if (args.size() != 1) throw InputError("'" + name + "' takes one argument");
    return parse_int(args[0], name);
  };
  auto table_arg = [&](const std::string& s) {
    auto e = construct_catalog(s);
    if (!e.table()) throw InputError("'" + s + "' is not a partial algebra");
    return *e.table();
  };
  if (head == "chain") return table_entry(chain(one_int()));
  if (head == "boolean") return table_entry(boolean(one_int()));
  if (head == "zk_interval") {
    std::vector<int> u;
    for (const auto& a : args) u.push_back(parse_int(a, name));
    return table_entry(zk_interval(u));
  }
  if (head == "horizontal_sum" || head == "direct_product") {
    if (args.size() != 2) throw InputError("'" + name + "' takes two arguments");
    auto a = table_arg(args[0]), b = table_arg(args[1]);
    return table_entry(head == "horizontal_sum" ? horizontal_sum(a, b) : direct_product(a, b));
  }
  if (head == "group_algebra") {
    if (args.size() != 1) throw InputError("'" + name + "' takes one argument");
    RelFA f;
    if (args[0] == "S3") {
      f = group_algebra(symmetric_group3());
    } else if (args[0].rfind("Z/", 0) == 0) {
      f = group_algebra(cyclic_group(parse_int(args[0].substr(2), name)));
    } else {
      throw InputError("unknown group '" + args[0] + "'");
    }
    return CatalogEntry{f.name, CatalogKind::RelFA, f};
  }
  throw InputError("unknown catalog name '" + name + "'");
}

CatalogEntry find_catalog_entry(const std::string& name) {
  for (auto& e : builtin_catalog())
    if (e.name == name) return e;
  return construct_catalog(name);
}

}  // namespace fa
