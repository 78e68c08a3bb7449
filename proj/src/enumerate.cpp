#include "fa/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fa/errors.hpp"
#include "fa/parallel.hpp"

namespace fa {

namespace {

constexpr int kUnassigned = -2;

std::vector<int> permuted_table(const PartialAlgebra& e, const std::vector<int>& p) {
  const int n = e.size();
  std::vector<int> out(static_cast<size_t>(n) * n, kUndefined);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = e.sum(a, b);
      out[static_cast<size_t>(p[a]) * n + p[b]] = s == kUndefined ? kUndefined : p[s];
    }
  return out;
}

// Best permutation (old index -> new index) fixing 0 ↦ 0 and 1 ↦ n-1.
std::vector<int> best_table_permutation(const PartialAlgebra& e) {
  const int n = e.size();
  std::vector<int> middles;
  for (int x = 0; x < n; ++x)
    if (x != e.zero && x != e.one) middles.push_back(x);
  std::vector<int> best, best_perm;
  std::vector<int> p(n);
  std::vector<int> order = middles;
  std::sort(order.begin(), order.end());
  do {
    p[e.zero] = 0;
    p[e.one] = n - 1;
    for (size_t i = 0; i < order.size(); ++i) p[order[i]] = static_cast<int>(i) + 1;
    auto t = permuted_table(e, p);
    if (best.empty() || t < best) {
      best = std::move(t);
      best_perm = p;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best_perm;
}

class TableSearch {
 public:
  TableSearch(int n, bool commutative) : n_(n), commutative_(commutative) {
    t_.assign(static_cast<size_t>(n) * n, kUnassigned);
    const int one = n - 1;
    for (int x = 0; x < n; ++x) {
      set(0, x, x);
      set(x, 0, x);
    }
    for (int x = 1; x < n; ++x) {
      set(x, one, kUndefined);
      set(one, x, kUndefined);
    }
    for (int a = 1; a < one; ++a)
      for (int b = commutative ? a : 1; b < one; ++b) cells_.push_back({a, b});
  }

  size_t cell_count() const { return cells_.size(); }
  int domain_size() const { return n_ + 1; }

  /// Runs the subtree where cell 0 takes its `branch`-th value (or the whole
  /// search when there are no free cells and branch == 0).
  void run_branch(int branch, std::vector<PartialAlgebra>& out) {
    if (cells_.empty()) {
      if (branch == 0) leaf(out);
      return;
    }
    assign(0, branch - 1);
    if (consistent()) descend(1, out);
    assign(0, kUnassigned);
  }

 private:
  int at(int a, int b) const { return t_[static_cast<size_t>(a) * n_ + b]; }
  void set(int a, int b, int v) { t_[static_cast<size_t>(a) * n_ + b] = v; }
  void assign(size_t i, int v) {
    set(cells_[i].first, cells_[i].second, v);
    if (commutative_) set(cells_[i].second, cells_[i].first, v);
  }

  bool consistent() const {
    const int one = n_ - 1;
    for (int a = 0; a < n_; ++a) {
      int right = 0, left = 0;
      for (int b = 0; b < n_; ++b) {
        right += at(a, b) == one;
        left += at(b, a) == one;
      }
      if (right > 1 || left > 1) return false;
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = at(a, b);
        if (ab == kUnassigned) continue;
        for (int c = 0; c < n_; ++c) {
          int lhs = ab == kUndefined ? kUndefined : at(ab, c);
          if (lhs == kUnassigned) continue;
          int bc = at(b, c);
          if (bc == kUnassigned) continue;
          int rhs = bc == kUndefined ? kUndefined : at(a, bc);
          if (rhs == kUnassigned) continue;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  void descend(size_t i, std::vector<PartialAlgebra>& out) {
    if (i == cells_.size()) {
      leaf(out);
      return;
    }
    for (int v = kUndefined; v < n_; ++v) {
      assign(i, v);
      if (consistent()) descend(i + 1, out);
    }
    assign(i, kUnassigned);
  }

  void leaf(std::vector<PartialAlgebra>& out) const {
    PartialAlgebra e;
    e.elements.resize(n_);
    e.table = t_;
    e.zero = 0;
    e.one = n_ - 1;
    bool ok = commutative_ ? is_valid_effect_algebra(e) : is_valid_pseudo_effect_algebra(e);
    if (ok) out.push_back(std::move(e));
  }

  int n_;
  bool commutative_;
  std::vector<int> t_;
  std::vector<std::pair<int, int>> cells_;
};

// Frobenius search. Every element a of a relational monoid has a unique
// source unit s(a) with μ(a, s(a)) ∋ a and target unit t(a); μ(a, b) is empty
// unless s(a) = t(b), and its elements run from s(b) to t(a). Each unit has
// exactly one ε-element leaving it and one entering it.
struct FrobRoot {
  int units = 0;
  std::vector<int> s, t;
  unsigned eps = 0;
};

class FrobSearch {
 public:
  FrobSearch(int n, const FrobRoot& root) : n_(n), root_(root) {
    cells_.assign(static_cast<size_t>(n) * n, -1);
    cand_.assign(static_cast<size_t>(n) * n, 0);
    const int k = root.units;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int& cell = cells_[static_cast<size_t>(a) * n + b];
        if (a < k || b < k) {
          cell = 0;
          if (a < k && b < k && a == b) cell = 1 << a;
          if (b < k && a >= k && b == root.s[a]) cell = 1 << a;
          if (a < k && b >= k && a == root.t[b]) cell = 1 << b;
          continue;
        }
        if (root.s[a] != root.t[b]) {
          cell = 0;
          continue;
        }
        unsigned mask = 0;
        for (int c = 0; c < n; ++c)
          if (root.s[c] == root.s[b] && root.t[c] == root.t[a]) mask |= 1u << c;
        cand_[static_cast<size_t>(a) * n + b] = mask;
        free_.push_back(a * n + b);
      }
  }

  void run(std::vector<RelFA>& out) {
    if (consistent()) descend(0, out);
  }

 private:
  int cell(int a, int b) const { return cells_[static_cast<size_t>(a) * n_ + b]; }

  bool consistent() const {
    for (int e = 0; e < n_; ++e) {
      if (!(root_.eps >> e & 1)) continue;
      for (int a = 0; a < n_; ++a) {
        if (root_.t[e] == root_.t[a]) {
          int count = 0;
          bool complete = true;
          for (int l = 0; l < n_; ++l) {
            int c = cell(a, l);
            if (c < 0) complete = false;
            else count += c >> e & 1;
          }
          if (count > 1 || (complete && count == 0)) return false;
        }
        if (root_.s[e] == root_.s[a]) {
          int count = 0;
          bool complete = true;
          for (int m = 0; m < n_; ++m) {
            int c = cell(m, a);
            if (c < 0) complete = false;
            else count += c >> e & 1;
          }
          if (count > 1 || (complete && count == 0)) return false;
        }
      }
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = cell(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          int bc = cell(b, c);
          if (bc < 0) continue;
          int lhs = 0, rhs = 0;
          bool known = true;
          for (int x = 0; x < n_ && known; ++x)
            if (ab >> x & 1) {
              int xc = cell(x, c);
              if (xc < 0) known = false;
              else lhs |= xc;
            }
          for (int y = 0; y < n_ && known; ++y)
            if (bc >> y & 1) {
              int ay = cell(a, y);
              if (ay < 0) known = false;
              else rhs |= ay;
            }
          if (known && lhs != rhs) return false;
        }
      }
    return true;
  }

  void descend(size_t i, std::vector<RelFA>& out) {
    if (i == free_.size()) {
      leaf(out);
      return;
    }
    int idx = free_[i];
    unsigned mask = cand_[idx];
    // all submasks of `mask`, ascending
    for (unsigned sub = 0;; sub = (sub - mask) & mask) {
      cells_[idx] = static_cast<int>(sub);
      if (consistent()) descend(i + 1, out);
      if (sub == mask) break;
    }
    cells_[idx] = -1;
  }

  void leaf(std::vector<RelFA>& out) const {
    std::vector<std::string> names;
    for (int i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i));
    RelFA f("", names);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (cell(a, b) >> c & 1) f.mu.insert(a, b, c);
    for (int u = 0; u < root_.units; ++u) f.eta[u] = true;
    for (int e = 0; e < n_; ++e) f.epsilon[e] = root_.eps >> e & 1;
    f.delta = derive_delta(f.mu, f.epsilon);
    if (validate(StructureKind::Frobenius, f).pass) out.push_back(std::move(f));
  }

  int n_;
  FrobRoot root_;
  std::vector<int> cells_;
  std::vector<unsigned> cand_;
  std::vector<int> free_;
};

std::vector<FrobRoot> frobenius_roots(int n) {
  std::vector<FrobRoot> roots;
  for (int k = 1; k <= n; ++k) {
    const int m = n - k;
    int combos = 1;
    for (int i = 0; i < 2 * m; ++i) combos *= k;
    for (int code = 0; code < combos; ++code) {
      FrobRoot r;
      r.units = k;
      r.s.resize(n);
      r.t.resize(n);
      for (int u = 0; u < k; ++u) r.s[u] = r.t[u] = u;
      for (int a = k, c = code; a < n; ++a) {
        r.s[a] = c % k;
        c /= k;
        r.t[a] = c % k;
        c /= k;
      }
      for (unsigned eps = 1; eps < (1u << n); ++eps) {
        std::vector<int> out_deg(k, 0), in_deg(k, 0);
        for (int e = 0; e < n; ++e)
          if (eps >> e & 1) {
            ++out_deg[r.s[e]];
            ++in_deg[r.t[e]];
          }
        bool ok = std::all_of(out_deg.begin(), out_deg.end(), [](int d) { return d == 1; }) &&
                  std::all_of(in_deg.begin(), in_deg.end(), [](int d) { return d == 1; });
        if (!ok) continue;
        r.eps = eps;
        roots.push_back(r);
      }
    }
  }
  return roots;
}

RelFA permuted_relfa(const RelFA& f, const std::vector<int>& p) {
  RelFA g(f.name, f.elements);
  for (int i = 0; i < f.size(); ++i) g.elements[p[i]] = f.elements[i];
  for (const auto& [x, y, z] : f.mu.triples()) g.mu.insert(p[x], p[y], p[z]);
  for (const auto& [x, y, z] : f.delta.triples()) g.delta.insert(p[x], p[y], p[z]);
  for (int i = 0; i < f.size(); ++i) {
    g.eta[p[i]] = f.eta[i];
    g.epsilon[p[i]] = f.epsilon[i];
  }
  return g;
}

std::vector<int> relfa_encoding(const RelFA& f, const std::vector<int>& p) {
  const int n = f.size();
  std::vector<int> key(2 * n + n * n * n, 0);
  for (int i = 0; i < n; ++i) {
    key[p[i]] = f.eta[i] ? 0 : 1;
    key[n + p[i]] = f.epsilon[i] ? 0 : 1;
  }
  // absent triples sort before present ones after the flags
  for (const auto& [x, y, z] : f.mu.triples())
    key[2 * n + (static_cast<size_t>(p[x]) * n + p[y]) * n + p[z]] = 1;
  return key;
}

std::vector<int> best_relfa_permutation(const RelFA& f) {
  const int n = f.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best, best_perm;
  do {
    auto key = relfa_encoding(f, p);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_perm = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best_perm;
}

void check_bound(int size, const EnumerationOptions& opt) {
  if (size < 1) throw InputError("enumerate: size must be positive");
  if (size > opt.bound)
    throw InputError("enumerate: size " + std::to_string(size) + " exceeds the configured bound " +
                     std::to_string(opt.bound));
}

}  // namespace

EnumKind parse_enum_kind(std::string_view text) {
  if (text == "effect-algebra" || text == "effect_algebra") return EnumKind::EffectAlgebra;
  if (text == "pseudo-effect-algebra" || text == "pseudo_effect_algebra") return EnumKind::PseudoEffectAlgebra;
  if (text == "frobenius") return EnumKind::Frobenius;
  throw InputError("unknown enumeration kind '" + std::string(text) + "'");
}

std::string_view to_string(EnumKind kind) {
  switch (kind) {
    case EnumKind::EffectAlgebra: return "effect-algebra";
    case EnumKind::PseudoEffectAlgebra: return "pseudo-effect-algebra";
    case EnumKind::Frobenius: return "frobenius";
  }
  return "?";
}

std::vector<int> canonical_table(const PartialAlgebra& e) { return permuted_table(e, best_table_permutation(e)); }

PartialAlgebra canonical_form(const PartialAlgebra& e) {
  const int n = e.size();
  auto p = best_table_permutation(e);
  PartialAlgebra out;
  out.name = e.name;
  out.table = permuted_table(e, p);
  out.zero = 0;
  out.one = n - 1;
  out.elements.resize(n);
  for (int i = 0; i < n; ++i) out.elements[i] = "x" + std::to_string(i);
  out.elements[0] = "0";
  if (n > 1) out.elements[n - 1] = "1";
  return out;
}

std::vector<int> canonical_relfa(const RelFA& f) { return relfa_encoding(f, best_relfa_permutation(f)); }

std::vector<PartialAlgebra> enumerate_tables(int size, EnumKind kind, const EnumerationOptions& opt) {
  check_bound(size, opt);
  if (kind == EnumKind::Frobenius) throw ContractError("enumerate_tables: use enumerate_frobenius");
  const bool commutative = kind == EnumKind::EffectAlgebra;
  std::vector<PartialAlgebra> found;
  if (size == 1) {
    PartialAlgebra e;
    e.elements = {"0"};
    e.table = {0};
    found.push_back(e);
  } else {
    TableSearch probe(size, commutative);
    const int branches = probe.cell_count() == 0 ? 1 : probe.domain_size();
    std::vector<std::vector<PartialAlgebra>> per_branch(branches);
    if (opt.parallel) {
      FA_PARALLEL_FOR
      for (int b = 0; b < branches; ++b) {
        TableSearch search(size, commutative);
        search.run_branch(b, per_branch[b]);
      }
    } else {
      for (int b = 0; b < branches; ++b) {
        TableSearch search(size, commutative);
        search.run_branch(b, per_branch[b]);
      }
    }
    for (auto& v : per_branch)
      for (auto& e : v) found.push_back(std::move(e));
  }
  std::map<std::vector<int>, PartialAlgebra> classes;
  for (const auto& e : found) {
    auto c = canonical_form(e);
    classes.emplace(c.table, std::move(c));
  }
  std::vector<PartialAlgebra> out;
  int i = 0;
  for (auto& [key, e] : classes) {
    e.name = std::string(to_string(kind)) + "(" + std::to_string(size) + ")#" + std::to_string(i++);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RelFA> enumerate_frobenius(int size, const EnumerationOptions& opt) {
  check_bound(size, opt);
  auto roots = frobenius_roots(size);
  std::vector<std::vector<RelFA>> per_root(roots.size());
  const int count = static_cast<int>(roots.size());
  if (opt.parallel) {
    FA_PARALLEL_FOR
    for (int r = 0; r < count; ++r) FrobSearch(size, roots[r]).run(per_root[r]);
  } else {
    for (int r = 0; r < count; ++r) FrobSearch(size, roots[r]).run(per_root[r]);
  }
  std::map<std::vector<int>, RelFA> classes;
  for (auto& v : per_root)
    for (auto& f : v) {
      auto p = best_relfa_permutation(f);
      auto key = relfa_encoding(f, p);
      if (classes.count(key)) continue;
      auto g = permuted_relfa(f, p);
      for (int i = 0; i < size; ++i) g.elements[i] = "x" + std::to_string(i);
      classes.emplace(std::move(key), std::move(g));
    }
  std::vector<RelFA> out;
  int i = 0;
  for (auto& [key, f] : classes) {
    f.name = "frobenius(" + std::to_string(size) + ")#" + std::to_string(i++);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<RelFA> enumerate_frobenius_candidates(int size, const EnumerationOptions& opt) {
  auto valid = enumerate_frobenius(size, opt);
  std::map<std::vector<int>, RelFA> classes;
  auto add = [&](RelFA f) {
    auto p = best_relfa_permutation(f);
    auto key = relfa_encoding(f, p);
    if (classes.count(key) || !has_unit_typing(f)) return;
    auto g = permuted_relfa(f, p);
    g.delta = derive_delta(g.mu, g.epsilon);
    classes.emplace(std::move(key), std::move(g));
  };
  for (const auto& f : valid) {
    add(f);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        for (int z = 0; z < size; ++z) {
          RelFA g = f;
          if (g.mu.contains(x, y, z))
            g.mu.erase(x, y, z);
          else
            g.mu.insert(x, y, z);
          add(std::move(g));
        }
    for (int x = 0; x < size; ++x) {
      RelFA g = f;
      g.eta[x] = !g.eta[x];
      add(std::move(g));
      RelFA h = f;
      h.epsilon[x] = !h.epsilon[x];
      add(std::move(h));
    }
  }
  std::vector<RelFA> out;
  int i = 0;
  for (auto& [key, f] : classes) {
    f.name = "candidate(" + std::to_string(size) + ")#" + std::to_string(i++);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace fa
