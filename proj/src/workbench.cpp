#include "fa/workbench.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fa/catalog.hpp"
#include "fa/enumerate.hpp"
#include "fa/errors.hpp"
#include "fa/homology.hpp"
#include "fa/lifting.hpp"
#include "fa/mapping.hpp"
#include "fa/nerve.hpp"
#include "fa/ortho.hpp"
#include "fa/shapes.hpp"

namespace fa::cli {

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["input_digest"] = input_digest;
  j["results"] = results;
  j["certificates"] = certificates;
  j["exit_status"] = exit_status;
  return j;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

constexpr const char* kCatalogPrefix = "catalog:";

struct Input {
  std::string label;
  StructureFile file;
  std::string bytes;
};

struct Context {
  bool json = false;
  SeedOrder order = SeedOrder::Declared;
  std::string digest_source;
};

Input load_input(Context& ctx, const std::string& arg) {
  Input in;
  in.label = arg;
  if (arg.rfind(kCatalogPrefix, 0) == 0) {
    auto entry = find_catalog_entry(arg.substr(std::string(kCatalogPrefix).size()));
    Json doc = entry.table() ? to_json(*entry.table(), entry.kind == CatalogKind::PseudoEffectAlgebra
                                                          ? FileKind::PseudoEffectAlgebra
                                                          : FileKind::EffectAlgebra)
                             : to_json(entry.relfa());
    in.bytes = doc.dump(2);
    in.file = parse_structure(doc, ctx.order);
  } else {
    in.bytes = read_file(arg);
    try {
      in.file = parse_text(in.bytes, ctx.order);
    } catch (const InputError& e) {
      throw InputError(arg + ": " + e.what());
    }
  }
  ctx.digest_source += in.bytes;
  ctx.digest_source.push_back('\0');
  return in;
}

RelFA as_relfa(const StructureFile& s) {
  if (auto* t = s.table()) return to_relfa(*t);
  if (auto* f = s.relfa()) return *f;
  return nerve_to_algebra(*s.complex());
}

TruncatedEpsilonComplex as_complex(const StructureFile& s) {
  if (auto* x = s.complex()) return *x;
  return nerve(as_relfa(s)).complex;
}

PartialAlgebra as_table(const StructureFile& s) {
  if (auto* t = s.table()) return *t;
  if (auto* f = s.relfa())
    if (auto t = as_partial_algebra(*f)) return *t;
  throw InputError(s.name + ": expected an effect algebra table");
}

Json names(const std::vector<std::string>& labels, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(i >= 0 && i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i));
  return out;
}

std::vector<std::string> edge_names(const TruncatedEpsilonComplex& x) {
  std::vector<std::string> out;
  for (int e = 0; e < x.edge_count(); ++e) out.push_back(x.edge_name(e));
  return out;
}

std::string mark(bool v) { return v ? "✓" : "✗"; }

Json assignment_json(const TruncatedEpsilonComplex& from, const TruncatedEpsilonComplex& to,
                     const ComplexMorphism& m) {
  Json j;
  Json vs = Json::array(), es = Json::array();
  for (int v = 0; v < from.vertex_count(); ++v) vs.push_back({from.vertex_name(v), to.vertex_name(m.vertex_map[v])});
  for (int e = 0; e < from.edge_count(); ++e) es.push_back({from.edge_name(e), to.edge_name(m.edge_map[e])});
  j["vertices"] = vs;
  j["edges"] = es;
  return j;
}

ComplexMorphism assignment_from_json(const TruncatedEpsilonComplex& from, const TruncatedEpsilonComplex& to,
                                     const Json& j) {
  ComplexMorphism m;
  m.vertex_map.assign(from.vertex_count(), -1);
  m.edge_map.assign(from.edge_count(), -1);
  auto lookup = [](int idx, const std::string& what, const std::string& name) {
    if (idx < 0) throw InputError("boundary", "unknown " + what + " '" + name + "'");
    return idx;
  };
  try {
    for (const auto& p : j.at("vertices")) {
      auto a = p.at(0).get<std::string>(), b = p.at(1).get<std::string>();
      m.vertex_map[lookup(from.find_vertex(a), "shape vertex", a)] = lookup(to.find_vertex(b), "target vertex", b);
    }
    for (const auto& p : j.at("edges")) {
      auto a = p.at(0).get<std::string>(), b = p.at(1).get<std::string>();
      m.edge_map[lookup(from.find_edge(a), "shape edge", a)] = lookup(to.find_edge(b), "target edge", b);
    }
  } catch (const Json::exception& e) {
    throw InputError("boundary", e.what());
  }
  for (int v : m.vertex_map)
    if (v < 0) throw InputError("boundary", "incomplete vertex assignment");
  for (int e : m.edge_map)
    if (e < 0) throw InputError("boundary", "incomplete edge assignment");
  if (!is_morphism(from, to, m)) throw InputError("boundary", "assignment is not a map of complexes");
  return m;
}

Json lifting_certificate_json(const ShapeInclusion& shape, const TruncatedEpsilonComplex& target, LiftMode mode,
                              const LiftingCertificate& c) {
  Json j;
  j["type"] = "lifting";
  j["shape"] = shape.name;
  j["target"] = target.name;
  j["mode"] = to_string(mode);
  j["verdict"] = to_string(c.verdict);
  j["boundary"] = assignment_json(shape.domain, target, c.boundary);
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(assignment_json(shape.codomain, target, w));
  j["witnesses"] = ws;
  return j;
}

Json lifting_summary(const LiftingResult& r) {
  Json j;
  j["shape"] = r.shape;
  j["mode"] = to_string(r.mode);
  j["pass"] = r.pass;
  j["problems"] = r.problems;
  j["no_extension"] = r.none;
  j["unique_extension"] = r.unique;
  j["multiple_extensions"] = r.multiple;
  return j;
}

Json validation_json(const ValidationReport& rep, const std::vector<std::string>& labels) {
  Json j;
  j["kind"] = to_string(rep.kind);
  j["pass"] = rep.pass;
  auto list = [&](const std::vector<AxiomVerdict>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
      Json a;
      a["axiom"] = v.axiom;
      a["pass"] = v.pass;
      a["counterexample"] = names(labels, v.counterexample);
      out.push_back(a);
    }
    return out;
  };
  j["axioms"] = list(rep.axioms);
  j["derived"] = list(rep.derived);
  j["notes"] = rep.notes;
  return j;
}

void add_axiom_certificates(Report& r, const ValidationReport& rep, const std::vector<std::string>& labels) {
  for (const auto& v : rep.axioms) {
    if (v.pass) continue;
    Json c;
    c["type"] = "axiom";
    c["axiom"] = v.axiom;
    c["counterexample"] = names(labels, v.counterexample);
    r.certificates.push_back(c);
  }
}

void text_validation(Report& r, const ValidationReport& rep, const std::vector<std::string>& labels) {
  for (const auto& v : rep.axioms) {
    std::string line = "  " + mark(v.pass) + " " + v.axiom;
    if (!v.pass && !v.counterexample.empty()) line += " (counterexample: " + names(labels, v.counterexample).dump() + ")";
    r.text.push_back(line);
  }
  for (const auto& v : rep.derived) r.text.push_back("  " + mark(v.pass) + " " + v.axiom + " (consequence)");
  for (const auto& n : rep.notes) r.text.push_back("  note: " + n);
}

// ---------------------------------------------------------------------------

StructureKind default_kind(FileKind k) {
  switch (k) {
    case FileKind::EffectAlgebra: return StructureKind::EffectAlgebra;
    case FileKind::PseudoEffectAlgebra: return StructureKind::PseudoEffectAlgebra;
    default: return StructureKind::Frobenius;
  }
}

void cmd_validate(Report& r, Context& ctx, const std::string& path, const std::string& kind_text) {
  auto in = load_input(ctx, path);
  const auto& s = in.file;
  r.results["structure"] = s.name;
  r.results["file_kind"] = to_string(s.kind);
  bool nerve_check = kind_text == "nerve" || (kind_text.empty() && s.complex());
  if (nerve_check) {
    auto x = as_complex(s);
    auto rec = recognize_nerve_detailed(x);
    auto rep = rec.report();
    auto labels = edge_names(x);
    r.results["kind"] = "nerve";
    r.results["validation"] = validation_json(rep, labels);
    r.text.push_back(s.name + " as a nerve: " + (rep.pass ? "pass" : "fail"));
    text_validation(r, rep, labels);
    if (const auto* f = rec.first_failure(); f && f->result.failure) {
      auto shape = make_shape(f->result.shape);
      r.certificates.push_back(lifting_certificate_json(shape, x, f->result.mode, *f->result.failure));
    }
    r.exit_status = rep.pass ? kOk : kCheckFailed;
    return;
  }
  if (s.complex()) throw InputError(path, "a complex can only be validated as a nerve");
  StructureKind kind = kind_text.empty() ? default_kind(s.kind) : parse_structure_kind(kind_text);
  ValidationReport rep;
  std::vector<std::string> labels;
  if (auto* t = s.table()) {
    rep = validate(kind, *t);
    labels = t->elements;
  } else {
    rep = validate(kind, *s.relfa());
    labels = s.relfa()->elements;
  }
  r.results["kind"] = to_string(kind);
  r.results["validation"] = validation_json(rep, labels);
  r.text.push_back(s.name + " as " + std::string(to_string(kind)) + ": " + (rep.pass ? "pass" : "fail"));
  text_validation(r, rep, labels);
  add_axiom_certificates(r, rep, labels);
  r.exit_status = rep.pass ? kOk : kCheckFailed;
}

Json flag_json(const Flag& f, const std::vector<std::string>& labels) {
  Json j;
  j["value"] = f.value;
  j["witness"] = names(labels, f.witness);
  return j;
}

std::string flag_text(const std::string& name, const Flag& f, const std::vector<std::string>& labels) {
  std::string line = "  " + name + " " + mark(f.value);
  if (!f.value && !f.witness.empty()) {
    line += " (witness";
    for (size_t i = 0; i < f.witness.size(); ++i) {
      line += i == 0 ? " " : ", ";
      line += std::string(1, static_cast<char>('a' + i)) + "=" + labels.at(f.witness[i]);
    }
    line += ")";
  }
  return line;
}

void cmd_classify(Report& r, Context& ctx, const std::string& path) {
  auto in = load_input(ctx, path);
  const auto& s = in.file;
  RelFA f;
  try {
    f = as_relfa(s);
  } catch (const ContractError& e) {
    r.results["structure"] = s.name;
    r.results["frobenius"] = false;
    r.results["reason"] = e.what();
    r.text.push_back(s.name + ": not the nerve of a Frobenius algebra (" + e.what() + ")");
    r.exit_status = kCheckFailed;
    return;
  }
  auto rep = validate(StructureKind::Frobenius, f);
  r.results["structure"] = s.name;
  r.results["frobenius"] = rep.pass;
  if (!rep.pass) {
    r.text.push_back(s.name + ": not a Frobenius algebra");
    text_validation(r, rep, f.elements);
    add_axiom_certificates(r, rep, f.elements);
    r.exit_status = kCheckFailed;
    return;
  }
  auto flags = classify(f);
  const auto& labels = f.elements;
  Json j;
  j["commutative"] = flag_json(flags.commutative, labels);
  j["cancellative"] = flag_json(flags.cancellative, labels);
  j["epsilon_boxslash_is_eta"] = flag_json(flags.epsilon_boxslash_is_eta, labels);
  j["eta_singleton"] = flag_json(flags.eta_singleton, labels);
  j["effect_algebra"] = flag_json(flags.effect_algebra, labels);
  j["orthoalgebra"] = flags.orthoalgebra ? flag_json(*flags.orthoalgebra, labels) : Json(nullptr);
  j["orthomodular_poset"] = flags.orthomodular_poset ? flag_json(*flags.orthomodular_poset, labels) : Json(nullptr);
  j["braided"] = flag_json(flags.braided, labels);
  j["braided_left"] = flag_json(flags.braided_left, labels);
  j["braided_right"] = flag_json(flags.braided_right, labels);
  j["every_counit_boxslash_singleton"] = flags.every_counit_boxslash_singleton;
  r.results["flags"] = j;
  Json oracles;
  oracles["orthoalgebra"] = flags.orthoalgebra_oracle ? Json(*flags.orthoalgebra_oracle) : Json(nullptr);
  oracles["orthomodular_poset"] = flags.orthomodular_oracle ? Json(*flags.orthomodular_oracle) : Json(nullptr);
  r.results["oracles"] = oracles;

  Json rel = Json::array();
  for (auto [a, b] : boxslash_relation(f).pairs()) rel.push_back({labels[a], labels[b]});
  r.results["boxslash"] = rel;

  r.text.push_back(s.name + ":");
  r.text.push_back(flag_text("effect_algebra", flags.effect_algebra, labels));
  if (flags.orthoalgebra) r.text.push_back(flag_text("orthoalgebra", *flags.orthoalgebra, labels));
  if (flags.orthomodular_poset) r.text.push_back(flag_text("orthomodular_poset", *flags.orthomodular_poset, labels));
  r.text.push_back(flag_text("commutative", flags.commutative, labels));
  r.text.push_back(flag_text("cancellative", flags.cancellative, labels));
  r.text.push_back(flag_text("epsilon_boxslash_is_eta", flags.epsilon_boxslash_is_eta, labels));
  r.text.push_back(flag_text("eta_singleton", flags.eta_singleton, labels));
  r.text.push_back(flag_text("braided", flags.braided, labels));

  bool consistent = true;
  if (flags.orthoalgebra && flags.orthoalgebra_oracle)
    consistent = consistent && flags.orthoalgebra->value == *flags.orthoalgebra_oracle;
  if (flags.orthomodular_poset && flags.orthomodular_oracle)
    consistent = consistent && flags.orthomodular_poset->value == *flags.orthomodular_oracle;
  r.results["oracles_agree"] = consistent;
  if (!consistent) {
    r.text.push_back("  order-theoretic oracle disagrees with the flags");
    r.exit_status = kCheckFailed;
  }
}

void cmd_nerve(Report& r, Context& ctx, const std::string& path, const std::string& out_path) {
  auto in = load_input(ctx, path);
  auto x = as_complex(in.file);
  size_t nondeg = 0;
  for (const auto& t : x.triangles())
    if (!x.is_degenerate(t)) ++nondeg;
  auto rec = recognize_nerve_detailed(x, false);
  r.results["structure"] = in.file.name;
  r.results["vertices"] = x.vertex_count();
  r.results["edges"] = x.edge_count();
  r.results["marked"] = x.marked_edges().size();
  r.results["triangles"] = x.triangle_count();
  r.results["nondegenerate_triangles"] = nondeg;
  r.results["recognized"] = rec.pass;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError(out_path, "cannot write file");
    f << to_json(x).dump(2) << '\n';
    r.results["written"] = out_path;
  } else {
    r.results["complex"] = to_json(x);
  }
  r.text.push_back("nerve of " + in.file.name + ": " + std::to_string(x.vertex_count()) + " vertices, " +
                   std::to_string(x.edge_count()) + " edges (" + std::to_string(x.marked_edges().size()) +
                   " marked), " + std::to_string(x.triangle_count()) + " triangles (" + std::to_string(nondeg) +
                   " non-degenerate)");
  r.text.push_back(std::string("recognized as a nerve: ") + mark(rec.pass));
  if (!out_path.empty()) r.text.push_back("written to " + out_path);
  if (!rec.pass) {
    if (const auto* f = rec.first_failure(); f && f->result.failure)
      r.certificates.push_back(lifting_certificate_json(make_shape(f->result.shape), x, f->result.mode,
                                                        *f->result.failure));
    r.exit_status = kCheckFailed;
  }
}

Json group_json(const AbelianGroupPresentation& g) {
  Json j;
  j["group"] = g.to_string();
  j["rank"] = g.rank;
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(d.str());
  j["torsion"] = t;
  return j;
}

void cmd_homology(Report& r, Context& ctx, const std::string& path) {
  auto in = load_input(ctx, path);
  const auto& s = in.file;
  auto x = as_complex(s);
  auto normalized = h1(x, true);
  auto full = h1(x, false);
  r.results["structure"] = s.name;
  r.results["h1"] = group_json(normalized);
  r.results["unnormalized_agrees"] = normalized == full;
  bool ok = normalized == full;
  if (auto* t = s.table()) {
    auto direct = direct_presentation(*t);
    r.results["direct_presentation"] = group_json(direct);
    r.results["direct_agrees"] = direct == normalized;
    ok = ok && direct == normalized;
    r.text.push_back("universal group: " + normalized.to_string());
    r.text.push_back("direct presentation: " + direct.to_string() + " " + mark(direct == normalized));
  } else {
    r.text.push_back("H1: " + normalized.to_string());
  }
  if (!ok) r.exit_status = kCheckFailed;
}

std::string describe_component(const PartialAlgebra& c, const std::vector<CatalogEntry>& catalog) {
  if (c.size() == 1) return "trivial";
  auto key = canonical_table(c);
  for (const auto& e : catalog)
    if (e.table() && e.table()->size() == c.size() && is_valid_effect_algebra(*e.table()) &&
        canonical_table(*e.table()) == key)
      return e.name;
  return c.name;
}

std::string morphism_label(const PartialAlgebra& e, const PartialAlgebra& f, const PMMorphism& h, size_t index) {
  bool zero = true, identity = e.elements == f.elements;
  for (int a = 0; a < e.size(); ++a) {
    zero = zero && h.map[a] == f.zero;
    identity = identity && h.map[a] == a;
  }
  if (identity) return "identity";
  if (zero) return "zero";
  return "h" + std::to_string(index);
}

void cmd_hom(Report& r, Context& ctx, const std::string& e_path, const std::string& f_path) {
  auto ein = load_input(ctx, e_path);
  auto fin = load_input(ctx, f_path);
  auto e = as_table(ein.file);
  auto f = as_table(fin.file);
  if (!is_valid_effect_algebra(e)) throw InputError(e_path, "not an effect algebra");
  if (!is_valid_effect_algebra(f)) throw InputError(f_path, "not an effect algebra");
  auto hom = hom_object_ea(e, f);
  auto catalog = builtin_catalog();
  Json comps = Json::array();
  Json summary = Json::object();
  r.text.push_back("partial monoid morphisms " + e.name + " -> " + f.name + ": " +
                   std::to_string(hom.morphisms.size()));
  for (size_t i = 0; i < hom.morphisms.size(); ++i) {
    const auto& h = hom.morphisms[i];
    auto label = morphism_label(e, f, h, i);
    auto desc = describe_component(hom.components[i], catalog);
    Json c;
    c["morphism"] = label;
    Json map = Json::object();
    for (int a = 0; a < e.size(); ++a) map[e.elements[a]] = f.elements[h.map[a]];
    c["map"] = map;
    c["component"] = desc;
    c["size"] = hom.components[i].size();
    comps.push_back(c);
    summary[label] = desc;
    r.text.push_back("  " + label + ": " + desc + " (" + std::to_string(hom.components[i].size()) + (hom.components[i].size() == 1 ? " element)" : " elements)"));
  }
  r.results["E"] = e.name;
  r.results["F"] = f.name;
  r.results["components"] = comps;
  r.results["summary"] = summary;

  auto th = verify_mapping_theorem(e, f);
  Json t;
  t["holds"] = th.holds;
  t["vertices"] = {th.vertices[0], th.vertices[1]};
  t["edges"] = {th.edges[0], th.edges[1]};
  t["marked"] = {th.marked[0], th.marked[1]};
  t["triangles"] = {th.triangles[0], th.triangles[1]};
  r.results["mapping_theorem"] = t;
  r.text.push_back(std::string("N(hom) ≅ [N E, N F]: ") + mark(th.holds) + " (" + std::to_string(th.vertices[1]) +
                   " vertices, " + std::to_string(th.edges[1]) + " edges, " + std::to_string(th.marked[1]) +
                   " marked, " + std::to_string(th.triangles[1]) + " triangles)");
  if (!th.holds) r.exit_status = kCheckFailed;
}

void cmd_kan(Report& r, Context& ctx, const std::string& e_path, const std::string& f_path) {
  auto ein = load_input(ctx, e_path);
  auto fin = load_input(ctx, f_path);
  auto e = as_table(ein.file);
  auto f = as_table(fin.file);
  if (!is_valid_effect_algebra(e)) throw InputError(e_path, "not an effect algebra");
  if (!is_valid_effect_algebra(f)) throw InputError(f_path, "not an effect algebra");
  std::vector<LiftingResult> details;
  auto rep = eval_fibration_check(e, f, &details);
  r.results["E"] = e.name;
  r.results["F"] = f.name;
  r.results["pass"] = rep.pass;
  Json checks = Json::array();
  for (const auto& d : details) checks.push_back(lifting_summary(d));
  r.results["checks"] = checks;
  r.text.push_back("evaluation map [N " + e.name + ", N " + f.name + "] -> [N chain(1), N " + f.name +
                   "]: " + (rep.pass ? "minimal Kan fibration" : "not a minimal Kan fibration"));
  for (const auto& d : details)
    r.text.push_back("  " + mark(d.pass) + " unique " + d.shape + " (" + std::to_string(d.problems) + " problems)");
  for (const auto& d : details) {
    if (d.pass || !d.failure) continue;
    Json c;
    c["type"] = "relative-lifting";
    c["shape"] = d.shape;
    c["verdict"] = to_string(d.failure->verdict);
    c["top"] = d.failure->boundary.edge_map;
    c["base"] = d.failure->base.edge_map;
    r.certificates.push_back(c);
  }
  if (!rep.pass) r.exit_status = kCheckFailed;
}

const Json* find_boundary(const Json& doc) {
  if (doc.is_object() && doc.contains("boundary")) return &doc;
  if (doc.is_object() && doc.contains("certificates"))
    for (const auto& c : doc["certificates"])
      if (c.is_object() && c.contains("boundary")) return &c;
  return nullptr;
}

void cmd_lift(Report& r, Context& ctx, const std::string& shape_name, const std::string& path, bool unique,
              const std::string& boundary_path) {
  auto shape = make_shape(shape_name);
  auto in = load_input(ctx, path);
  auto x = as_complex(in.file);
  LiftMode mode = unique ? LiftMode::Unique : LiftMode::Exists;
  r.results["shape"] = shape.name;
  r.results["target"] = in.file.name;
  if (!boundary_path.empty()) {
    auto text = read_file(boundary_path);
    ctx.digest_source += text;
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(boundary_path, e.what());
    }
    const Json* cert = find_boundary(doc);
    if (!cert) throw InputError(boundary_path, "no boundary assignment found");
    auto b = assignment_from_json(shape.domain, x, (*cert)["boundary"]);
    auto c = solve_lifting_problem(shape, x, b);
    bool pass = mode == LiftMode::Exists ? c.verdict != LiftVerdict::NoExtension
                                         : c.verdict == LiftVerdict::UniqueExtension;
    r.results["mode"] = to_string(mode);
    r.results["pass"] = pass;
    r.results["verdict"] = to_string(c.verdict);
    r.certificates.push_back(lifting_certificate_json(shape, x, mode, c));
    r.text.push_back(shape.name + " against " + in.file.name + " at the given boundary: " +
                     std::string(to_string(c.verdict)) + " " + mark(pass));
    r.exit_status = pass ? kOk : kCheckFailed;
    return;
  }
  auto res = check_lifting(shape, x, mode);
  auto summary = lifting_summary(res);
  for (auto it = summary.begin(); it != summary.end(); ++it) r.results[it.key()] = it.value();
  r.text.push_back(shape.name + " against " + in.file.name + " (" + std::string(to_string(mode)) + "): " +
                   mark(res.pass));
  r.text.push_back("  " + std::to_string(res.problems) + " boundary maps: " + std::to_string(res.none) + " none, " +
                   std::to_string(res.unique) + " unique, " + std::to_string(res.multiple) + " multiple");
  if (res.failure) {
    r.certificates.push_back(lifting_certificate_json(shape, x, mode, *res.failure));
    r.text.push_back("  first failure: " + std::string(to_string(res.failure->verdict)));
  }
  r.exit_status = res.pass ? kOk : kCheckFailed;
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

void cmd_enumerate(Report& r, int size, const std::string& kind_text, const std::string& emit_dir) {
  auto kind = parse_enum_kind(kind_text);
  std::vector<Json> docs;
  std::vector<std::string> labels;
  if (kind == EnumKind::Frobenius) {
    for (const auto& f : enumerate_frobenius(size)) {
      docs.push_back(to_json(f));
      labels.push_back(f.name);
    }
  } else {
    auto fk = kind == EnumKind::EffectAlgebra ? FileKind::EffectAlgebra : FileKind::PseudoEffectAlgebra;
    for (const auto& t : enumerate_tables(size, kind)) {
      docs.push_back(to_json(t, fk));
      labels.push_back(t.name);
    }
  }
  r.results["kind"] = to_string(kind);
  r.results["size"] = size;
  r.results["count"] = docs.size();
  r.results["structures"] = labels;
  r.text.push_back(std::to_string(docs.size()) + " " + std::string(to_string(kind)) + " structures of size " +
                   std::to_string(size));
  for (const auto& l : labels) r.text.push_back("  " + l);
  if (!emit_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(emit_dir, ec);
    Json files = Json::array();
    for (size_t i = 0; i < docs.size(); ++i) {
      auto file = (std::filesystem::path(emit_dir) / (file_stem(labels[i]) + ".json")).string();
      std::ofstream out(file, std::ios::binary);
      if (!out) throw InputError(file, "cannot write file");
      out << docs[i].dump(2) << '\n';
      files.push_back(file);
    }
    r.results["emitted"] = files;
    r.text.push_back("emitted " + std::to_string(docs.size()) + " files to " + emit_dir);
  }
}

Json entry_document(const CatalogEntry& e) {
  switch (e.kind) {
    case CatalogKind::EffectAlgebra: return to_json(*e.table(), FileKind::EffectAlgebra);
    case CatalogKind::PseudoEffectAlgebra: return to_json(*e.table(), FileKind::PseudoEffectAlgebra);
    case CatalogKind::RelFA: return to_json(e.relfa());
  }
  return {};
}

std::string_view catalog_kind_name(CatalogKind k) {
  switch (k) {
    case CatalogKind::EffectAlgebra: return "effect_algebra";
    case CatalogKind::PseudoEffectAlgebra: return "pseudo_effect_algebra";
    case CatalogKind::RelFA: return "relfa";
  }
  return "?";
}

std::vector<std::string> table_text(const PartialAlgebra& e) {
  std::vector<std::string> lines;
  size_t w = 1;
  for (const auto& n : e.elements) w = std::max(w, n.size());
  auto cell = [&](const std::string& s) { return s + std::string(w + 1 - s.size(), ' '); };
  std::string head = cell("+") + "| ";
  for (const auto& n : e.elements) head += cell(n);
  lines.push_back(head);
  for (int a = 0; a < e.size(); ++a) {
    std::string row = cell(e.elements[a]) + "| ";
    for (int b = 0; b < e.size(); ++b) row += cell(e.defined(a, b) ? e.elements[e.sum(a, b)] : ".");
    lines.push_back(row);
  }
  return lines;
}

void cmd_catalog(Report& r, Context& ctx, const std::string& action, const std::string& name,
                 const std::string& out_path) {
  if (action == "list") {
    Json list = Json::array();
    auto entries = builtin_catalog();
    for (const auto& e : entries) {
      Json j;
      j["name"] = e.name;
      j["kind"] = catalog_kind_name(e.kind);
      j["size"] = e.table() ? e.table()->size() : e.relfa().size();
      list.push_back(j);
      r.text.push_back(e.name + " (" + std::string(catalog_kind_name(e.kind)) + ", " +
                       std::to_string(j["size"].get<int>()) + " elements)");
      ctx.digest_source += e.name + '\0';
    }
    r.results["entries"] = list;
    r.results["count"] = entries.size();
    return;
  }
  if (action != "show" && action != "export") throw InputError("catalog", "unknown action '" + action + "'");
  if (name.empty()) throw InputError("catalog", "missing entry name");
  auto entry = find_catalog_entry(name);
  auto doc = entry_document(entry);
  ctx.digest_source += doc.dump(2);
  if (action == "show") {
    r.results["entry"] = doc;
    r.text.push_back(entry.name + " (" + std::string(catalog_kind_name(entry.kind)) + ")");
    if (entry.table()) {
      for (auto& l : table_text(*entry.table())) r.text.push_back(l);
    } else {
      auto f = entry.relfa();
      r.text.push_back("elements: " + Json(f.elements).dump());
      r.text.push_back("mu triples: " + std::to_string(f.mu.count()));
    }
    return;
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError(out_path, "cannot write file");
    f << doc.dump(2) << '\n';
    r.results["written"] = out_path;
    r.text.push_back("exported " + entry.name + " to " + out_path);
  } else {
    r.results["document"] = doc;
    r.text.push_back(doc.dump(2));
  }
  // Round trip: the exported document re-parses to the same structure.
  auto back = parse_structure(doc);
  bool same = to_json(back).dump() == doc.dump();
  r.results["round_trip"] = same;
  if (!same) r.exit_status = kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius algebras in Rel and their nerves", "fa"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  std::string seed_order = "declared";
  app.add_flag("--json", ctx.json, "emit the structured report as JSON");
  app.add_option("--seed-order", seed_order, "element order: declared or sorted")
      ->check(CLI::IsMember({"declared", "sorted"}));
  app.set_version_flag("--version", kVersion);

  std::string file, file2, kind, out_file, shape, boundary_file, action, name, emit;
  bool unique = false;
  int size = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a structure");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--kind", kind, "effect-algebra, pseudo-effect-algebra, frobenius, rel-monoid or nerve");
  auto* classify_cmd = app.add_subcommand("classify", "classification flags with witnesses");
  classify_cmd->add_option("file", file)->required();
  auto* nerve_cmd = app.add_subcommand("nerve", "build the nerve");
  nerve_cmd->add_option("file", file)->required();
  nerve_cmd->add_option("--out", out_file);
  auto* homology_cmd = app.add_subcommand("homology", "first homology / universal group");
  homology_cmd->add_option("file", file)->required();
  auto* hom_cmd = app.add_subcommand("hom", "hom object and the mapping theorem");
  hom_cmd->add_option("E", file)->required();
  hom_cmd->add_option("F", file2)->required();
  auto* kan_cmd = app.add_subcommand("kan", "evaluation fibration check");
  kan_cmd->add_option("E", file)->required();
  kan_cmd->add_option("F", file2)->required();
  auto* lift_cmd = app.add_subcommand("lift", "lifting property of a shape against a complex");
  lift_cmd->add_option("shape", shape)->required();
  lift_cmd->add_option("file", file)->required();
  lift_cmd->add_flag("--unique", unique);
  lift_cmd->add_option("--boundary", boundary_file, "certificate with a boundary assignment");
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate small structures up to isomorphism");
  enum_cmd->add_option("--size", size)->required();
  enum_cmd->add_option("--kind", kind)->required();
  enum_cmd->add_option("--emit", emit);
  auto* catalog_cmd = app.add_subcommand("catalog", "built-in structures");
  catalog_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "show", "export"}));
  catalog_cmd->add_option("name", name);
  catalog_cmd->add_option("--out", out_file);

  std::vector<std::string> argv_store{"fa"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  Report report;
  report.command = "fa";
  for (const auto& a : args) report.command += " " + a;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  ctx.order = seed_order == "sorted" ? SeedOrder::Sorted : SeedOrder::Declared;

  try {
    if (validate_cmd->parsed()) cmd_validate(report, ctx, file, kind);
    else if (classify_cmd->parsed()) cmd_classify(report, ctx, file);
    else if (nerve_cmd->parsed()) cmd_nerve(report, ctx, file, out_file);
    else if (homology_cmd->parsed()) cmd_homology(report, ctx, file);
    else if (hom_cmd->parsed()) cmd_hom(report, ctx, file, file2);
    else if (kan_cmd->parsed()) cmd_kan(report, ctx, file, file2);
    else if (lift_cmd->parsed()) cmd_lift(report, ctx, shape, file, unique, boundary_file);
    else if (enum_cmd->parsed()) cmd_enumerate(report, size, kind, emit);
    else if (catalog_cmd->parsed()) cmd_catalog(report, ctx, action, name, out_file);
  } catch (const InputError& e) {
    report.results = Json::object();
    report.results["error"] = e.what();
    if (!e.location().empty()) report.results["location"] = e.location();
    report.certificates = Json::array();
    report.text = {std::string("error: ") + e.what()};
    report.exit_status = kInputError;
  } catch (const ContractError& e) {
    report.results = Json::object();
    report.results["error"] = e.what();
    report.certificates = Json::array();
    report.text = {std::string("error: ") + e.what()};
    report.exit_status = kInputError;
  }
  if (ctx.digest_source.empty()) ctx.digest_source = report.command;
  report.input_digest = "sha256:" + sha256_hex(ctx.digest_source);

  if (ctx.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    auto& stream = report.exit_status == kInputError ? err : out;
    for (const auto& line : report.text) stream << line << '\n';
  }
  return report.exit_status;
}

}  // namespace fa::cli
