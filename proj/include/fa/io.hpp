#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "fa/algebra.hpp"
#include "fa/complex.hpp"

namespace fa {

using Json = nlohmann::ordered_json;

enum class FileKind { EffectAlgebra, PseudoEffectAlgebra, RelFA, Complex };

std::string_view to_string(FileKind kind);

enum class SeedOrder { Declared, Sorted };

/// One structure per JSON document.
///
///   effect_algebra / pseudo_effect_algebra:
///     {"kind", "name", "elements", "zero", "one", "sum": [[a, b, a+b], ...]}
///   relfa:
///     {"kind", "name", "elements", "mu": [[x, y, z]], "delta": [[z, x, y]],
///      "eta": [...], "epsilon": [...]}          (delta optional: derived)
///   complex:
///     {"kind", "name", "vertices": [...], "identities": {vertex: edge},
///      "edges": [[name, source, target], ...], "marked": [...],
///      "triangles": [[d0, d1, d2], ...]}        (identities optional)
struct StructureFile {
  FileKind kind = FileKind::EffectAlgebra;
  std::string name;
  std::variant<PartialAlgebra, RelFA, TruncatedEpsilonComplex> structure;
  std::vector<std::string> notes;

  const PartialAlgebra* table() const { return std::get_if<PartialAlgebra>(&structure); }
  const RelFA* relfa() const { return std::get_if<RelFA>(&structure); }
  const TruncatedEpsilonComplex* complex() const { return std::get_if<TruncatedEpsilonComplex>(&structure); }
};

/// Throws InputError whose location is a JSON pointer (or "line N" for syntax errors).
StructureFile parse_structure(const Json& doc, SeedOrder order = SeedOrder::Declared);
StructureFile parse_text(const std::string& text, SeedOrder order = SeedOrder::Declared);
StructureFile parse_input(const std::string& path, SeedOrder order = SeedOrder::Declared);

Json to_json(const PartialAlgebra& e, FileKind kind);
Json to_json(const RelFA& f);
Json to_json(const TruncatedEpsilonComplex& x);
Json to_json(const StructureFile& s);

std::string read_file(const std::string& path);  // throws InputError

}  // namespace fa
