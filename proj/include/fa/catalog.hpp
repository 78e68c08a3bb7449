#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fa/algebra.hpp"

namespace fa {

/// Interval [0, n] in Z. chain(0) is the one-element algebra.
PartialAlgebra chain(int n);

/// Interval [0, (1,...,1)] in Z^k; elements are bitstrings.
PartialAlgebra boolean(int k);

/// Interval [0, u] in Z^k with coordinatewise sum; elements are "(v1,...,vk)".
PartialAlgebra zk_interval(const std::vector<int>& u);

/// Same table with new element names (same order).
PartialAlgebra renamed(const PartialAlgebra& e, std::string name, std::vector<std::string> elements);

/// Glues A and B along 0 and 1. Names other than 0, 1 must be disjoint.
PartialAlgebra horizontal_sum(const PartialAlgebra& a, const PartialAlgebra& b);

/// Coordinatewise sum on A x B; elements are "(x,y)".
PartialAlgebra direct_product(const PartialAlgebra& a, const PartialAlgebra& b);

struct GroupTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<int> mul;  // n*n
  int identity = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int operator()(int a, int b) const { return mul[static_cast<size_t>(a) * size() + b]; }
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group3();

/// Throws InputError unless T is associative with two-sided identity and inverses.
void check_group(const GroupTable& t);

/// μ = graph of the multiplication, η = ε = {identity}, δ: c ↦ (a, b) iff ab = c.
RelFA group_algebra(const GroupTable& t);

enum class CatalogKind { EffectAlgebra, PseudoEffectAlgebra, RelFA };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::variant<PartialAlgebra, RelFA> structure;

  const PartialAlgebra* table() const { return std::get_if<PartialAlgebra>(&structure); }
  RelFA relfa() const;  // to_relfa for table kinds
};

/// Built-in entries followed by the fixtures found in `fixture_dir` (sorted by file name).
std::vector<CatalogEntry> builtin_catalog(const std::string& fixture_dir);
std::vector<CatalogEntry> builtin_catalog();  // uses the configured catalog directory

const std::string& default_catalog_dir();

/// Looks up an entry by name; throws InputError listing nothing on miss.
CatalogEntry find_catalog_entry(const std::string& name);

/// Parses a catalog name such as "chain(3)", "boolean(2)", "zk_interval(2,1)",
/// "group_algebra(Z/4)" without consulting the list.
CatalogEntry construct_catalog(const std::string& name);

}  // namespace fa
