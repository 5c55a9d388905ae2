#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessinator/perm.hpp"
#include "dessinator/perm_group.hpp"

namespace dessinator {

// A finite object in one of the four supported permutational categories,
// given by a tuple of monodromy generators acting on {1..n} on the right.
//
//   Dessin       (x, y)        no relations
//   OrientedMap  (x, y)        y^2 = 1
//   Hypermap     (r0, r1, r2)  ri^2 = 1
//   Map          (r0, r1, r2)  ri^2 = 1 and (r2 r0)^2 = 1
enum class Category { Dessin, OrientedMap, Hypermap, Map };

int generator_arity(Category c);
bool is_oriented(Category c);
std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);
std::vector<std::string> generator_names(Category c);

// A relator word over the generators: letters are signed 1-based generator
// indices, negative for inverses, applied left to right.
struct RelatorWord {
  std::string name;
  std::vector<int> letters;
};
const std::vector<RelatorWord>& category_relations(Category c);

class PCObject {
 public:
  PCObject(Category category, std::vector<Perm> gens);

  Category category() const { return category_; }
  int degree() const { return gens_[0].degree(); }
  const std::vector<Perm>& gens() const { return gens_; }
  const Perm& gen(int i) const { return gens_[i]; }

  const Perm& x() const;
  const Perm& y() const;
  const Perm& r0() const;
  const Perm& r1() const;
  const Perm& r2() const;

  friend bool operator==(const PCObject&, const PCObject&) = default;

 private:
  Category category_;
  std::vector<Perm> gens_;
};

Perm evaluate_word(const PCObject& obj, const std::vector<int>& letters);

struct RelationViolation {
  std::string relator;
  int witness;  // smallest moved point
};
std::vector<RelationViolation> validate(const PCObject& obj);
bool is_valid(const PCObject& obj);

// Optional (p, q, r) restriction: x^p = y^q = z^r = 1 with z = (xy)^-1 for
// oriented objects, and the corresponding dihedral words for unoriented
// ones. An entry of 0 leaves that order unconstrained.
std::vector<RelationViolation> validate_type_overlay(const PCObject& obj, int p, int q, int r);

bool is_connected(const PCObject& obj);
std::optional<PermGroupEnum> monodromy_group(const PCObject& obj,
                                             std::int64_t cap = kDefaultClosureCap);
std::optional<std::int64_t> monodromy_order(const PCObject& obj,
                                            std::int64_t cap = kDefaultClosureCap);

// Reinterprets an oriented map as a dessin on the same points (the map's
// relation y^2 = 1 is simply forgotten).
PCObject oriented_map_as_dessin(const PCObject& obj);

// Doubles an oriented object into its unoriented flag object on 2n points:
// point w keeps its label on the + copy and becomes w+n on the - copy.
//   r2: (w, e) -> (w, -e)
//   r1: (w, +) -> (w x, -),  (w, -) -> (w x^-1, +)
//   r0: (w, +) -> (w y, -),  (w, -) -> (w y^-1, +)
PCObject flag_double(const PCObject& obj);

// Text format: "category:", "degree:", then one line per generator in cycle
// notation ("x:", "y:" or "r0:", "r1:", "r2:"). '#' starts a comment.
PCObject read_object(std::string_view text);
std::string write_object(const PCObject& obj);

// Bipartite graph of a dessin in DOT format: one white node per cycle of x,
// one black node per cycle of y, one edge per point.
std::string walsh_dot(const PCObject& obj);

PCObject disjoint_union(const std::vector<PCObject>& parts);

}  // namespace dessinator
