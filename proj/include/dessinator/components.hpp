#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dessinator/autgroup.hpp"
#include "dessinator/objects.hpp"

namespace dessinator {

struct Component {
  std::vector<int> points;  // original labels, ascending; points[i] <-> local i+1
  PCObject object;          // relabelled to 1..points.size()
};

struct IsoClass {
  std::vector<int> members;        // component indices, ascending
  std::vector<Perm> iso_from_rep;  // local bijections representative -> member
  std::int64_t aut_order = 0;      // of one (hence any) member
};

// The automorphism group of a disjoint union is a product of wreath products:
// per isomorphism class, the component group to the power of the class size,
// extended by all permutations of the class members.
struct ComponentReport {
  std::vector<Component> components;  // ordered by smallest original point
  std::vector<IsoClass> classes;      // ordered by first appearance
  std::int64_t total_aut_order = 0;
};

ComponentReport decompose(const PCObject& obj);

// Explicit generators of the full automorphism group on the original points:
// embedded component automorphisms plus adjacent swaps of isomorphic
// components. Their closure has order total_aut_order.
std::vector<Perm> wreath_generators(const PCObject& obj, const ComponentReport& report);

// Symbolic entry of a component multiset: one isomorphism class with its
// automorphism-group size and how often the component repeats.
struct CardinalitySummand {
  std::optional<std::int64_t> aut_order;     // nullopt = countably infinite group
  std::optional<std::int64_t> multiplicity;  // nullopt = infinitely many copies
};

struct Cardinality {
  enum class Kind { Finite, CountablyInfinite, Uncountable };
  Kind kind = Kind::Finite;
  std::optional<std::int64_t> order;  // set iff kind == Finite
};

std::string_view cardinality_name(Cardinality::Kind kind);

// Decision procedure for |Aut| of a countable disjoint union: uncountable as
// soon as some class repeats infinitely often (full symmetric group on the
// copies), countably infinite when a component group is, finite otherwise
// with the product formula.
Cardinality classify_cardinality(const std::vector<CardinalitySummand>& summary);

}  // namespace dessinator
