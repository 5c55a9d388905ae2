#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dessinator/autgroup.hpp"
#include "dessinator/objects.hpp"

namespace dessinator {

struct TypeTriple {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

// Orders of x, y and z = (xy)^-1 for an oriented object.
TypeTriple type_of(const PCObject& obj);

struct EulerGenus {
  int chi = 0;
  std::optional<int> genus;  // set when the object is connected
};

// chi = cycles(x) + cycles(y) + cycles(z) - degree, counting fixed points;
// genus = (2 - chi) / 2 for connected objects.
EulerGenus euler_genus(const PCObject& obj, bool require_connected = true);

// A connected object with primitive monodromy either has prime degree p with
// monodromy C_p acting regularly (so its automorphism group is that same
// C_p), or has a trivial automorphism group.
enum class PrimitivityClass { CyclicPrimeRegular, TrivialAut, NotPrimitive };
std::string_view primitivity_class_name(PrimitivityClass c);

struct PrimitivityReport {
  bool primitive = false;
  std::int64_t aut_order = 0;
  PrimitivityClass classification = PrimitivityClass::NotPrimitive;
  std::optional<std::int64_t> prime;  // set for CyclicPrimeRegular
};

PrimitivityReport primitivity_report(const PCObject& obj);

// The regular object covering obj: the monodromy group acting on itself by
// right multiplication, with points labelled by closure discovery order.
// std::nullopt when the group order exceeds cap.
std::optional<PCObject> regular_cover(const PCObject& obj,
                                      std::int64_t cap = kDefaultClosureCap);

}  // namespace dessinator
