#include "dessinator/invariants.hpp"

#include "dessinator/numeric.hpp"

namespace dessinator {

TypeTriple type_of(const PCObject& obj) {
  if (!is_oriented(obj.category())) throw error("type_of expects an oriented object");
  Perm z = compose(obj.x(), obj.y()).inverse();
  return {obj.x().order(), obj.y().order(), z.order()};
}

EulerGenus euler_genus(const PCObject& obj, bool require_connected) {
  if (!is_oriented(obj.category())) throw error("euler_genus expects an oriented object");
  bool connected = is_connected(obj);
  if (require_connected && !connected) throw error("euler_genus requires a connected object");

  Perm z = compose(obj.x(), obj.y()).inverse();
  int chi = obj.x().cycle_count() + obj.y().cycle_count() + z.cycle_count() - obj.degree();
  if (chi % 2 != 0) throw error("odd Euler characteristic");

  EulerGenus out;
  out.chi = chi;
  if (connected) {
    int genus = (2 - chi) / 2;
    if (genus < 0) throw error("negative genus");
    out.genus = genus;
  }
  return out;
}

std::string_view primitivity_class_name(PrimitivityClass c) {
  switch (c) {
    case PrimitivityClass::CyclicPrimeRegular: return "cyclic-prime-regular";
    case PrimitivityClass::TrivialAut: return "trivial-aut";
    case PrimitivityClass::NotPrimitive: return "not-primitive";
  }
  throw error("unknown primitivity class");
}

PrimitivityReport primitivity_report(const PCObject& obj) {
  if (!is_connected(obj)) throw error("primitivity_report requires a connected object");

  PrimitivityReport report;
  report.primitive = is_primitive(obj.degree(), obj.gens());
  report.aut_order = compute_aut(obj, 1).order;
  if (!report.primitive) {
    report.classification = PrimitivityClass::NotPrimitive;
    return report;
  }
  if (report.aut_order == 1) {
    report.classification = PrimitivityClass::TrivialAut;
    return report;
  }
  // the dichotomy for primitive monodromy leaves only the regular prime case
  if (report.aut_order != obj.degree() || !is_prime(obj.degree())) {
    throw error("primitive object violates the automorphism dichotomy");
  }
  report.classification = PrimitivityClass::CyclicPrimeRegular;
  report.prime = obj.degree();
  return report;
}

std::optional<PCObject> regular_cover(const PCObject& obj, std::int64_t cap) {
  auto group = monodromy_group(obj, cap);
  if (!group) return std::nullopt;

  const std::int64_t m = group->order();
  std::vector<Perm> gens;
  for (const Perm& g : obj.gens()) {
    std::vector<int> images(m);
    for (std::int64_t i = 0; i < m; ++i) {
      int target = group->index_of(compose(group->elements()[i], g));
      if (target < 0) throw error("closure is not multiplication-closed");
      images[i] = target + 1;
    }
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PCObject(obj.category(), std::move(gens));
}

}  // namespace dessinator
