#include "dessinator/components.hpp"

#include <algorithm>
#include <unordered_map>

#include "dessinator/error.hpp"
#include "dessinator/numeric.hpp"

namespace dessinator {
namespace {

// Restrict obj to one orbit, relabelling points[i] -> i+1.
PCObject restrict_to(const PCObject& obj, const std::vector<int>& points) {
  std::unordered_map<int, int> local;
  local.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i) + 1;
  std::vector<Perm> gens;
  gens.reserve(obj.gens().size());
  for (const Perm& g : obj.gens()) {
    std::vector<int> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) images[i] = local.at(g(points[i]));
    gens.push_back(Perm::from_images(images));
  }
  return PCObject(obj.category(), gens);
}

}  // namespace

ComponentReport decompose(const PCObject& obj) {
  ComponentReport report;
  for (const std::vector<int>& orbit_points : orbits(obj.degree(), obj.gens())) {
    report.components.push_back({orbit_points, restrict_to(obj, orbit_points)});
  }

  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const PCObject& candidate = report.components[c].object;
    bool placed = false;
    for (IsoClass& cls : report.classes) {
      const PCObject& rep = report.components[cls.members.front()].object;
      if (std::optional<Perm> iso = isomorphism(rep, candidate)) {
        cls.members.push_back(static_cast<int>(c));
        cls.iso_from_rep.push_back(std::move(*iso));
        placed = true;
        break;
      }
    }
    if (!placed) {
      IsoClass cls;
      cls.members.push_back(static_cast<int>(c));
      cls.iso_from_rep.push_back(Perm(candidate.degree()));
      cls.aut_order = compute_aut(candidate).order;
      report.classes.push_back(std::move(cls));
    }
  }

  std::int64_t total = 1;
  for (const IsoClass& cls : report.classes) {
    const auto m = static_cast<std::int64_t>(cls.members.size());
    total = checked_mul(total, checked_pow(cls.aut_order, m));
    total = checked_mul(total, factorial(m));
  }
  report.total_aut_order = total;
  return report;
}

std::vector<Perm> wreath_generators(const PCObject& obj, const ComponentReport& report) {
  const int n = obj.degree();
  std::vector<Perm> gens;

  auto embed = [&](const Component& comp, const Perm& local) {
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = i;
    for (std::size_t i = 0; i < comp.points.size(); ++i)
      images[comp.points[i] - 1] = comp.points[local(static_cast<int>(i) + 1) - 1];
    return Perm::from_images(images);
  };

  for (const IsoClass& cls : report.classes) {
    const Component& rep = report.components[cls.members.front()];
    const AutGroup rep_aut = compute_aut(rep.object);

    // Base: every member carries a copy of the representative's group,
    // transported along the stored isomorphism.
    for (std::size_t t = 0; t < cls.members.size(); ++t) {
      const Component& comp = report.components[cls.members[t]];
      for (const Perm& a : rep_aut.generating_set) {
        Perm g = embed(comp, conjugate(a, cls.iso_from_rep[t]));
        if (!g.is_identity()) gens.push_back(std::move(g));
      }
    }

    // Top: adjacent transpositions of the class members, matched up through
    // the representative so each swap really commutes with the action.
    for (std::size_t t = 0; t + 1 < cls.members.size(); ++t) {
      const Component& a = report.components[cls.members[t]];
      const Component& b = report.components[cls.members[t + 1]];
      const Perm forward = compose(cls.iso_from_rep[t].inverse(), cls.iso_from_rep[t + 1]);
      const Perm backward = forward.inverse();
      std::vector<int> images(n);
      for (int i = 1; i <= n; ++i) images[i - 1] = i;
      for (std::size_t i = 0; i < a.points.size(); ++i) {
        images[a.points[i] - 1] = b.points[forward(static_cast<int>(i) + 1) - 1];
        images[b.points[i] - 1] = a.points[backward(static_cast<int>(i) + 1) - 1];
      }
      gens.push_back(Perm::from_images(images));
    }
  }
  return gens;
}

std::string_view cardinality_name(Cardinality::Kind kind) {
  switch (kind) {
    case Cardinality::Kind::Finite: return "finite";
    case Cardinality::Kind::CountablyInfinite: return "aleph0";
    case Cardinality::Kind::Uncountable: return "uncountable";
  }
  throw error("unknown cardinality kind");
}

Cardinality classify_cardinality(const std::vector<CardinalitySummand>& summary) {
  for (const CardinalitySummand& s : summary) {
    if (s.aut_order && *s.aut_order < 1) throw error("component automorphism order must be positive");
    if (s.multiplicity && *s.multiplicity < 1) throw error("component multiplicity must be positive");
  }

  // An infinite class contributes the full symmetric group on its copies,
  // which is already uncountable; with finitely many summands this is the
  // only route to infinitely many components.
  for (const CardinalitySummand& s : summary)
    if (!s.multiplicity) return {Cardinality::Kind::Uncountable, std::nullopt};

  for (const CardinalitySummand& s : summary)
    if (!s.aut_order) return {Cardinality::Kind::CountablyInfinite, std::nullopt};

  std::int64_t total = 1;
  for (const CardinalitySummand& s : summary) {
    total = checked_mul(total, checked_pow(*s.aut_order, *s.multiplicity));
    total = checked_mul(total, factorial(*s.multiplicity));
  }
  return {Cardinality::Kind::Finite, total};
}

}  // namespace dessinator
