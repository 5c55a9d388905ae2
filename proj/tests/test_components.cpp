#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "dessinator/autgroup.hpp"
#include "dessinator/components.hpp"
#include "dessinator/error.hpp"
#include "dessinator/numeric.hpp"
#include "dessinator/objects.hpp"
#include "dessinator/perm_group.hpp"
#include "doctest.h"

using namespace dessinator;

namespace {

PCObject m3() {
  return PCObject(Category::Dessin, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}

PCObject cyclic(int p) { return PCObject(Category::Dessin, {full_cycle(p), full_cycle(p)}); }

Perm random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  for (int i = degree - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[i], images[j]);
  }
  return Perm::from_images(std::move(images));
}

PCObject random_connected_dessin(int degree, std::mt19937_64& rng) {
  while (true) {
    PCObject obj(Category::Dessin, {random_perm(degree, rng), random_perm(degree, rng)});
    if (is_connected(obj)) return obj;
  }
}

PCObject relabel(const PCObject& obj, const Perm& g) {
  std::vector<Perm> gens;
  for (const Perm& p : obj.gens()) gens.push_back(conjugate(p, g));
  return PCObject(obj.category(), gens);
}

// A scrambled disjoint union of random connected dessins with the given part sizes.
PCObject random_union(const std::vector<int>& parts, std::mt19937_64& rng) {
  std::vector<PCObject> pieces;
  for (int size : parts) pieces.push_back(random_connected_dessin(size, rng));
  PCObject whole = disjoint_union(pieces);
  return relabel(whole, random_perm(whole.degree(), rng));
}

std::vector<std::pair<std::int64_t, std::size_t>> class_shape(const ComponentReport& r) {
  std::vector<std::pair<std::int64_t, std::size_t>> shape;
  for (const IsoClass& cls : r.classes) shape.push_back({cls.aut_order, cls.members.size()});
  std::sort(shape.begin(), shape.end());
  return shape;
}

}  // namespace

TEST_CASE("three copies of the regular 2-point dessin") {
  const PCObject c2(Category::Dessin, {parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 2)});
  const PCObject whole = disjoint_union({c2, c2, c2});
  const ComponentReport report = decompose(whole);
  REQUIRE(report.components.size() == 3);
  CHECK(report.components[0].points == std::vector<int>{1, 2});
  CHECK(report.components[1].points == std::vector<int>{3, 4});
  CHECK(report.components[2].points == std::vector<int>{5, 6});
  REQUIRE(report.classes.size() == 1);
  CHECK(report.classes[0].members == std::vector<int>{0, 1, 2});
  CHECK(report.classes[0].aut_order == 2);
  CHECK(report.total_aut_order == 48);  // 2^3 * 3!
  CHECK(aut_bruteforce(whole).size() == 48);
}

TEST_CASE("two non-isomorphic components") {
  const PCObject whole = disjoint_union({m3(), cyclic(3)});
  const ComponentReport report = decompose(whole);
  REQUIRE(report.classes.size() == 2);
  CHECK(report.classes[0].aut_order == 1);
  CHECK(report.classes[1].aut_order == 3);
  CHECK(report.total_aut_order == 3);
  CHECK(aut_bruteforce(whole).size() == 3);
}

TEST_CASE("decompose degenerates on a connected object") {
  const ComponentReport report = decompose(m3());
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0].points == std::vector<int>{1, 2, 3});
  CHECK(report.components[0].object == m3());
  REQUIRE(report.classes.size() == 1);
  CHECK(report.classes[0].members == std::vector<int>{0});
  CHECK(report.total_aut_order == compute_aut(m3()).order);
}

TEST_CASE("stored isomorphisms really intertwine the components") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const PCObject whole = random_union({2, 2, 3}, rng);
    const ComponentReport report = decompose(whole);
    for (const IsoClass& cls : report.classes) {
      const PCObject& rep = report.components[cls.members.front()].object;
      for (std::size_t t = 0; t < cls.members.size(); ++t) {
        const PCObject& member = report.components[cls.members[t]].object;
        const Perm& f = cls.iso_from_rep[t];
        REQUIRE(f.degree() == rep.degree());
        for (std::size_t g = 0; g < rep.gens().size(); ++g)
          for (int w = 1; w <= rep.degree(); ++w)
            CHECK(f(rep.gens()[g](w)) == member.gens()[g](f(w)));
      }
    }
  }
}

TEST_CASE("wreath formula matches the brute-force centraliser") {
  std::mt19937_64 rng(83);
  const std::vector<std::vector<int>> shapes{
      {1, 1}, {2, 2}, {1, 2, 3}, {2, 2, 2}, {3, 3}, {2, 5}, {3, 4}, {1, 1, 1, 4}, {2, 2, 3}};
  int cases = 0;
  for (const std::vector<int>& shape : shapes) {
    for (int trial = 0; trial < 3; ++trial) {
      const PCObject whole = random_union(shape, rng);
      const ComponentReport report = decompose(whole);
      CHECK(report.total_aut_order ==
            static_cast<std::int64_t>(aut_bruteforce(whole).size()));
      ++cases;
    }
  }
  CHECK(cases >= 20);
}

TEST_CASE("relabelling changes nothing structural") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const PCObject whole = random_union({2, 2, 3}, rng);
    const ComponentReport before = decompose(whole);
    const ComponentReport after = decompose(relabel(whole, random_perm(whole.degree(), rng)));
    CHECK(before.total_aut_order == after.total_aut_order);
    CHECK(class_shape(before) == class_shape(after));
  }
}

TEST_CASE("wreath generators close into the full automorphism group") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const PCObject whole = random_union({2, 2, rng() % 2 ? 3 : 2}, rng);
    const ComponentReport report = decompose(whole);
    const std::vector<Perm> gens = wreath_generators(whole, report);
    for (const Perm& g : gens)
      for (const Perm& og : whole.gens()) CHECK(compose(g, og) == compose(og, g));
    const auto group = closure(whole.degree(), gens);
    REQUIRE(group.has_value());
    CHECK(group->order() == report.total_aut_order);
  }
}

TEST_CASE("symbolic cardinality cases") {
  using Kind = Cardinality::Kind;
  // one class, finite symmetry, infinitely many copies
  CHECK(classify_cardinality({{2, std::nullopt}}).kind == Kind::Uncountable);
  // infinitely many rigid copies still give the full symmetric group on them
  CHECK(classify_cardinality({{1, std::nullopt}}).kind == Kind::Uncountable);
  // one copy whose own group is countably infinite
  CHECK(classify_cardinality({{std::nullopt, 1}}).kind == Kind::CountablyInfinite);
  // all finite: product formula
  const Cardinality finite = classify_cardinality({{2, 3}, {1, 5}});
  CHECK(finite.kind == Kind::Finite);
  CHECK(finite.order == 5760);  // 2^3 * 3! * 1^5 * 5!
  CHECK(classify_cardinality({}).order == 1);
  // infinite multiplicity dominates an infinite component group
  CHECK(classify_cardinality({{std::nullopt, std::nullopt}}).kind == Kind::Uncountable);
  CHECK(classify_cardinality({{std::nullopt, 2}, {4, std::nullopt}}).kind == Kind::Uncountable);

  CHECK(cardinality_name(Kind::Finite) == "finite");
  CHECK(cardinality_name(Kind::CountablyInfinite) == "aleph0");
  CHECK(cardinality_name(Kind::Uncountable) == "uncountable");

  CHECK_THROWS_AS(classify_cardinality({{0, 1}}), error);
  CHECK_THROWS_AS(classify_cardinality({{1, 0}}), error);
  CHECK_THROWS_AS(classify_cardinality({{-2, 1}}), error);
}

TEST_CASE("randomized finite cardinalities") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int classes = 1 + static_cast<int>(rng() % 3);
    std::vector<CardinalitySummand> summary;
    std::int64_t expected = 1;
    for (int i = 0; i < classes; ++i) {
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 6);
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 4);
      summary.push_back({k, m});
      expected *= checked_pow(k, m) * factorial(m);
    }
    const Cardinality c = classify_cardinality(summary);
    CHECK(c.kind == Cardinality::Kind::Finite);
    CHECK(c.order == expected);
  }
}

TEST_CASE("classifier agrees with decompose on real objects") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const PCObject whole = random_union({2, 3, 2}, rng);
    const ComponentReport report = decompose(whole);
    std::vector<CardinalitySummand> summary;
    for (const IsoClass& cls : report.classes)
      summary.push_back({cls.aut_order, static_cast<std::int64_t>(cls.members.size())});
    const Cardinality c = classify_cardinality(summary);
    CHECK(c.kind == Cardinality::Kind::Finite);
    CHECK(c.order == report.total_aut_order);
  }
}
