#include "dessinator/report.hpp"

#include <algorithm>
#include <cstdio>

#include "dessinator/counting.hpp"
#include "dessinator/error.hpp"
#include "dessinator/invariants.hpp"
#include "dessinator/numeric.hpp"

namespace dessinator {

using nlohmann::json;

std::string input_digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json object_json(const PCObject& obj) {
  json gens = json::object();
  const std::vector<std::string> names = generator_names(obj.category());
  for (std::size_t i = 0; i < names.size(); ++i) gens[names[i]] = print_cycles(obj.gen(static_cast<int>(i)));
  return {{"category", category_name(obj.category())}, {"degree", obj.degree()}, {"generators", gens}};
}

json aut_json(const AutGroup& aut) {
  json gens = json::array();
  for (const Perm& g : aut.generating_set) gens.push_back(print_cycles(g));
  json invariants;
  if (aut.abelian_invariants) invariants = *aut.abelian_invariants;
  const int degree = aut.maps.front().degree();
  return {{"base_point", aut.base_point},
          {"order", aut.order},
          {"phi", aut.phi},
          {"generators", gens},
          {"abelian_invariants", invariants},
          {"regular", aut.order == degree}};
}

json components_json(const ComponentReport& report) {
  json comps = json::array();
  for (const Component& c : report.components)
    comps.push_back({{"points", c.points}, {"degree", c.object.degree()}, {"object", object_json(c.object)}});
  json classes = json::array();
  for (const IsoClass& cls : report.classes)
    classes.push_back(
        {{"members", cls.members}, {"size", cls.members.size()}, {"aut_order", cls.aut_order}});
  return {{"components", comps},
          {"classes", classes},
          {"total_aut_order", report.total_aut_order},
          {"cardinality", "finite"}};
}

json analyze_json(const PCObject& obj, std::int64_t cap) {
  json out;
  out["object"] = object_json(obj);
  const std::vector<RelationViolation> violations = validate(obj);
  out["valid"] = violations.empty();
  json vio = json::array();
  for (const RelationViolation& v : violations) vio.push_back({{"relator", v.relator}, {"witness", v.witness}});
  out["violations"] = vio;

  out["connected"] = nullptr;
  out["monodromy_order"] = nullptr;
  out["type"] = nullptr;
  out["euler_characteristic"] = nullptr;
  out["genus"] = nullptr;
  out["automorphisms"] = nullptr;
  out["regular"] = nullptr;
  out["primitivity"] = nullptr;
  out["components"] = nullptr;
  if (!violations.empty()) return out;

  const bool connected = is_connected(obj);
  out["connected"] = connected;
  if (std::optional<std::int64_t> order = monodromy_order(obj, cap)) out["monodromy_order"] = *order;

  if (is_oriented(obj.category())) {
    const TypeTriple t = type_of(obj);
    out["type"] = {t.p, t.q, t.r};
    const EulerGenus eg = euler_genus(obj, /*require_connected=*/false);
    out["euler_characteristic"] = eg.chi;
    if (eg.genus) out["genus"] = *eg.genus;
  }

  if (connected) {
    const AutGroup aut = compute_aut(obj);
    out["automorphisms"] = aut_json(aut);
    out["regular"] = aut.order == obj.degree();
    const PrimitivityReport pr = primitivity_report(obj);
    json prime;
    if (pr.prime) prime = *pr.prime;
    out["primitivity"] = {{"primitive", pr.primitive},
                          {"aut_order", pr.aut_order},
                          {"classification", primitivity_class_name(pr.classification)},
                          {"prime", prime}};
  } else {
    out["components"] = components_json(decompose(obj));
  }
  return out;
}

json report_envelope(std::string_view command, std::string_view digest_input, json results) {
  return {{"command", std::string(command)},
          {"input_digest", input_digest(digest_input)},
          {"version", std::string(kVersion)},
          {"results", std::move(results)}};
}

namespace {

PCObject mn_dessin(int n) {
  std::vector<int> y_images(n);
  for (int i = 1; i <= n; ++i) y_images[i - 1] = i;
  std::swap(y_images[0], y_images[1]);
  return PCObject(Category::Dessin, {full_cycle(n), Perm::from_images(y_images)});
}

PCObject cyclic_dessin(int p) {
  return PCObject(Category::Dessin, {full_cycle(p), full_cycle(p)});
}

void row(std::vector<VerifyRow>& rows, std::string check, std::int64_t expected,
         std::int64_t computed) {
  rows.push_back({std::move(check), std::to_string(expected), std::to_string(computed),
                  expected == computed});
}

std::int64_t geometric_count(std::int64_t p, std::int64_t r) {
  // (p^r - 1)/(p - 1)
  std::int64_t total = 0, power = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    total += power;
    power = checked_mul(power, p);
  }
  return total;
}

}  // namespace

std::vector<VerifyRow> verify_known_values() {
  std::vector<VerifyRow> rows;

  for (std::int64_t p : {2, 3, 5, 7})
    row(rows, "index-" + std::to_string(p) + " normal subgroups of F_2", p + 1,
        count_index_p_normal(free_group(2), p));
  for (std::int64_t p : {2, 3, 5})
    row(rows, "index-" + std::to_string(p) + " normal subgroups of C_inf * C_2",
        p == 2 ? 3 : 1, count_index_p_normal(oriented_map_parent(), p));
  for (std::int64_t p : {2, 3})
    row(rows, "index-" + std::to_string(p) + " normal subgroups of C_2 * C_2 * C_2",
        p == 2 ? 7 : 0, count_index_p_normal(hypermap_parent(), p));
  for (std::int64_t p : {2, 3})
    row(rows, "index-" + std::to_string(p) + " normal subgroups of V_4 * C_2",
        p == 2 ? 7 : 0, count_index_p_normal(map_parent(), p));

  for (std::int64_t p : {3, 5, 7}) {
    const std::vector<PCObject> objs = enumerate_cp_objects(Category::Dessin, p);
    std::int64_t planar = 0, high = 0;
    for (const PCObject& o : objs) {
      const int g = euler_genus(o).genus.value();
      if (g == 0) ++planar;
      if (g == (p - 1) / 2) ++high;
    }
    const std::string tag = "degree-" + std::to_string(p) + " cyclic dessins";
    row(rows, tag + ": total", p + 1, static_cast<std::int64_t>(objs.size()));
    row(rows, tag + ": planar", 3, planar);
    row(rows, tag + ": genus " + std::to_string((p - 1) / 2), p - 2, high);
  }

  for (int g = 0; g <= 3; ++g)
    for (std::int64_t p : {2, 3, 5})
      row(rows,
          "index-" + std::to_string(p) + " covers of orientable genus-" + std::to_string(g) +
              " surface group",
          geometric_count(p, 2 * g), count_index_p_normal(orientable_surface(g), p));
  for (int g = 1; g <= 4; ++g)
    for (std::int64_t p : {2, 3, 5})
      row(rows,
          "index-" + std::to_string(p) + " covers of non-orientable genus-" + std::to_string(g) +
              " surface group",
          p == 2 ? (std::int64_t(1) << g) - 1 : geometric_count(p, g - 1),
          count_index_p_normal(nonorientable_surface(g), p));

  for (int n = 3; n <= 7; ++n) {
    const PCObject m = mn_dessin(n);
    const std::string tag = "M_" + std::to_string(n);
    row(rows, tag + ": automorphism order", 1, compute_aut(m).order);
    const TypeTriple t = type_of(m);
    row(rows, tag + ": type p", n, t.p);
    row(rows, tag + ": type q", 2, t.q);
    row(rows, tag + ": type r", n - 1, t.r);
    row(rows, tag + ": genus", 0, euler_genus(m).genus.value());
    row(rows, tag + ": monodromy order", factorial(n), monodromy_order(m).value());
  }

  for (int n = 3; n <= 5; ++n)
    row(rows, "flag double of M_" + std::to_string(n) + ": automorphism order", 2,
        compute_aut(flag_double(mn_dessin(n))).order);

  for (int n = 3; n <= 5; ++n) {
    const PCObject cover = regular_cover(mn_dessin(n)).value();
    const std::string tag = "regular cover of M_" + std::to_string(n);
    row(rows, tag + ": degree", factorial(n), cover.degree());
    row(rows, tag + ": automorphism order", factorial(n), compute_aut(cover).order);
  }

  for (int p : {3, 5, 7}) {
    const PCObject c = cyclic_dessin(p);
    const std::string tag = "x = y = " + std::to_string(p) + "-cycle";
    row(rows, tag + ": automorphism order", p, compute_aut(c).order);
    row(rows, tag + ": genus", (p - 1) / 2, euler_genus(c).genus.value());
  }

  return rows;
}

std::string format_verify_table(const std::vector<VerifyRow>& rows) {
  std::size_t check_w = 5, expected_w = 8, computed_w = 8;
  for (const VerifyRow& r : rows) {
    check_w = std::max(check_w, r.check.size());
    expected_w = std::max(expected_w, r.expected.size());
    computed_w = std::max(computed_w, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad("check", check_w) + "  " + pad("expected", expected_w) + "  " +
                    pad("computed", computed_w) + "  status\n";
  out += std::string(check_w + expected_w + computed_w + 10, '-') + "\n";
  int failures = 0;
  for (const VerifyRow& r : rows) {
    out += pad(r.check, check_w) + "  " + pad(r.expected, expected_w) + "  " +
           pad(r.computed, computed_w) + "  " + (r.pass ? "ok" : "FAIL") + "\n";
    if (!r.pass) ++failures;
  }
  out += std::to_string(rows.size()) + " checks, " + std::to_string(failures) + " failures\n";
  return out;
}

}  // namespace dessinator
