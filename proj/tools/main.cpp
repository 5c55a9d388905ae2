#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dessinator/autgroup.hpp"
#include "dessinator/components.hpp"
#include "dessinator/counting.hpp"
#include "dessinator/error.hpp"
#include "dessinator/invariants.hpp"
#include "dessinator/objects.hpp"
#include "dessinator/perm_group.hpp"
#include "dessinator/report.hpp"

namespace {

using dessinator::error;
using dessinator::parse_error;
using dessinator::PCObject;
using nlohmann::json;

// Exit codes: 0 ok, 1 I/O or parse, 2 validation, 3 cap exceeded, 4 failed checks.
enum ExitCode { kOk = 0, kParse = 1, kValidation = 2, kCap = 3, kVerify = 4 };

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

std::int64_t base_cap() {
  if (const char* env = std::getenv("DESSINATOR_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw error("DESSINATOR_CAP must be a positive integer");
    return v;
  }
  return dessinator::kDefaultClosureCap;
}

void emit_json(std::string_view command, std::string_view digest_input, json results) {
  std::cout << dessinator::report_envelope(command, digest_input, std::move(results)).dump(2)
            << "\n";
}

int report_invalid(const std::vector<dessinator::RelationViolation>& violations) {
  for (const auto& v : violations)
    std::cerr << "invalid object: relator " << v.relator << " fails at point " << v.witness
              << "\n";
  return kValidation;
}

std::string render_components_text(const json& c, bool detailed) {
  std::ostringstream out;
  out << "components: " << c.at("components").size() << "\n";
  if (detailed) {
    int i = 1;
    for (const json& comp : c.at("components")) {
      out << "component " << i++ << ": degree " << comp.at("degree").get<std::int64_t>()
          << ", points";
      for (const json& p : comp.at("points")) out << " " << p.get<std::int64_t>();
      out << "\n";
    }
  }
  int i = 1;
  for (const json& cls : c.at("classes"))
    out << "class " << i++ << ": size " << cls.at("size").get<std::int64_t>()
        << ", automorphism order " << cls.at("aut_order").get<std::int64_t>() << "\n";
  out << "total automorphism order: " << c.at("total_aut_order").get<std::int64_t>() << "\n";
  return out.str();
}

std::string render_analysis_text(const json& r) {
  std::ostringstream out;
  const json& obj = r.at("object");
  out << "category: " << obj.at("category").get<std::string>() << "\n";
  out << "degree: " << obj.at("degree").get<std::int64_t>() << "\n";
  for (const auto& [name, value] : obj.at("generators").items())
    out << name << ": " << value.get<std::string>() << "\n";
  if (!r.at("valid").get<bool>()) {
    out << "valid: no\n";
    for (const json& v : r.at("violations"))
      out << "violation: relator " << v.at("relator").get<std::string>() << " fails at point "
          << v.at("witness").get<std::int64_t>() << "\n";
    return out.str();
  }
  out << "valid: yes\n";
  out << "connected: " << (r.at("connected").get<bool>() ? "yes" : "no") << "\n";
  if (r.at("monodromy_order").is_null())
    out << "monodromy order: exceeds cap\n";
  else
    out << "monodromy order: " << r.at("monodromy_order").get<std::int64_t>() << "\n";
  if (!r.at("type").is_null()) {
    const json& t = r.at("type");
    out << "type: (" << t[0].get<std::int64_t>() << ", " << t[1].get<std::int64_t>() << ", "
        << t[2].get<std::int64_t>() << ")\n";
    out << "euler characteristic: " << r.at("euler_characteristic").get<std::int64_t>() << "\n";
    if (!r.at("genus").is_null()) out << "genus: " << r.at("genus").get<std::int64_t>() << "\n";
  }
  if (!r.at("automorphisms").is_null()) {
    const json& a = r.at("automorphisms");
    out << "automorphism order: " << a.at("order").get<std::int64_t>() << "\n";
    std::string gens;
    for (const json& g : a.at("generators")) {
      if (!gens.empty()) gens += " ";
      gens += g.get<std::string>();
    }
    out << "automorphism generators: " << (gens.empty() ? "none" : gens) << "\n";
    if (!a.at("abelian_invariants").is_null()) {
      out << "abelian invariants:";
      if (a.at("abelian_invariants").empty()) out << " none";
      for (const json& d : a.at("abelian_invariants")) out << " " << d.get<std::int64_t>();
      out << "\n";
    }
    out << "regular: " << (a.at("regular").get<bool>() ? "yes" : "no") << "\n";
    const json& p = r.at("primitivity");
    out << "primitive monodromy: " << (p.at("primitive").get<bool>() ? "yes" : "no") << " ("
        << p.at("classification").get<std::string>() << ")\n";
  }
  if (!r.at("components").is_null()) out << render_components_text(r.at("components"), false);
  return out.str();
}

int cmd_analyze(const std::string& path, bool as_json, std::int64_t cap) {
  const std::optional<std::string> text = slurp(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    return kParse;
  }
  const PCObject obj = dessinator::read_object(*text);
  const json r = dessinator::analyze_json(obj, cap);
  if (as_json)
    emit_json("analyze", *text, r);
  else
    std::cout << render_analysis_text(r);
  return r.at("valid").get<bool>() ? kOk : kValidation;
}

int cmd_enumerate(bool has_degree, int degree, bool include_disconnected, bool has_cp,
                  std::int64_t p, const std::string& category, bool as_json) {
  if (has_degree == has_cp) {
    std::cerr << "enumerate requires exactly one of --degree or --cp\n";
    return kParse;
  }
  std::vector<PCObject> objs;
  std::string digest;
  json results;
  if (has_degree) {
    if (category != "dessin")
      throw error("enumeration by degree supports only the dessin category");
    objs = dessinator::enumerate_dessins(degree, !include_disconnected);
    digest = "enumerate;degree=" + std::to_string(degree) +
             ";connected_only=" + (include_disconnected ? "0" : "1");
    results["degree"] = degree;
    results["connected_only"] = !include_disconnected;
  } else {
    const std::optional<dessinator::Category> cat = dessinator::category_from_name(category);
    if (!cat) throw error("unknown category: " + category);
    objs = dessinator::enumerate_cp_objects(*cat, p);
    digest = "enumerate;cp=" + std::to_string(p) + ";category=" + category;
    results["p"] = p;
    results["category"] = category;
  }
  if (as_json) {
    json arr = json::array();
    for (const PCObject& o : objs) arr.push_back(dessinator::object_json(o));
    results["count"] = objs.size();
    results["objects"] = std::move(arr);
    emit_json("enumerate", digest, std::move(results));
  } else {
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << dessinator::write_object(objs[i]);
    }
  }
  return kOk;
}

int cmd_count(const std::string& name, std::int64_t p, bool as_json) {
  const dessinator::GroupPresentation pres = dessinator::presentation_by_name(name);
  const std::int64_t count = dessinator::count_index_p_normal(pres, p);
  if (as_json)
    emit_json("count", "count;presentation=" + pres.label + ";p=" + std::to_string(p),
              json{{"presentation", pres.label}, {"p", p}, {"count", count}});
  else
    std::cout << count << "\n";
  return kOk;
}

int cmd_components(const std::string& path, bool as_json) {
  const std::optional<std::string> text = slurp(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    return kParse;
  }
  const PCObject obj = dessinator::read_object(*text);
  if (const auto violations = dessinator::validate(obj); !violations.empty())
    return report_invalid(violations);
  const json c = dessinator::components_json(dessinator::decompose(obj));
  if (as_json)
    emit_json("components", *text, c);
  else
    std::cout << render_components_text(c, true);
  return kOk;
}

int cmd_cover(const std::string& path, bool as_json, std::int64_t cap) {
  const std::optional<std::string> text = slurp(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    return kParse;
  }
  const PCObject obj = dessinator::read_object(*text);
  if (const auto violations = dessinator::validate(obj); !violations.empty())
    return report_invalid(violations);
  const std::optional<PCObject> cover = dessinator::regular_cover(obj, cap);
  if (!cover) {
    std::cerr << "monodromy order exceeds cap " << cap << "\n";
    return kCap;
  }
  if (as_json)
    emit_json("cover", *text,
              json{{"degree", cover->degree()}, {"object", dessinator::object_json(*cover)}});
  else
    std::cout << dessinator::write_object(*cover);
  return kOk;
}

int cmd_dixon(int n, int samples, std::uint64_t seed, bool as_json) {
  const dessinator::DixonEstimate est = dessinator::dixon_estimate(n, samples, seed);
  const std::string digest = "dixon;n=" + std::to_string(n) +
                             ";samples=" + std::to_string(samples) +
                             ";seed=" + std::to_string(seed);
  if (as_json) {
    emit_json("dixon", digest,
              json{{"degree", est.degree},
                   {"samples", est.samples},
                   {"seed", est.seed},
                   {"fraction", est.fraction_sym_or_alt}});
  } else {
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.6f", est.fraction_sym_or_alt);
    std::cout << "degree: " << est.degree << "\nsamples: " << est.samples
              << "\nseed: " << est.seed << "\nfraction: " << frac << "\n";
  }
  return kOk;
}

int cmd_export_dot(const std::string& path) {
  const std::optional<std::string> text = slurp(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    return kParse;
  }
  const PCObject obj = dessinator::read_object(*text);
  if (const auto violations = dessinator::validate(obj); !violations.empty())
    return report_invalid(violations);
  if (dessinator::generator_arity(obj.category()) != 2)
    throw error("export-dot requires a dessin or an oriented map");
  const PCObject dessin = obj.category() == dessinator::Category::OrientedMap
                              ? dessinator::oriented_map_as_dessin(obj)
                              : obj;
  std::cout << dessinator::walsh_dot(dessin);
  return kOk;
}

int cmd_verify(bool as_json) {
  const std::vector<dessinator::VerifyRow> rows = dessinator::verify_known_values();
  int failures = 0;
  for (const dessinator::VerifyRow& r : rows)
    if (!r.pass) ++failures;
  if (as_json) {
    json arr = json::array();
    for (const dessinator::VerifyRow& r : rows)
      arr.push_back({{"check", r.check},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"pass", r.pass}});
    emit_json("verify-paper", "verify-paper", json{{"rows", std::move(arr)}, {"failures", failures}});
  } else {
    std::cout << dessinator::format_verify_table(rows);
  }
  return failures == 0 ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups, invariants and enumeration of dessins, maps and hypermaps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dessinator::kVersion));

  std::string analyze_path;
  bool analyze_as_json = false;
  std::int64_t analyze_cap = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "Validate an object file and report its invariants");
  analyze->add_option("path", analyze_path, "object file")->required();
  analyze->add_flag("--json", analyze_as_json, "emit JSON");
  CLI::Option* analyze_cap_opt =
      analyze->add_option("--cap", analyze_cap, "monodromy enumeration cap");

  int enum_degree = 0;
  bool enum_disconnected = false;
  std::int64_t enum_p = 0;
  std::string enum_category = "dessin";
  bool enum_as_json = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List objects up to isomorphism");
  CLI::Option* enum_degree_opt =
      enumerate->add_option("--degree", enum_degree, "all dessins of this degree");
  enumerate->add_flag("--include-disconnected", enum_disconnected,
                      "include non-connected dessins (with --degree)");
  CLI::Option* enum_cp_opt = enumerate->add_option(
      "--cp", enum_p, "degree-p objects with cyclic monodromy, p prime");
  enumerate->add_option("--category", enum_category,
                        "dessin | oriented-map | hypermap | map (with --cp)");
  enumerate->add_flag("--json", enum_as_json, "emit JSON");

  std::string count_presentation;
  std::int64_t count_p = 0;
  bool count_as_json = false;
  CLI::App* count = app.add_subcommand("count", "Count index-p normal subgroups of a presentation");
  count->add_option("--presentation", count_presentation, "presentation name")->required();
  count->add_option("--p", count_p, "prime index")->required();
  count->add_flag("--json", count_as_json, "emit JSON");

  std::string components_path;
  bool components_as_json = false;
  CLI::App* components =
      app.add_subcommand("components", "Decompose an object into connected components");
  components->add_option("path", components_path, "object file")->required();
  components->add_flag("--json", components_as_json, "emit JSON");

  std::string cover_path;
  bool cover_as_json = false;
  std::int64_t cover_cap = 0;
  CLI::App* cover = app.add_subcommand("cover", "Compute the minimal regular cover");
  cover->add_option("path", cover_path, "object file")->required();
  cover->add_flag("--json", cover_as_json, "emit JSON");
  CLI::Option* cover_cap_opt = cover->add_option("--cap", cover_cap, "monodromy enumeration cap");

  int dixon_n = 0;
  int dixon_samples = 0;
  std::uint64_t dixon_seed = 0;
  bool dixon_as_json = false;
  CLI::App* dixon =
      app.add_subcommand("dixon", "Estimate how often two random permutations generate Sym or Alt");
  dixon->add_option("--n", dixon_n, "degree")->required();
  dixon->add_option("--samples", dixon_samples, "sample count")->required();
  dixon->add_option("--seed", dixon_seed, "PRNG seed")->required();
  dixon->add_flag("--json", dixon_as_json, "emit JSON");

  std::string dot_path;
  CLI::App* export_dot =
      app.add_subcommand("export-dot", "Write the bipartite graph of a dessin as DOT");
  export_dot->add_option("path", dot_path, "object file")->required();

  bool verify_as_json = false;
  CLI::App* verify =
      app.add_subcommand("verify-paper", "Recompute all built-in known values and compare");
  verify->add_flag("--json", verify_as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (analyze->parsed()) {
      const std::int64_t cap = analyze_cap_opt->count() ? analyze_cap : base_cap();
      if (cap <= 0) throw error("--cap must be positive");
      return cmd_analyze(analyze_path, analyze_as_json, cap);
    }
    if (enumerate->parsed())
      return cmd_enumerate(enum_degree_opt->count() > 0, enum_degree, enum_disconnected,
                           enum_cp_opt->count() > 0, enum_p, enum_category, enum_as_json);
    if (count->parsed()) return cmd_count(count_presentation, count_p, count_as_json);
    if (components->parsed()) return cmd_components(components_path, components_as_json);
    if (cover->parsed()) {
      const std::int64_t cap = cover_cap_opt->count() ? cover_cap : base_cap();
      if (cap <= 0) throw error("--cap must be positive");
      return cmd_cover(cover_path, cover_as_json, cap);
    }
    if (dixon->parsed()) return cmd_dixon(dixon_n, dixon_samples, dixon_seed, dixon_as_json);
    if (export_dot->parsed()) return cmd_export_dot(dot_path);
    if (verify->parsed()) return cmd_verify(verify_as_json);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
