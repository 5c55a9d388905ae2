#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dessinator/autgroup.hpp"
#include "dessinator/components.hpp"
#include "dessinator/objects.hpp"

namespace dessinator {

inline constexpr std::string_view kVersion = "0.1.0";

// FNV-1a over the raw bytes, as 16 lowercase hex digits.
std::string input_digest(std::string_view data);

nlohmann::json object_json(const PCObject& obj);
nlohmann::json aut_json(const AutGroup& aut);
nlohmann::json components_json(const ComponentReport& report);

// Everything the analyze command reports for one object. Keys are stable:
// inapplicable fields (e.g. genus of a disconnected object) are null.
nlohmann::json analyze_json(const PCObject& obj, std::int64_t cap);

// {"command", "input_digest", "version", "results"}
nlohmann::json report_envelope(std::string_view command, std::string_view digest_input,
                               nlohmann::json results);

struct VerifyRow {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Recomputes every built-in known value (subgroup counts, C_p enumerations,
// covering counts, the M_n family, flag doubles, regular covers) and compares
// against the closed-form expectations.
std::vector<VerifyRow> verify_known_values();

std::string format_verify_table(const std::vector<VerifyRow>& rows);

}  // namespace dessinator
