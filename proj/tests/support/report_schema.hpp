#pragma once

#include <set>
#include <string>

#include "json.hpp"

namespace reference {

// Empty string when `text` is a valid version-1 report, otherwise the first problem found.
inline std::string report_schema_error(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return std::string("parse: ") + e.what();
  }
  if (!doc.is_object()) return "top level is not an object";
  const std::set<std::string> top{"version", "records", "summary"};
  for (const auto& [k, v] : doc.items()) {
    if (!top.count(k)) return "unexpected key " + k;
  }
  if (!doc.contains("version") || doc["version"] != 1) return "version must be 1";
  if (!doc.contains("records") || !doc["records"].is_array()) return "records must be an array";
  const std::set<std::string> verdicts{"PASS", "FAIL", "INCONCLUSIVE", "SKIPPED"};
  int counts[4] = {0, 0, 0, 0};
  for (const auto& r : doc["records"]) {
    if (!r.is_object()) return "record is not an object";
    const std::set<std::string> keys{"id", "variant", "params", "lhs", "rhs", "abs_residual",
                                     "rel_residual", "shell", "verdict", "note"};
    for (const auto& k : keys) {
      if (!r.contains(k)) return "record lacks " + k;
    }
    if (r.size() != keys.size()) return "record has extra keys";
    if (!r["id"].is_string() || !r["variant"].is_string() || !r["note"].is_string()) return "bad string field";
    const auto& params = r["params"];
    if (!params.is_object()) return "params is not an object";
    for (const char* k : {"p", "pp", "x", "y"}) {
      if (!params.contains(k) || !params[k].is_number()) return std::string("params.") + k;
    }
    if (params.contains("s") != params.contains("t")) return "s and t come together";
    if (params.size() != (params.contains("s") ? 6u : 4u)) return "params has extra keys";
    for (const char* side : {"lhs", "rhs"}) {
      const auto& c = r[side];
      if (!c.is_object() || c.size() != 2 || !c.contains("re") || !c.contains("im") || !c["re"].is_number() ||
          !c["im"].is_number()) {
        return std::string("bad complex ") + side;
      }
    }
    if (!r["abs_residual"].is_number() || r["abs_residual"].get<double>() < 0) return "abs_residual";
    if (!r["rel_residual"].is_number() || r["rel_residual"].get<double>() < 0) return "rel_residual";
    if (!r["shell"].is_number_integer() || r["shell"].get<long long>() < 0) return "shell";
    if (!r["verdict"].is_string() || !verdicts.count(r["verdict"].get<std::string>())) return "verdict";
    const auto v = r["verdict"].get<std::string>();
    ++counts[v == "PASS" ? 0 : v == "FAIL" ? 1 : v == "INCONCLUSIVE" ? 2 : 3];
  }
  const auto& s = doc["summary"];
  if (!s.is_object() || s.size() != 4) return "summary must have four counts";
  const char* names[4] = {"pass", "fail", "inconclusive", "skipped"};
  for (int k = 0; k < 4; ++k) {
    if (!s.contains(names[k]) || !s[names[k]].is_number_integer()) return std::string("summary.") + names[k];
    if (s[names[k]].get<int>() != counts[k]) return std::string("summary.") + names[k] + " disagrees with records";
  }
  return {};
}

}  // namespace reference
