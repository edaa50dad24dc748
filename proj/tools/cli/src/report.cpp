#include "hyperverify/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "hyperverify/catalog.hpp"

namespace hyperverify::cli {

Expectations builtin_expectations() {
  Expectations e;
  for (const auto& d : catalog::builtin_catalog()) e[d.id] = verify::Verdict::pass;
  e["E3.11-printed"] = verify::Verdict::fail;
  e["E5.3-printed"] = verify::Verdict::fail;
  return e;
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace

Expectations load_expectations(const std::string& path, Expectations base) {
  const nlohmann::json j = read_json(path);
  if (!j.is_object()) throw std::runtime_error(path + ": expected a JSON object");
  for (const auto& [id, value] : j.items()) {
    if (!value.is_string()) throw std::runtime_error(path + ": verdict for " + id + " is not a string");
    const auto v = verify::parse_verdict(value.get<std::string>());
    if (!v) throw std::runtime_error(path + ": unknown verdict '" + value.get<std::string>() + "'");
    base[id] = *v;
  }
  return base;
}

verify::Grid load_grid(const std::string& path) {
  const nlohmann::json j = read_json(path);
  if (!j.is_object()) throw std::runtime_error(path + ": expected a JSON object");
  verify::Grid grid = verify::Grid::defaults();
  auto axis = [&](const char* key, std::vector<double>& dst) {
    if (!j.contains(key)) return;
    const auto& a = j.at(key);
    if (!a.is_array() || a.empty()) throw std::runtime_error(path + ": '" + key + "' must be a nonempty array");
    dst.clear();
    for (const auto& v : a) {
      if (!v.is_number()) throw std::runtime_error(path + ": '" + key + "' holds a non-number");
      dst.push_back(v.get<double>());
    }
  };
  axis("p", grid.p);
  axis("pp", grid.pp);
  axis("x", grid.x);
  axis("y", grid.y);
  for (const auto& [key, value] : j.items()) {
    if (key != "p" && key != "pp" && key != "x" && key != "y") {
      throw std::runtime_error(path + ": unknown key '" + key + "'");
    }
  }
  return grid;
}

Summary summarize(const std::vector<verify::VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.verdict) {
      case verify::Verdict::pass: ++s.pass; break;
      case verify::Verdict::fail: ++s.fail; break;
      case verify::Verdict::inconclusive: ++s.inconclusive; break;
      case verify::Verdict::skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::vector<const verify::VerificationRecord*> mismatches(
    const std::vector<verify::VerificationRecord>& records, const Expectations& expect) {
  std::vector<const verify::VerificationRecord*> out;
  for (const auto& r : records) {
    if (r.verdict == verify::Verdict::skipped) continue;
    const auto it = expect.find(r.identity_id);
    if (it != expect.end() && it->second != r.verdict) out.push_back(&r);
  }
  return out;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace {

std::string complex_json(Complex z) {
  return "{\"re\": " + json_number(z.real()) + ", \"im\": " + json_number(z.imag()) + "}";
}

std::string note_for(const verify::VerificationRecord& r) {
  const bool finite = std::isfinite(r.lhs_value.real()) && std::isfinite(r.lhs_value.imag()) &&
                      std::isfinite(r.rhs_value.real()) && std::isfinite(r.rhs_value.imag());
  if (finite) return r.note;
  return r.note.empty() ? "non-finite value written as 0" : r.note + "; non-finite value written as 0";
}

}  // namespace

void write_json(std::ostream& os, const std::vector<verify::VerificationRecord>& records) {
  os << "{\n  \"version\": 1,\n  \"records\": [";
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    os << (k == 0 ? "\n" : ",\n");
    os << "    {\"id\": " << json_string(r.identity_id) << ", \"variant\": " << json_string(r.variant)
       << ", \"params\": {\"p\": " << json_number(r.params.p) << ", \"pp\": " << json_number(r.params.pp)
       << ", \"x\": " << json_number(r.params.x) << ", \"y\": " << json_number(r.params.y);
    if (r.has_st) {
      os << ", \"s\": " << json_number(r.params.s) << ", \"t\": " << json_number(r.params.t);
    }
    os << "}, \"lhs\": " << complex_json(r.lhs_value) << ", \"rhs\": " << complex_json(r.rhs_value)
       << ", \"abs_residual\": " << json_number(r.abs_residual)
       << ", \"rel_residual\": " << json_number(r.rel_residual) << ", \"shell\": " << r.shell_used
       << ", \"verdict\": " << json_string(std::string(verify::to_string(r.verdict)))
       << ", \"note\": " << json_string(note_for(r)) << "}";
  }
  const Summary s = summarize(records);
  os << (records.empty() ? "],\n" : "\n  ],\n");
  os << "  \"summary\": {\"pass\": " << s.pass << ", \"fail\": " << s.fail
     << ", \"inconclusive\": " << s.inconclusive << ", \"skipped\": " << s.skipped << "}\n}\n";
}

namespace {

std::string complex_text(Complex z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else if (z.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", z.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

void write_table(std::ostream& os, const std::vector<verify::VerificationRecord>& records) {
  char line[512];
  std::snprintf(line, sizeof line, "%-16s %-18s %6s %6s %6s %6s %24s %24s %10s %5s  %s\n", "id",
                "variant", "p", "pp", "x", "y", "lhs", "rhs", "rel", "shell", "verdict");
  os << line;
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-16s %-18s %6.3g %6.3g %6.3g %6.3g %24s %24s %10.3g %5d  %s",
                  r.identity_id.c_str(), r.variant.c_str(), r.params.p, r.params.pp, r.params.x,
                  r.params.y, complex_text(r.lhs_value).c_str(), complex_text(r.rhs_value).c_str(),
                  r.rel_residual, r.shell_used, std::string(verify::to_string(r.verdict)).c_str());
    os << line;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  const Summary s = summarize(records);
  os << "pass " << s.pass << ", fail " << s.fail << ", inconclusive " << s.inconclusive
     << ", skipped " << s.skipped << '\n';
}

}  // namespace hyperverify::cli
