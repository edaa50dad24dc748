#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hyperverify/verifier.hpp"

namespace hyperverify::cli {

using Expectations = std::map<std::string, verify::Verdict>;

/// Every catalog id PASS except the two printed readings known to fail.
Expectations builtin_expectations();

/// Reads {"ID": "PASS"|"FAIL"|..., ...} and overlays it on `base`.
/// Throws std::runtime_error on malformed input.
Expectations load_expectations(const std::string& path, Expectations base);

/// Reads {"p": [..], "pp": [..], "x": [..], "y": [..]}; missing keys keep
/// the defaults. Throws std::runtime_error on malformed input.
verify::Grid load_grid(const std::string& path);

struct Summary {
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int skipped = 0;
};

Summary summarize(const std::vector<verify::VerificationRecord>& records);

/// Records whose verdict differs from the expectation. Skipped records and
/// ids without an expectation never count.
std::vector<const verify::VerificationRecord*> mismatches(
    const std::vector<verify::VerificationRecord>& records, const Expectations& expect);

/// Report JSON, version 1. Numbers carry 17 significant digits.
void write_json(std::ostream& os, const std::vector<verify::VerificationRecord>& records);

void write_table(std::ostream& os, const std::vector<verify::VerificationRecord>& records);

/// Shortest-safe decimal for JSON: %.17g, with non-finite values mapped to 0.
std::string json_number(double v);

std::string json_string(const std::string& s);

}  // namespace hyperverify::cli
