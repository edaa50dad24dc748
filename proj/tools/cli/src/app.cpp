#include "hyperverify/cli/app.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hyperverify/bailey.hpp"
#include "hyperverify/catalog.hpp"
#include "hyperverify/cli/report.hpp"
#include "hyperverify/verifier.hpp"

namespace hyperverify::cli {

namespace {

constexpr double kExactTolerance = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolicyFlags {
  std::optional<int> max_shell;
  std::optional<double> tol;
};

TruncationPolicy make_policy(const PolicyFlags& flags) {
  TruncationPolicy policy;
  if (flags.max_shell) {
    if (*flags.max_shell < 1) throw UsageError("--max-shell must be positive");
    policy.max_shell = *flags.max_shell;
    policy.initial_shell = std::min(policy.initial_shell, policy.max_shell);
  } else {
    try {
      policy = TruncationPolicy::from_environment();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return policy;
}

verify::Tolerances make_tolerances(const PolicyFlags& flags) {
  verify::Tolerances tol;
  if (flags.tol) {
    if (!(*flags.tol > 0.0) || *flags.tol >= tol.fail_tol) {
      throw UsageError("--tol must lie in (0, 1e-5)");
    }
    tol.pass_tol = *flags.tol;
  }
  return tol;
}

void add_policy_flags(CLI::App* sub, PolicyFlags& flags) {
  sub->add_option("--max-shell", flags.max_shell, "Largest shell summed (overrides HYPERVERIFY_MAX_SHELL)");
  sub->add_option("--tol", flags.tol, "PASS tolerance on the relative residual (default 1e-8)");
}

std::vector<const catalog::IdentityDescriptor*> select_ids(const std::string& csv) {
  std::vector<const catalog::IdentityDescriptor*> out;
  if (csv == "all") {
    for (const auto& d : catalog::builtin_catalog()) out.push_back(&d);
    return out;
  }
  std::stringstream ss(csv);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    const auto* d = catalog::find_identity(id);
    if (d == nullptr) throw UsageError("unknown identity id: " + id);
    out.push_back(d);
  }
  if (out.empty()) throw UsageError("--ids selects no identities");
  return out;
}

int verdict_exit(const std::vector<verify::VerificationRecord>& records, const Expectations& expect,
                 std::ostream& err) {
  const auto bad = mismatches(records, expect);
  for (const auto* r : bad) {
    err << "mismatch: " << r->identity_id << " at p=" << r->params.p << " pp=" << r->params.pp
        << " x=" << r->params.x << " y=" << r->params.y << " gave "
        << verify::to_string(r->verdict) << ", expected "
        << verify::to_string(expect.at(r->identity_id)) << '\n';
  }
  return bad.empty() ? kExitMatch : kExitMismatch;
}

void emit(const std::vector<verify::VerificationRecord>& records, const std::string& format,
          const std::string& path, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    os = &file;
  }
  if (format == "json") {
    write_json(*os, records);
  } else {
    write_table(*os, records);
  }
}

bool residual_line(std::ostream& out, const char* label, double worst, double limit) {
  char line[160];
  std::snprintf(line, sizeof line, "%-28s max residual %.3e (limit %.0e)  %s\n", label, worst, limit,
                worst <= limit ? "ok" : "FAILED");
  out << line;
  return worst <= limit;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of hypergeometric generating relations", "hyperverify"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog identities");

  std::string check_id;
  PolicyFlags check_flags;
  std::string check_format = "table";
  const catalog::Point dp = catalog::default_point();
  double cp = dp.p, cpp = dp.pp, cx = dp.x, cy = dp.y;
  auto* check = app.add_subcommand("check", "Verify one identity at one point");
  check->add_option("id", check_id, "Catalog id")->required();
  check->add_option("--p", cp, "p")->capture_default_str();
  check->add_option("--pp", cpp, "p'")->capture_default_str();
  check->add_option("--x", cx, "x")->capture_default_str();
  check->add_option("--y", cy, "y")->capture_default_str();
  check->add_option("--format", check_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  add_policy_flags(check, check_flags);

  std::string ids = "all", grid_spec = "default", sweep_format = "table", out_path, expect_path;
  unsigned threads = 0;
  PolicyFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Verify identities over a parameter grid");
  sweep->add_option("--ids", ids, "Comma-separated ids or 'all'")->capture_default_str();
  sweep->add_option("--grid", grid_spec, "'default' or a JSON grid file")->capture_default_str();
  sweep->add_option("--format", sweep_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sweep->add_option("--out", out_path, "Write the report here instead of stdout");
  sweep->add_option("--expect", expect_path, "JSON file overriding expected verdicts");
  sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  add_policy_flags(sweep, sweep_flags);

  int support = 4, schemes = 100;
  std::uint64_t bailey_seed = 1;
  auto* bailey_cmd = app.add_subcommand("bailey", "Check the Bailey transform on finite-support schemes");
  bailey_cmd->add_option("--support", support, "Largest support M")->capture_default_str()->check(CLI::Range(0, 16));
  bailey_cmd->add_option("--schemes", schemes, "Random schemes")->capture_default_str()->check(CLI::NonNegativeNumber);
  bailey_cmd->add_option("--seed", bailey_seed, "Seed of the first random scheme")->capture_default_str();

  int umax = 8, vmax = 8;
  auto* rearr = app.add_subcommand("rearr", "Check the finite rearrangement and factorial transform");
  rearr->add_option("--umax", umax, "Largest u")->capture_default_str()->check(CLI::Range(0, 20));
  rearr->add_option("--vmax", vmax, "Largest v")->capture_default_str()->check(CLI::Range(0, 20));

  int qmax = 10;
  auto* finite = app.add_subcommand("finite62", "Check the terminating single-sum identity");
  finite->add_option("--qmax", qmax, "Largest q")->capture_default_str()->check(CLI::Range(0, 20));

  int trials = 20;
  std::uint64_t genrel_seed = 1;
  std::string genrel_format = "table";
  PolicyFlags genrel_flags;
  auto* genrel = app.add_subcommand("genrel", "Check the Laguerre-pair generating relation on random (d), (g)");
  genrel->add_option("--trials", trials, "Random configurations")->capture_default_str()->check(CLI::NonNegativeNumber);
  genrel->add_option("--seed", genrel_seed, "Seed of the first configuration")->capture_default_str();
  genrel->add_option("--format", genrel_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  add_policy_flags(genrel, genrel_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto& d : catalog::builtin_catalog()) {
        char line[256];
        std::snprintf(line, sizeof line, "%-16s %-18s %s\n", d.id.c_str(),
                      std::string(catalog::to_string(d.variant)).c_str(), d.notes.c_str());
        out << line;
      }
      return kExitMatch;
    }

    if (check->parsed()) {
      const auto* d = catalog::find_identity(check_id);
      if (d == nullptr) throw UsageError("unknown identity id: " + check_id);
      const TruncationPolicy policy = make_policy(check_flags);
      const verify::Tolerances tol = make_tolerances(check_flags);
      const std::vector<verify::VerificationRecord> records{
          verify::verify_point(*d, catalog::Point{cx, cy, cp, cpp, 0.0, 0.0}, policy, tol)};
      emit(records, check_format, "", out);
      return verdict_exit(records, builtin_expectations(), err);
    }

    if (sweep->parsed()) {
      const auto selected = select_ids(ids);
      const verify::Grid grid = grid_spec == "default" ? verify::Grid::defaults() : load_grid(grid_spec);
      const Expectations expect =
          expect_path.empty() ? builtin_expectations() : load_expectations(expect_path, builtin_expectations());
      const TruncationPolicy policy = make_policy(sweep_flags);
      const verify::Tolerances tol = make_tolerances(sweep_flags);
      std::vector<verify::VerificationRecord> records;
      for (const auto* d : selected) {
        auto part = verify::sweep(*d, grid, policy, tol, threads);
        records.insert(records.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
      }
      emit(records, sweep_format, out_path, out);
      return verdict_exit(records, expect, err);
    }

    if (bailey_cmd->parsed()) {
      double worst_ones = 0.0;
      for (int m = 0; m <= support; ++m) {
        worst_ones = std::max(worst_ones, bailey::bailey_identity_residual(bailey::all_ones_scheme(m)));
      }
      double worst_random = 0.0;
      for (int k = 0; k < schemes; ++k) {
        const auto scheme = bailey::random_scheme(bailey_seed + static_cast<std::uint64_t>(k), support);
        worst_random = std::max(worst_random, bailey::bailey_identity_residual(scheme));
      }
      const bool ones_ok = residual_line(out, "all-ones schemes", worst_ones, kExactTolerance);
      const bool random_ok = residual_line(out, "random schemes", worst_random, kExactTolerance);
      const bool ok = ones_ok && random_ok;
      return ok ? kExitMatch : kExitMismatch;
    }

    if (rearr->parsed()) {
      double worst = 0.0;
      for (int u = 0; u <= umax; ++u) {
        for (int v = 0; v <= vmax; ++v) {
          for (double p : {0.7, 1.5}) {
            for (double pp : {0.7, 1.5}) {
              for (double y : {0.4, 1.1}) {
                for (double t : {0.4, 1.1}) {
                  worst = std::max(worst, verify::check_rearrangement(u, v, p, pp, y, t));
                }
              }
            }
          }
        }
      }
      int failures = 0;
      for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n <= m; ++n) failures += verify::check_factorial_transform(m, n) ? 0 : 1;
      }
      const bool ok = residual_line(out, "rearrangement", worst, kExactTolerance);
      out << "factorial transform          " << failures << " failures over 0 <= n <= m <= 12  "
          << (failures == 0 ? "ok" : "FAILED") << '\n';
      return ok && failures == 0 ? kExitMatch : kExitMismatch;
    }

    if (finite->parsed()) {
      double worst = 0.0;
      for (int q = 0; q <= qmax; ++q) {
        for (double p : {0.7, 1.3, 2.2}) {
          for (double pp : {0.7, 1.3, 2.2}) {
            for (double y : {0.5, 1.5}) {
              worst = std::max(worst, verify::check_finite_62({q, p, pp, y}));
            }
          }
        }
      }
      return residual_line(out, "finite single sum", worst, kExactTolerance) ? kExitMatch : kExitMismatch;
    }

    if (genrel->parsed()) {
      const TruncationPolicy policy = make_policy(genrel_flags);
      const verify::Tolerances tol = make_tolerances(genrel_flags);
      std::vector<verify::VerificationRecord> records;
      for (int k = 0; k < trials; ++k) {
        const auto c = verify::random_general_relation_case(genrel_seed + static_cast<std::uint64_t>(k),
                                                            k % 4 == 3);
        records.push_back(verify::check_general_relation(c, policy, tol));
      }
      emit(records, genrel_format, "", out);
      Expectations expect{{"GR", verify::Verdict::pass}};
      return verdict_exit(records, expect, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hyperverify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperverify::cli
