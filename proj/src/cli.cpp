#include "gmext/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmext/certifier.hpp"
#include "gmext/closed_form.hpp"
#include "gmext/explorer.hpp"
#include "gmext/oracle.hpp"
#include "gmext/serialize.hpp"
#include "gmext/stationarity.hpp"

namespace gmext {

namespace {

using nlohmann::json;

struct ProblemArgs {
  double alpha = 0.0;
  int n = 0;
  double lambda = 0.0;
};

struct OracleArgs {
  int starts = OracleConfig{}.starts;
  std::uint64_t seed = OracleConfig{}.seed;
  double box = 0.0;  // 0: automatic

  OracleConfig config() const {
    OracleConfig c;
    c.starts = starts;
    c.seed = seed;
    if (box > 0.0) c.box = box;
    return c;
  }
};

void add_problem(CLI::App* app, ProblemArgs& a) {
  app->add_option("--alpha", a.alpha, "Exponent alpha")->required();
  app->add_option("--n", a.n, "Number of variables (>= 2)")->required();
  app->add_option("--lambda", a.lambda, "Geometric mean lambda (> 0)")->required();
}

void add_oracle(CLI::App* app, OracleArgs& o) {
  app->add_option("--starts", o.starts, "Multistart count")->envname(kStartsEnvVar);
  app->add_option("--seed", o.seed, "RNG seed");
  app->add_option("--box", o.box, "Log-space box radius (default: automatic)");
}

Direction direction_of(const std::string& s) { return parse_direction(s); }

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_extremum(Direction d, const ProblemArgs& a, const OracleArgs& o, bool as_json, std::ostream& out) {
  const ExtremumProblem p(a.alpha, a.n, a.lambda);
  const ExtremumResult r = extremum(p, d);
  json j = to_json(r);
  j["problem"] = to_json(p);
  if (r.method == Method::unknown) {
    // No closed form: report the oracle's estimate, marked as numeric.
    const OracleEstimate est = estimate(p, d, o.config());
    j["value"] = est.value;
    j["attained"] = false;
    j["method"] = std::string(to_string(Method::numeric));
    j["oracle"] = to_json(est);
  }
  if (as_json) {
    print(out, j);
    return kExitOk;
  }
  out << to_string(d) << " F_" << p.alpha() << " on H_" << p.lambda() << " (n=" << p.n() << ")\n";
  out << "  regime:   " << j["regime"].get<std::string>() << '\n';
  out << "  method:   " << j["method"].get<std::string>() << '\n';
  out << "  value:    " << j["value"].dump() << '\n';
  out << "  attained: " << (j["attained"].get<bool>() ? "yes" : "no") << '\n';
  if (!j["witness"].is_null()) out << "  witness:  " << j["witness"].dump() << '\n';
  if (!j["boundary"].is_null()) {
    out << "  limit:    " << j["boundary"]["to_zero"] << " coordinate(s) -> 0, " << j["boundary"]["to_infinity"]
        << " -> +inf\n";
  }
  if (!j["bound"].is_null()) {
    out << "  bound:    " << j["bound"].dump() << (d == Direction::inf ? " (upper bound)" : " (lower bound)") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extrema of sum 1/(1+x_i)^alpha over positive vectors with fixed geometric mean", "gmext"};
  app.require_subcommand(1);

  ProblemArgs pa;
  OracleArgs oa;
  std::string direction = "inf";
  bool as_json = false;

  auto* inf_cmd = app.add_subcommand("inf", "Closed-form infimum (numeric fallback in open regimes)");
  add_problem(inf_cmd, pa);
  add_oracle(inf_cmd, oa);
  inf_cmd->add_flag("--json", as_json, "JSON output");

  auto* sup_cmd = app.add_subcommand("sup", "Closed-form supremum (numeric fallback in open regimes)");
  add_problem(sup_cmd, pa);
  add_oracle(sup_cmd, oa);
  sup_cmd->add_flag("--json", as_json, "JSON output");

  auto* cp_cmd = app.add_subcommand("critical-points", "Enumerate two-value Lagrange critical points");
  add_problem(cp_cmd, pa);

  auto* oracle_cmd = app.add_subcommand("oracle", "Multistart numerical estimate");
  add_problem(oracle_cmd, pa);
  add_oracle(oracle_cmd, oa);
  oracle_cmd->add_option("--direction", direction, "inf or sup")->required()->check(CLI::IsMember({"inf", "sup"}));

  auto* cc_cmd = app.add_subcommand("crosscheck", "Compare the closed form with the oracle");
  add_problem(cc_cmd, pa);
  add_oracle(cc_cmd, oa);
  cc_cmd->add_option("--direction", direction, "inf or sup")->required()->check(CLI::IsMember({"inf", "sup"}));

  double cert_lambda = 8.0;
  int trials = 100000;
  std::uint64_t cert_seed = 1;
  auto* cert_cmd = app.add_subcommand("certify-imo", "Sample the three-variable inequality");
  cert_cmd->add_option("--lambda", cert_lambda, "lambda (>= 8 certifies the bound; below 8 probes its failure)")
      ->required();
  cert_cmd->add_option("--trials", trials, "Number of random triples");
  cert_cmd->add_option("--seed", cert_seed, "RNG seed");

  std::string grid_file;
  std::string csv_out;
  std::string summary_out;
  auto* explore_cmd = app.add_subcommand("explore", "Scan a parameter grid (default: the open regimes)");
  explore_cmd->add_option("--direction", direction, "inf or sup")->required()->check(CLI::IsMember({"inf", "sup"}));
  explore_cmd->add_option("--grid-file", grid_file, "JSON grid definition");
  explore_cmd->add_option("--out", csv_out, "CSV output path")->required();
  explore_cmd->add_option("--summary", summary_out, "Optional JSON summary path");
  add_oracle(explore_cmd, oa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;
    err << "gmext: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*inf_cmd) return cmd_extremum(Direction::inf, pa, oa, as_json, out);
    if (*sup_cmd) return cmd_extremum(Direction::sup, pa, oa, as_json, out);
    if (*cp_cmd) {
      const ExtremumProblem p(pa.alpha, pa.n, pa.lambda);
      json j = to_json(enumerate_critical_points_detailed(p));
      j["problem"] = to_json(p);
      print(out, j);
      return kExitOk;
    }
    if (*oracle_cmd) {
      const ExtremumProblem p(pa.alpha, pa.n, pa.lambda);
      json j = to_json(estimate(p, direction_of(direction), oa.config()));
      j["problem"] = to_json(p);
      print(out, j);
      return kExitOk;
    }
    if (*cc_cmd) {
      const ExtremumProblem p(pa.alpha, pa.n, pa.lambda);
      const CrosscheckReport rep = crosscheck(p, direction_of(direction), oa.config());
      json j = to_json(rep);
      j["problem"] = to_json(p);
      print(out, j);
      return rep.pass ? kExitOk : kExitCheckFailed;
    }
    if (*cert_cmd) {
      if (cert_lambda >= 8.0) {
        const auto rep = certify_eq1(cert_lambda, trials, cert_seed);
        print(out, to_json(rep));
        return rep.pass ? kExitOk : kExitCheckFailed;
      }
      const auto rep = probe_below_threshold(cert_lambda, trials, cert_seed);
      print(out, to_json(rep));
      return rep.pass ? kExitOk : kExitCheckFailed;
    }
    if (*explore_cmd) {
      const Direction d = direction_of(direction);
      const ScanGrid grid = grid_file.empty() ? default_grid(d) : load_grid(grid_file);
      const auto rows = scan_pairs(grid.pairs, grid.lambdas, d, oa.config());
      std::ofstream csv(csv_out);
      if (!csv) throw DomainError("cannot write '" + csv_out + "'");
      write_csv(csv, rows);
      const json summary = scan_summary(rows);
      if (!summary_out.empty()) {
        std::ofstream js(summary_out);
        if (!js) throw DomainError("cannot write '" + summary_out + "'");
        js << summary.dump(2) << '\n';
      }
      int bad = 0;
      for (const auto& r : rows) bad += row_ok(r) ? 0 : 1;
      print(out, {{"rows", rows.size()}, {"rows_not_ok", bad}, {"csv", csv_out},
                  {"summary", summary_out.empty() ? json(nullptr) : json(summary_out)}});
      return bad == 0 ? kExitOk : kExitCheckFailed;
    }
  } catch (const NumericFailure& e) {
    err << "gmext: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    err << "gmext: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gmext
