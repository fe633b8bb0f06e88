#include "qgeom/cli/commands.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qgeom/cli/state_spec.hpp"
#include "qgeom/cli/verify.hpp"
#include "qgeom/entanglement.hpp"
#include "qgeom/errors.hpp"
#include "qgeom/sampling.hpp"

namespace qgeom::cli {

namespace {

std::string render(const RunConfig& config, const std::string& command, const Table& table,
                   bool single_record, const Json& extra = Json::object()) {
  return config.format == Format::Csv ? render_csv(table)
                                      : render_json(command, table, single_record, extra);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{std::monostate{}};
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw InputError("--grid expects THETAxPHI, e.g. 50x50");
  try {
    std::size_t used_t = 0;
    std::size_t used_p = 0;
    const std::string t = text.substr(0, x);
    const std::string p = text.substr(x + 1);
    const long long theta_steps = std::stoll(t, &used_t);
    const long long phi_steps = std::stoll(p, &used_p);
    if (used_t != t.size() || used_p != p.size()) throw std::invalid_argument("trailing");
    if (theta_steps < 2 || phi_steps < 2) throw InputError("--grid steps must be at least 2");
    return {static_cast<std::size_t>(theta_steps), static_cast<std::size_t>(phi_steps)};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("--grid expects THETAxPHI with integer steps, got '" + text + "'");
  }
}

}  // namespace

CommandResult cmd_eval(const RunConfig& config) {
  if (config.state_file.has_value() == config.inline_state.has_value()) {
    throw InputError("eval needs exactly one of --state FILE or --inline JSON");
  }
  const std::string text = config.state_file ? read_file(*config.state_file) : *config.inline_state;
  const StateSpec spec = parse_state_spec(text, config.degrees);
  const DensityMatrix rho = to_density(spec);
  const ConcurrenceReport r = analyze(rho);

  Table table;
  table.columns = {"kind",           "c_s0",           "c_s1",           "c_mixed",
                   "c_mixed_reason", "c_wootters",     "residual",       "eof",
                   "proj_uu",        "proj_ud",        "proj_du",        "proj_dd",
                   "s0_cos_mean",    "s0_sin_mean",    "s0_cos_variance", "s0_sin_variance",
                   "s1_cos_mean",    "s1_sin_mean",    "s1_cos_variance", "s1_sin_variance",
                   "big_phi_mean",   "big_phi_variance"};
  const Cell reason = r.c_mixed ? Cell{std::monostate{}} : Cell{r.c_mixed_unavailable_reason};
  table.rows.push_back({kind_name(spec), r.c_s0, r.c_s1, optional_cell(r.c_mixed), reason, r.c_wootters,
                        optional_cell(r.residual), r.entanglement_of_formation, r.projectors.uu,
                        r.projectors.ud, r.projectors.du, r.projectors.dd, r.s0.cos_mean, r.s0.sin_mean,
                        r.s0.cos_variance, r.s0.sin_variance, r.s1.cos_mean, r.s1.sin_mean,
                        r.s1.cos_variance, r.s1.sin_variance, r.big_phi.mean, r.big_phi.variance});
  return {kExitOk, render(config, "eval", table, true)};
}

CommandResult cmd_sweep(const RunConfig& config) {
  if (config.theta_steps < 2 || config.phi_steps < 2) throw InputError("grid steps must be at least 2");
  const std::vector<double> thetas = theta_grid(config.theta_steps);
  const std::vector<double> phis = phi_grid(config.phi_steps);

  Table table;
  table.columns = {"theta",    "phi",      "c_geometric", "c_wootters",
                   "cos_mean", "sin_mean", "var_sum",     "big_phi_mean"};
  table.rows.resize(thetas.size() * phis.size());

  const unsigned shards = std::clamp<unsigned>(config.shards, 1, static_cast<unsigned>(thetas.size()));
  std::vector<std::exception_ptr> failures(shards);
  const auto work = [&](unsigned shard) {
    try {
      for (std::size_t i = shard; i < thetas.size(); i += shards) {
        for (std::size_t j = 0; j < phis.size(); ++j) {
          const DensityMatrix rho =
              density_from_pure(pure_state(PureStateParams(Sector::S0, thetas[i], phis[j])));
          const TrigExpectations e = trig_expectations(rho, Sector::S0);
          table.rows[i * phis.size() + j] = {thetas[i],
                                             phis[j],
                                             geometric_concurrence(rho, Sector::S0),
                                             wootters_concurrence(rho),
                                             e.cos_mean,
                                             e.sin_mean,
                                             e.cos_variance + e.sin_variance,
                                             big_phi_stats(rho).mean};
        }
      }
    } catch (...) {
      failures[shard] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned s = 1; s < shards; ++s) pool.emplace_back(work, s);
    work(0);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return {kExitOk, render(config, "sweep", table, false)};
}

CommandResult cmd_verify(const RunConfig& config) {
  VerifyOptions options;
  options.theta_steps = config.theta_steps;
  options.phi_steps = config.phi_steps;
  options.samples = config.samples;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  options.shards = config.shards;
  const std::vector<PropertyCheck> checks = run_verification(options);

  Table table;
  table.columns = {"property", "pass", "max_residual", "threshold", "detail"};
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    table.rows.push_back({c.name, c.pass, c.max_residual, c.threshold, c.detail});
  }
  Json extra = Json::object();
  extra["all_pass"] = all_pass;
  return {all_pass ? kExitOk : kExitVerificationFailed, render(config, "verify", table, false, extra)};
}

CommandResult cmd_compare_random(const RunConfig& config) {
  if (config.samples < 1) throw InputError("--samples must be at least 1");
  const RandomComparison cmp = compare_random_ensembles(config.samples, config.seed, config.shards);
  const bool pass = cmp.max_abs_diff <= config.tolerance;

  Table table;
  table.columns = {"samples", "seed", "max_abs_diff", "mean_abs_diff", "tolerance", "pass",
                   "worst_index", "worst_spec"};
  table.rows.push_back({static_cast<std::int64_t>(cmp.samples), std::to_string(config.seed), cmp.max_abs_diff,
                        cmp.mean_abs_diff, config.tolerance, pass, static_cast<std::int64_t>(cmp.worst_index),
                        to_json(cmp.worst)});
  return {pass ? kExitOk : kExitVerificationFailed, render(config, "compare-random", table, true)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric two-qubit entanglement: trigonometric angle operators and concurrence",
               "qubit-geometry"};
  RunConfig config;
  std::string command;
  std::string format = "json";
  std::string grid = "50x50";
  std::string seed_text = "42";

  app.add_option("command", command, "eval | sweep | verify | compare-random")
      ->required()
      ->check(CLI::IsMember({"eval", "sweep", "verify", "compare-random"}));
  auto* state_opt = app.add_option("--state", config.state_file, "StateSpec JSON file (eval)");
  app.add_option("--inline", config.inline_state, "StateSpec JSON text (eval)")->excludes(state_opt);
  app.add_option("--grid", grid, "THETAxPHI grid steps (sweep, verify)");
  app.add_option("--samples", config.samples, "random samples (verify, compare-random)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed_text, "master seed (unsigned 64-bit)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tolerance", config.tolerance, "oracle agreement threshold")
      ->check(CLI::PositiveNumber);
  app.add_flag("--degrees", config.degrees, "angles in StateSpec input are degrees");
  app.add_option("--output", config.output_file, "write output to FILE instead of stdout");
  app.add_option("--shards", config.shards, "worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u));

  std::vector<const char*> argv{"qubit-geometry"};
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult result{kExitOk, {}};
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    std::size_t used = 0;
    if (seed_text.empty() || seed_text.front() == '-') throw InputError("--seed must be an unsigned integer");
    try {
      config.seed = std::stoull(seed_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != seed_text.size()) throw InputError("--seed must be an unsigned integer");

    std::tie(config.theta_steps, config.phi_steps) = parse_grid(grid);
    config.format = format == "csv" ? Format::Csv : Format::Json;

    if (command == "eval") {
      config.command = Command::Eval;
      result = cmd_eval(config);
    } else if (command == "sweep") {
      config.command = Command::Sweep;
      result = cmd_sweep(config);
    } else if (command == "verify") {
      config.command = Command::Verify;
      result = cmd_verify(config);
    } else {
      config.command = Command::CompareRandom;
      result = cmd_compare_random(config);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  if (config.output_file) {
    std::ofstream file(*config.output_file, std::ios::binary | std::ios::trunc);
    if (file) file << result.output;
    if (!file || !file.flush()) {
      err << "error: cannot write output file '" << *config.output_file << "'\n";
      return kExitIoError;
    }
  } else {
    out << result.output;
    out.flush();
    if (!out) {
      err << "error: cannot write output\n";
      return kExitIoError;
    }
  }
  return result.exit_code;
}

}  // namespace qgeom::cli
