// Copyright 2026 the heatcount authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand evaluates one family of
// quantities of the pumped V-system on a parameter grid and writes a
// plot-ready CSV or JSON table. Identical configuration and seed produce
// byte-identical output.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "heatcount/bounds.hpp"
#include "heatcount/entropy.hpp"
#include "heatcount/ldf.hpp"
#include "heatcount/linalg.hpp"
#include "heatcount/montecarlo.hpp"
#include "heatcount/table.hpp"
#include "heatcount/tpm.hpp"
#include "heatcount/vmodel.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace heatcount;

constexpr const char* kVersion = "0.1.0";
constexpr double kAuditTolerance = 1e-9;

struct Options {
  double B = 1.0;
  double J = 1.0;
  double omega1 = 0.0;
  std::string beta = "1";
  double gamma = 4.0;
  double phi = M_PI / 2.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  double t_min = 0.0;
  double t_max = 6.3;
  int t_steps = 631;  // step 0.01/J at the default couplings
  std::optional<double> t_single;

  std::vector<double> etas;
  double eta_min = -1.0;
  double eta_max = 1.0;
  int eta_steps = 0;  // > 1 activates the range

  double scan_min = 0.1;
  double scan_max = 3.0;
  int scan_steps = 30;

  std::int64_t samples = 100000;

  std::string output;
  std::string format = "csv";
  std::string config_path;
};

// Flat key = value configuration file. Any flag may appear (without the
// leading dashes); unknown keys are rejected and command-line flags take
// precedence over file values.
void apply_config_file(CLI::App* cmd, Options& opt) {
  std::ifstream in(opt.config_path);
  if (!in)
    throw std::invalid_argument("cannot open config file: " + opt.config_path);

  const auto parse_double = [](const std::string& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const double x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw std::invalid_argument("config key '" + key +
                                  "': expected a number, got '" + v + "'");
    }
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const bool overridden = cmd->count("--" + key) > 0;

    if (key == "B") {
      if (!overridden) opt.B = parse_double(key, value);
    } else if (key == "J") {
      if (!overridden) opt.J = parse_double(key, value);
    } else if (key == "omega1") {
      if (!overridden) opt.omega1 = parse_double(key, value);
    } else if (key == "beta") {
      if (!overridden) opt.beta = value;
    } else if (key == "gamma") {
      if (!overridden) opt.gamma = parse_double(key, value);
    } else if (key == "phi") {
      if (!overridden) opt.phi = parse_double(key, value);
    } else if (key == "alpha") {
      if (!overridden) opt.alpha = parse_double(key, value);
    } else if (key == "seed") {
      if (!overridden) opt.seed = std::stoull(value);
    } else if (key == "t") {
      if (!overridden) opt.t_single = parse_double(key, value);
    } else if (key == "t-min") {
      if (!overridden) opt.t_min = parse_double(key, value);
    } else if (key == "t-max") {
      if (!overridden) opt.t_max = parse_double(key, value);
    } else if (key == "t-steps") {
      if (!overridden) opt.t_steps = static_cast<int>(std::stoll(value));
    } else if (key == "eta") {
      if (!overridden) {
        opt.etas.clear();
        std::istringstream vs(value);
        std::string item;
        while (vs >> item) opt.etas.push_back(parse_double(key, item));
      }
    } else if (key == "eta-min") {
      if (!overridden) opt.eta_min = parse_double(key, value);
    } else if (key == "eta-max") {
      if (!overridden) opt.eta_max = parse_double(key, value);
    } else if (key == "eta-steps") {
      if (!overridden) opt.eta_steps = static_cast<int>(std::stoll(value));
    } else if (key == "scan-min") {
      if (!overridden) opt.scan_min = parse_double(key, value);
    } else if (key == "scan-max") {
      if (!overridden) opt.scan_max = parse_double(key, value);
    } else if (key == "scan-steps") {
      if (!overridden) opt.scan_steps = static_cast<int>(std::stoll(value));
    } else if (key == "samples") {
      if (!overridden) opt.samples = std::stoll(value);
    } else if (key == "output") {
      if (!overridden) opt.output = value;
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw std::invalid_argument("config key 'format': csv or json");
      if (!overridden) opt.format = value;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

Beta parse_beta(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "Inf") {
    return Beta::infinite();
  }
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("--beta: expected a number or 'inf', got '" +
                                text + "'");
  }
  return Beta(value);
}

ModelParams model_params(const Options& opt) {
  if (opt.B < 0.0 || opt.J < 0.0 || opt.omega1 < 0.0)
    throw std::invalid_argument("B, J and omega1 must be non-negative");
  ModelParams p;
  p.B = opt.B;
  p.J = opt.J;
  p.omega1 = opt.omega1;
  p.beta = parse_beta(opt.beta);
  p.gamma = opt.gamma;
  p.phi = opt.phi;
  p.alpha = opt.alpha;
  return p;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (!(hi > lo))
    throw std::invalid_argument("grid upper end must exceed lower end");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double dx = (hi - lo) / (steps - 1);
  for (int k = 0; k < steps; ++k)
    grid[static_cast<std::size_t>(k)] = lo + k * dx;
  return grid;
}

std::vector<double> time_grid(const Options& opt) {
  if (opt.t_single) return {*opt.t_single};
  return linspace(opt.t_min, opt.t_max, opt.t_steps);
}

std::vector<double> eta_grid(const Options& opt,
                             const std::vector<double>& fallback) {
  std::vector<double> etas = opt.etas;
  if (opt.eta_steps > 1) {
    const auto range = linspace(opt.eta_min, opt.eta_max, opt.eta_steps);
    etas.insert(etas.end(), range.begin(), range.end());
  }
  if (etas.empty()) etas = fallback;
  if (etas.empty()) throw std::invalid_argument("eta grid is empty");
  return etas;
}

double finite_beta(const ModelParams& p, const char* command) {
  if (p.beta.is_infinite())
    throw std::invalid_argument(std::string(command) +
                                ": finite --beta required");
  return p.beta.value();
}

RunMeta base_meta(const std::string& command, const Options& opt) {
  RunMeta meta;
  meta.add("command", command);
  meta.add("version", kVersion);
  meta.add("seed", std::to_string(opt.seed));
  meta.add("B", format_double(opt.B));
  meta.add("J", format_double(opt.J));
  meta.add("omega1", format_double(opt.omega1));
  meta.add("beta", opt.beta);
  meta.add("gamma", format_double(opt.gamma));
  meta.add("phi", format_double(opt.phi));
  meta.add("alpha", format_double(opt.alpha));
  if (opt.t_single) {
    meta.add("t", format_double(*opt.t_single));
  } else {
    meta.add("t_min", format_double(opt.t_min));
    meta.add("t_max", format_double(opt.t_max));
    meta.add("t_steps", std::to_string(opt.t_steps));
  }
  if (!opt.etas.empty()) {
    std::string list;
    for (double e : opt.etas) {
      if (!list.empty()) list += ' ';
      list += format_double(e);
    }
    meta.add("eta", list);
  }
  if (opt.eta_steps > 1) {
    meta.add("eta_min", format_double(opt.eta_min));
    meta.add("eta_max", format_double(opt.eta_max));
    meta.add("eta_steps", std::to_string(opt.eta_steps));
  }
  meta.add("format", opt.format);
  return meta;
}

Table run_cgf(const Options& opt) {
  const ModelParams p = model_params(opt);
  const auto etas = eta_grid(opt, {0.0});
  Table table;
  table.columns = {"t", "eta", "theta"};
  const VPropagator prop(p);
  const DensityMatrix rho0 = initial_density(p);
  const Operator h_env = env_hamiltonian_op(p);
  for (double t : time_grid(opt)) {
    const auto dist =
        heat_distribution(joint_distribution(prop.at(t), rho0, h_env, p.beta));
    for (double eta : etas)
      table.rows.push_back({t, eta, cgf_from_distribution(dist, eta)});
  }
  return table;
}

Table run_heat(const Options& opt) {
  const ModelParams p = model_params(opt);
  const double t = opt.t_single.value_or(M_PI / 4.0);
  Table table;
  table.columns = {"q", "prob"};
  for (const auto& atom : vmodel_heat_distribution(p, t).atoms)
    table.rows.push_back({atom.q, atom.prob});
  return table;
}

Table run_bounds(const Options& opt) {
  const ModelParams p = model_params(opt);
  const double beta = finite_beta(p, "bounds");
  const auto etas = eta_grid(opt, {beta});
  for (double eta : etas)
    if (eta == 0.0)
      throw std::invalid_argument("bounds: eta = 0 is not allowed");

  Table table;
  table.columns = {"t", "beta_mean_q"};
  for (double eta : etas)
    table.columns.push_back("bound_eta_" + format_double(eta));

  const VPropagator prop(p);
  const DensityMatrix rho0 = initial_density(p);
  const Operator h_env = env_hamiltonian_op(p);
  for (double t : time_grid(opt)) {
    const auto dist =
        heat_distribution(joint_distribution(prop.at(t), rho0, h_env, p.beta));
    const auto cgf = [&dist](double eta) {
      return cgf_from_distribution(dist, eta);
    };
    const BoundReport report = bound_family(cgf, beta, cumulant(dist, 1), etas);
    std::vector<double> row = {t, report.beta_mean_q};
    std::size_t lo = 0, up = 0;
    for (double eta : etas)
      row.push_back(eta > 0.0 ? report.lower[lo++].second
                              : report.upper[up++].second);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table run_populations(const Options& opt) {
  const ModelParams p = model_params(opt);
  Table table;
  table.columns = {"t", "rho00", "rho11", "rho22"};
  for (double t : time_grid(opt)) {
    const auto pops = populations(p, t);
    table.rows.push_back({t, pops[0], pops[1], pops[2]});
  }
  return table;
}

Table run_dscan(const Options& opt, RunMeta& meta) {
  const ModelParams p = model_params(opt);
  finite_beta(p, "dscan");
  const auto omega1_values =
      linspace(opt.scan_min, opt.scan_max, opt.scan_steps);
  const auto scan =
      gap_scan(p, omega1_values, opt.t_min, opt.t_max, opt.t_steps);
  meta.add("scan_min", format_double(opt.scan_min));
  meta.add("scan_max", format_double(opt.scan_max));
  meta.add("scan_steps", std::to_string(opt.scan_steps));
  Table table;
  table.columns = {"omega1", "d_value", "max_beta_mean_q", "max_bound"};
  for (std::size_t i = 0; i < scan.omega1_values.size(); ++i)
    table.rows.push_back({scan.omega1_values[i], scan.d_values[i],
                          scan.max_beta_mean_q[i], scan.max_bound[i]});
  return table;
}

Table run_ldf(const Options& opt, RunMeta& meta) {
  Options with_range = opt;
  if (with_range.etas.empty() && with_range.eta_steps <= 1)
    with_range.eta_steps = 201;
  const ModelParams p = model_params(opt);
  const LDFCurve curve = ldf(p, eta_grid(with_range, {}));
  meta.add("kink", format_double(curve.kink));
  Table table;
  table.columns = {"eta", "theta", "b_lower", "b_upper"};
  for (std::size_t i = 0; i < curve.etas.size(); ++i)
    table.rows.push_back({curve.etas[i], curve.theta[i],
                          curve.lower_stationary[i],
                          curve.upper_stationary[i]});
  return table;
}

Table run_audit(const Options& opt, int& exit_code) {
  const ModelParams p = model_params(opt);
  finite_beta(p, "audit");
  const Operator h_total = interaction_hamiltonian(p);
  const DensityMatrix rho0 = initial_density(p);
  const Operator h_env = env_hamiltonian_op(p);
  Table table;
  table.columns = {"t",           "beta_mean_q",     "delta_s",
                   "mutual_info", "env_rel_entropy", "residual"};
  double worst = 0.0;
  for (double t : time_grid(opt)) {
    const LandauerAudit audit = landauer_audit(h_total, rho0, h_env, p.beta, t);
    worst = std::max(worst, std::abs(audit.residual()));
    table.rows.push_back({t, audit.beta_mean_q, audit.delta_s,
                          audit.mutual_info, audit.env_relative_entropy,
                          audit.residual()});
  }
  if (worst > kAuditTolerance) {
    std::cerr << "audit: identity residual " << worst << " exceeds "
              << kAuditTolerance << "\n";
    exit_code = 3;
  }
  return table;
}

Table run_mc(const Options& opt, RunMeta& meta) {
  const ModelParams p = model_params(opt);
  const double t = opt.t_single.value_or(M_PI / 4.0);
  meta.add("samples", std::to_string(opt.samples));
  const Operator u = VPropagator(p).at(t);
  const DensityMatrix rho0 = initial_density(p);
  const Operator h_env = env_hamiltonian_op(p);
  const auto exact =
      heat_distribution(joint_distribution(u, rho0, h_env, p.beta));
  const auto empirical =
      mc_sample_heat(u, rho0, h_env, p.beta, opt.samples, opt.seed);

  Table table;
  table.columns = {"q", "prob_exact", "prob_mc", "count"};
  const double tolerance = 1e-6;
  for (const auto& atom : exact.atoms) {
    double p_mc = 0.0;
    double count = 0.0;
    for (std::size_t i = 0; i < empirical.q.size(); ++i) {
      if (std::abs(empirical.q[i] - atom.q) <= tolerance) {
        count = static_cast<double>(empirical.counts[i]);
        p_mc = count / static_cast<double>(empirical.n_samples);
      }
    }
    table.rows.push_back({atom.q, atom.prob, p_mc, count});
  }
  return table;
}

Table run_nonunitality(const Options& opt) {
  const ModelParams p = model_params(opt);
  Table table;
  table.columns = {"t", "n_e"};
  const VPropagator prop(p);
  const DensityMatrix rho0 = initial_density(p);
  for (double t : time_grid(opt))
    table.rows.push_back({t, non_unitality(prop.at(t), rho0)});
  return table;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--B", opt.B, "Field strength");
  cmd->add_option("--J", opt.J, "System-environment coupling");
  cmd->add_option("--omega1", opt.omega1, "Pump Rabi frequency");
  cmd->add_option("--beta", opt.beta, "Inverse temperature (number or 'inf')");
  cmd->add_option("--gamma", opt.gamma, "Damping constant (ldf)");
  cmd->add_option("--phi", opt.phi, "Initial-state angle phi");
  cmd->add_option("--alpha", opt.alpha, "Initial-state angle alpha");
  cmd->add_option("--seed", opt.seed, "RNG seed");
  cmd->add_option("--t", opt.t_single, "Single evaluation time");
  cmd->add_option("--t-min", opt.t_min, "Time grid start");
  cmd->add_option("--t-max", opt.t_max, "Time grid end");
  cmd->add_option("--t-steps", opt.t_steps, "Time grid points");
  cmd->add_option("--eta", opt.etas, "Counting parameter value(s)");
  cmd->add_option("--eta-min", opt.eta_min, "Eta grid start");
  cmd->add_option("--eta-max", opt.eta_max, "Eta grid end");
  cmd->add_option("--eta-steps", opt.eta_steps, "Eta grid points");
  cmd->add_option("--scan-min", opt.scan_min, "Omega1 scan start (dscan)");
  cmd->add_option("--scan-max", opt.scan_max, "Omega1 scan end (dscan)");
  cmd->add_option("--scan-steps", opt.scan_steps, "Omega1 scan points (dscan)");
  cmd->add_option("--samples", opt.samples, "Monte Carlo sample count");
  cmd->add_option("-o,--output", opt.output, "Output path (default: stdout)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", opt.config_path,
                  "Flat key = value configuration file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Full counting statistics of dissipated heat for a pumped "
      "V-system coupled to a thermal qubit"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"cgf", "Cumulant generating function Theta(eta, beta, t)"},
      {"heat", "Heat distribution at a single time"},
      {"bounds", "Mean dissipated heat with lower/upper bound families"},
      {"populations", "V-system level populations"},
      {"dscan", "Max-heat minus max-bound gap over a pump-strength scan"},
      {"ldf", "Large-deviation function of the damped model"},
      {"audit", "Heat-entropy-information balance; fails on residual"},
      {"mc", "Monte Carlo sampling of the measurement protocol"},
      {"nonunitality", "Frobenius distance of the Kraus sum from identity"},
  };

  Options opt;
  for (const auto& [name, description] : commands)
    add_common_options(app.add_subcommand(name, description), opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  int exit_code = 0;
  try {
    CLI::App* active = app.get_subcommands().front();
    const std::string command = active->get_name();
    if (!opt.config_path.empty()) apply_config_file(active, opt);
    RunMeta meta = base_meta(command, opt);
    Table table;
    if (command == "cgf") {
      table = run_cgf(opt);
    } else if (command == "heat") {
      table = run_heat(opt);
    } else if (command == "bounds") {
      table = run_bounds(opt);
    } else if (command == "populations") {
      table = run_populations(opt);
    } else if (command == "dscan") {
      table = run_dscan(opt, meta);
    } else if (command == "ldf") {
      table = run_ldf(opt, meta);
    } else if (command == "audit") {
      table = run_audit(opt, exit_code);
    } else if (command == "mc") {
      table = run_mc(opt, meta);
    } else {
      table = run_nonunitality(opt);
    }
    write_table(table, meta, opt.output,
                opt.format == "json" ? OutputFormat::json : OutputFormat::csv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
