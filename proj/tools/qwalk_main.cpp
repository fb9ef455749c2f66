#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/closedform.hpp"
#include "qwalk/evolver.hpp"
#include "qwalk/output.hpp"
#include "qwalk/pathsum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompareFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct SpecOptions {
  int steps = 0;
  double theta_radians = 0.0;
  std::string theta_pi;
  bool theta_radians_set = false;
  double alpha = 1.0;
  double beta = 0.0;
  double phi = 0.0;
};

struct EngineOptions {
  int paths_cap = qwalk::kDefaultPathCap;
  bool parallel = false;
};

long long parse_ll(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

qwalk::CoinAngle parse_theta_pi(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return qwalk::CoinAngle::from_pi_fraction(parse_ll(text), 1);
  return qwalk::CoinAngle::from_pi_fraction(parse_ll(text.substr(0, slash)),
                                            parse_ll(text.substr(slash + 1)));
}

qwalk::WalkSpec build_spec(const SpecOptions& opt) {
  qwalk::WalkSpec spec;
  spec.steps = opt.steps;
  if (!opt.theta_pi.empty())
    spec.theta = parse_theta_pi(opt.theta_pi);
  else if (opt.theta_radians_set)
    spec.theta = qwalk::CoinAngle::from_radians(opt.theta_radians);
  else
    spec.theta = qwalk::CoinAngle::from_pi_fraction(1, 4);  // Hadamard walk
  spec.alpha = opt.alpha;
  spec.beta = opt.beta;
  spec.phi = opt.phi;
  spec.validate();
  return spec;
}

void add_spec_options(CLI::App* cmd, SpecOptions& opt) {
  cmd->add_option("--steps", opt.steps, "Number of walk steps n");
  auto* theta = cmd->add_option("--theta", opt.theta_radians, "Coin angle in radians");
  auto* theta_pi =
      cmd->add_option("--theta-pi", opt.theta_pi,
                      "Coin angle as a rational multiple p/q of pi (default 1/4, the Hadamard walk); "
                      "quadrant multiples use exact trig values");
  theta->excludes(theta_pi);
  theta_pi->excludes(theta);
  cmd->parse_complete_callback([theta, &opt] { opt.theta_radians_set = theta->count() > 0; });
  cmd->add_option("--alpha", opt.alpha, "Real initial amplitude of coin 0");
  cmd->add_option("--beta", opt.beta, "Real initial amplitude of coin 1");
  cmd->add_option("--phi", opt.phi, "Relative phase of the coin-1 amplitude, radians");
}

void add_engine_options(CLI::App* cmd, EngineOptions& opt) {
  cmd->add_option("--paths-cap", opt.paths_cap, "Step cap for the paths engine")
      ->check(CLI::Range(0, qwalk::kMaxPathCap));
  cmd->add_flag("--parallel", opt.parallel,
                "Parallel path enumeration (paths engine); relaxes bit-determinism to 1e-12");
}

qwalk::StateVector run_engine(const std::string& name, const qwalk::WalkSpec& spec,
                              const EngineOptions& eng) {
  if (name == "evolve") return qwalk::evolve(spec);
  if (name == "closed") return qwalk::closed_state(spec);
  if (name == "paths") {
    if (spec.steps > qwalk::kDefaultPathCap && spec.steps <= eng.paths_cap) {
      std::cerr << "warning: enumerating 2^" << spec.steps + 1
                << " paths above the default cap; expect a long run\n";
    }
    return qwalk::sum_over_paths(spec, {eng.paths_cap, eng.parallel});
  }
  throw std::invalid_argument("unknown engine '" + name + "'");
}

int cmd_run(const SpecOptions& sopt, const EngineOptions& eopt, const std::string& engine,
            const std::string& format) {
  const qwalk::WalkSpec spec = build_spec(sopt);
  const qwalk::StateVector state = run_engine(engine, spec, eopt);
  if (format == "json") {
    std::cout << qwalk::state_json(spec, engine, state).dump(2) << '\n';
  } else {
    qwalk::write_csv_header(std::cout);
    qwalk::write_csv_rows(std::cout, state);
  }
  return kExitOk;
}

int cmd_compare(const SpecOptions& sopt, const EngineOptions& eopt, const std::string& engines_csv,
                double tolerance, const std::string& perturb) {
  // Canonical engine order keeps the report deterministic.
  static const std::vector<std::string> known = {"evolve", "paths", "closed"};
  std::vector<std::string> requested;
  for (std::size_t begin = 0; begin <= engines_csv.size();) {
    const std::size_t comma = std::min(engines_csv.find(',', begin), engines_csv.size());
    const std::string token = engines_csv.substr(begin, comma - begin);
    if (std::find(known.begin(), known.end(), token) == known.end()) {
      throw std::invalid_argument("unknown engine '" + token + "' in --engines");
    }
    if (std::find(requested.begin(), requested.end(), token) == requested.end()) requested.push_back(token);
    begin = comma + 1;
  }
  std::vector<std::string> engines;
  for (const auto& name : known) {
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) engines.push_back(name);
  }
  if (engines.size() < 2) throw std::invalid_argument("compare needs at least two engines");

  std::string perturbed_engine;
  double perturb_delta = 0.0;
  if (!perturb.empty()) {
    const auto colon = perturb.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--perturb expects engine:delta");
    perturbed_engine = perturb.substr(0, colon);
    perturb_delta = std::stod(perturb.substr(colon + 1));
    if (std::find(known.begin(), known.end(), perturbed_engine) == known.end()) {
      throw std::invalid_argument("--perturb names unknown engine '" + perturbed_engine + "'");
    }
  }

  const qwalk::WalkSpec spec = build_spec(sopt);
  std::vector<qwalk::StateVector> states;
  states.reserve(engines.size());
  for (const auto& name : engines) {
    qwalk::WalkSpec engine_spec = spec;
    if (name == perturbed_engine) {
      engine_spec.theta = qwalk::CoinAngle::from_radians(spec.theta.radians + perturb_delta);
    }
    const auto start = std::chrono::steady_clock::now();
    states.push_back(run_engine(name, engine_spec, eopt));
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "# time " << name << " = " << elapsed.count() << " ms\n";
  }

  double worst = 0.0;
  int worst_coin = 0;
  int worst_x = 0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      for (const auto& e : states[a].entries()) {
        const double d = std::abs(e.amp - states[b].at(e.coin, e.x));
        if (d > worst) {
          worst = d;
          worst_coin = e.coin;
          worst_x = e.x;
        }
      }
    }
  }

  std::string joined;
  for (const auto& name : engines) joined += (joined.empty() ? "" : ",") + name;
  std::cout << "engines " << joined << '\n';
  std::cout << "max-discrepancy " << qwalk::format_g17(worst) << '\n';
  std::cout << "tolerance " << qwalk::format_g17(tolerance) << '\n';
  const bool ok = worst <= tolerance;
  if (!ok) {
    std::cout << "worst coin=" << worst_coin << " x=" << worst_x << '\n';
    for (std::size_t i = 0; i < engines.size(); ++i) {
      const qwalk::Amplitude v = states[i].at(worst_coin, worst_x);
      std::cout << "value[" << engines[i] << "] = " << qwalk::format_g17(v.real()) << ','
                << qwalk::format_g17(v.imag()) << '\n';
    }
  }
  std::cout << "result " << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitCompareFailed;
}

int cmd_sweep(const SpecOptions& sopt, const EngineOptions& eopt, const std::string& vary,
              double from, double to, double step_size, const std::string& engine,
              const std::string& format) {
  constexpr long kMaxPoints = 10000;
  if (!(step_size > 0.0) || to < from) throw std::invalid_argument("sweep range must be monotone with positive step");
  const long points = static_cast<long>(std::floor((to - from) / step_size + 1e-9)) + 1;
  if (points > kMaxPoints) {
    throw std::invalid_argument("sweep range has " + std::to_string(points) + " points (limit " +
                                std::to_string(kMaxPoints) + ")");
  }
  const bool vary_steps = vary == "steps";
  if (vary_steps) {
    for (const double v : {from, to, step_size}) {
      if (std::abs(v - std::round(v)) > 1e-9) throw std::invalid_argument("steps sweep needs integer range");
    }
    if (from < 0) throw std::invalid_argument("steps sweep needs non-negative range");
  }

  auto blocks = nlohmann::ordered_json::array();
  if (format != "json") qwalk::write_csv_header(std::cout);
  for (long k = 0; k < points; ++k) {
    SpecOptions current = sopt;
    double value = 0.0;
    if (vary_steps) {
      current.steps = static_cast<int>(std::llround(from + static_cast<double>(k) * step_size));
      value = current.steps;
    } else {
      current.theta_radians = from + static_cast<double>(k) * step_size;
      current.theta_radians_set = true;
      current.theta_pi.clear();
      value = current.theta_radians;
    }
    const qwalk::WalkSpec spec = build_spec(current);
    const qwalk::StateVector state = run_engine(engine, spec, eopt);
    if (format == "json") {
      blocks.push_back(qwalk::state_json(spec, engine, state));
    } else {
      if (vary_steps)
        std::cout << "# steps=" << current.steps << '\n';
      else
        std::cout << "# theta=" << qwalk::format_g17(value) << '\n';
      qwalk::write_csv_rows(std::cout, state);
    }
  }
  if (format == "json") std::cout << blocks.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walk amplitude engines"};
  app.require_subcommand(1);

  SpecOptions sopt;
  EngineOptions eopt;

  auto* run = app.add_subcommand("run", "Run one engine and emit the step-n state");
  std::string run_engine_name;
  std::string run_format = "csv";
  run->add_option("--engine", run_engine_name, "Engine: evolve, paths, or closed")
      ->required()
      ->check(CLI::IsMember({"evolve", "paths", "closed"}));
  run->add_option("--format", run_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  add_spec_options(run, sopt);
  add_engine_options(run, eopt);

  auto* compare = app.add_subcommand("compare", "Run several engines and compare amplitudes");
  std::string engines_csv = "evolve,paths,closed";
  double tolerance = 1e-12;
  std::string perturb;
  compare->add_option("--engines", engines_csv, "Comma-separated engine list (default all three)");
  compare->add_option("--tol", tolerance, "Maximum allowed entrywise discrepancy");
  compare->add_option("--perturb", perturb,
                      "engine:delta — offset one engine's coin angle (negative-control aid)");
  add_spec_options(compare, sopt);
  add_engine_options(compare, eopt);

  auto* sweep = app.add_subcommand("sweep", "Emit one distribution block per parameter value");
  std::string vary;
  std::string sweep_engine = "evolve";
  std::string sweep_format = "csv";
  double from = 0.0;
  double to = 0.0;
  double step_size = 1.0;
  sweep->add_option("--vary", vary, "Swept parameter")->required()->check(CLI::IsMember({"theta", "steps"}));
  sweep->add_option("--from", from, "First value")->required();
  sweep->add_option("--to", to, "Last value (inclusive)")->required();
  sweep->add_option("--step", step_size, "Increment (default 1)");
  sweep->add_option("--engine", sweep_engine, "Engine")->check(CLI::IsMember({"evolve", "paths", "closed"}));
  sweep->add_option("--format", sweep_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  add_spec_options(sweep, sopt);
  add_engine_options(sweep, eopt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(run)) return cmd_run(sopt, eopt, run_engine_name, run_format);
    if (app.got_subcommand(compare)) return cmd_compare(sopt, eopt, engines_csv, tolerance, perturb);
    return cmd_sweep(sopt, eopt, vary, from, to, step_size, sweep_engine, sweep_format);
  } catch (const qwalk::PathCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
