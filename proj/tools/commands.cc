// Copyright 2026 The gmnl Authors
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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "gmnl/errors.h"
#include "gmnl/rng.h"
#include "io.h"

namespace gmnl::tools {

using nlohmann::json;

void RunOptions::validate() const {
  certify.validate();
  if (n < 3) throw InputError("--n: must be at least 3");
  if (count < 0) throw InputError("--count: must be non-negative");
  if (points < 2) throw InputError("--points: need at least 2 points");
  if (variant != "literal" && variant != "generalized" && variant != "both") {
    throw InputError("--variant: expected literal, generalized or both");
  }
  if (model != "deterministic" && model != "no-signaling") {
    throw InputError("--model: expected deterministic or no-signaling");
  }
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const RunOptions& opts, std::ostream& out, const std::string& text) {
  if (!opts.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*opts.out_path);
  if (!file) throw InputError("--out: cannot write " + *opts.out_path);
  file << text;
}

NearSymmetricState required_state(const RunOptions& opts) {
  if (!opts.state_path) throw InputError("--state: required");
  return load_state_file(*opts.state_path);
}

int certify_and_emit(const NearSymmetricState& s, const RunOptions& opts,
                     std::ostream& out, std::ostream& err) {
  const CertificationReport report = certify(s, opts.certify);
  emit(opts, out, report_to_json(report).dump(2) + "\n");
  if (!oracle::verify_pipeline(s, report)) {
    err << "internal consistency failure: oracle recomputation disagrees with the report\n";
    return kExitInternalFailure;
  }
  if (!report.verdict) err << "verdict false: " << report.failure_reason << "\n";
  return report.verdict ? kExitSuccess : kExitVerdictFalse;
}

// Runs body, mapping input errors to exit code 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

NearSymmetricState demo_state(const std::string& family, int n) {
  if (family == "ghz") return ghz_state(n);
  if (family == "w") return w_state(n);
  const std::string prefix = "dicke-";
  if (family.rfind(prefix, 0) == 0 && family.size() > prefix.size()) {
    const std::string digits = family.substr(prefix.size());
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 4) {
      const int k = std::stoi(digits);
      if (k > n) throw InputError("--family: dicke-k needs k <= n");
      return dicke_state(n, k);
    }
  }
  throw InputError("--family: unknown family '" + family + "' (expected ghz, w, dicke-<k>)");
}

}  // namespace

int cmd_certify(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.validate();
    return certify_and_emit(required_state(opts), opts, out, err);
  });
}

int cmd_demo(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.validate();
    return certify_and_emit(demo_state(opts.family, opts.n), opts, out, err);
  });
}

int cmd_sweep(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.validate();
    const NearSymmetricState s = required_state(opts);
    const PolyCoeffs poly = c_coefficients(s);
    const DenseState psi = embed(s);
    std::ostringstream csv;
    csv << "alpha,poly_abs,ent_margin,nonmax_margin,catalonia_lhs\n";
    for (double alpha : alpha_grid(opts.points)) {
      const AlphaSelection sel = evaluate_alpha(s, alpha, opts.certify.margins);
      std::string lhs;
      if (sel.valid) {
        try {
          const auto m = assemble(s.n, hardy_vectors(residual_coeffs(s, alpha),
                                                     opts.certify.margins.norm));
          lhs = format_double(catalonia_lhs(psi, m));
        } catch (const DegenerateGeometryError&) {
        }
      }
      csv << format_double(alpha) << ',' << format_double(std::abs(poly_eval(poly, alpha)))
          << ',' << format_double(sel.entanglement_margin) << ','
          << format_double(sel.non_maximality_margin) << ',' << lhs << '\n';
    }
    emit(opts, out, csv.str());
    err << "sampled polynomial roots: " << sampled_root_count(poly, opts.points)
        << " (bound " << 2 * s.n - 4 << ")\n";
    return static_cast<int>(kExitSuccess);
  });
}

int cmd_random(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opts.validate();
    const auto start = std::chrono::steady_clock::now();
    NormalSampler seeds(opts.seed);
    int passed = 0;
    int oracle_failures = 0;
    double max_residual = 0.0;
    double min_lhs = std::numeric_limits<double>::infinity();
    std::vector<double> hardy_probabilities;
    for (int i = 0; i < opts.count; ++i) {
      const NearSymmetricState s = random_near_symmetric(opts.n, seeds.next_bits());
      const CertificationReport report = certify(s, opts.certify);
      if (report.verdict) ++passed;
      if (!oracle::verify_pipeline(s, report)) ++oracle_failures;
      if (report.values) {
        max_residual = std::max(max_residual, report.values->hardy.max_residual());
        hardy_probabilities.push_back(report.values->hardy.p18);
        min_lhs = std::min(min_lhs, report.values->catalonia_lhs);
      }
    }
    std::sort(hardy_probabilities.begin(), hardy_probabilities.end());
    json summary{{"n", opts.n},
                 {"count", opts.count},
                 {"seed", opts.seed},
                 {"passed", passed},
                 {"failed", opts.count - passed},
                 {"oracle_failures", oracle_failures},
                 {"max_residual", max_residual}};
    if (hardy_probabilities.empty()) {
      summary["min_hardy_probability"] = nullptr;
      summary["median_hardy_probability"] = nullptr;
      summary["min_catalonia_lhs"] = nullptr;
    } else {
      const std::size_t len = hardy_probabilities.size();
      const double median = len % 2 ? hardy_probabilities[len / 2]
                                    : 0.5 * (hardy_probabilities[len / 2 - 1] +
                                             hardy_probabilities[len / 2]);
      summary["min_hardy_probability"] = hardy_probabilities.front();
      summary["median_hardy_probability"] = median;
      summary["min_catalonia_lhs"] = min_lhs;
    }
    emit(opts, out, summary.dump(2) + "\n");
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    err << "wall time: " << wall.count() << " s\n";
    if (oracle_failures > 0) return static_cast<int>(kExitInternalFailure);
    return static_cast<int>(passed == opts.count ? kExitSuccess : kExitVerdictFalse);
  });
}

int cmd_check_bilocal(const RunOptions& opts, std::ostream& out, std::ostream& err,
                      std::span<const oracle::NamedGap> gap_override) {
  return guarded(err, [&] {
    opts.validate();
    std::vector<oracle::NamedGap> gaps;
    if (!gap_override.empty()) {
      gaps.assign(gap_override.begin(), gap_override.end());
    } else {
      for (auto& g : oracle::standard_gaps()) {
        const bool wanted = g.name == "improved" ||
                            (g.name == "curchod-literal" && opts.variant != "generalized") ||
                            (g.name == "curchod-generalized" && opts.variant != "literal");
        if (wanted) gaps.push_back(std::move(g));
      }
    }

    oracle::ClassicalBoundSummary summary;
    std::string mode;
    if (opts.model == "no-signaling") {
      if (opts.n != 3) throw InputError("--model no-signaling: supports --n 3 only");
      summary = oracle::check_classical_bound(opts.n, oracle::enumerate_ns_bilocal_extremes(3),
                                              gaps);
      mode = "exhaustive";
    } else if (opts.n == 3) {
      summary = oracle::check_classical_bound(opts.n, oracle::enumerate_bilocal_extremes(3),
                                              gaps);
      mode = "exhaustive";
    } else {
      summary = oracle::check_classical_bound(
          opts.n, oracle::sample_bilocal_strategies(opts.n, opts.samples, opts.seed), gaps);
      mode = "sampled";
    }

    json violations = json::object();
    json max_gap = json::object();
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      violations[gaps[g].name] = std::count_if(
          summary.violations.begin(), summary.violations.end(),
          [&](const oracle::BoundViolation& v) { return v.gap_name == gaps[g].name; });
      max_gap[gaps[g].name] = summary.max_gap[g];
    }
    json result{{"n", opts.n},
                {"model", opts.model},
                {"mode", mode},
                {"checked", summary.checked},
                {"violations", violations},
                {"max_gap", max_gap}};
    if (summary.holds()) {
      result["first_violation"] = nullptr;
    } else {
      const auto& v = summary.violations.front();
      result["first_violation"] = {{"index", v.strategy_index},
                                   {"gap", v.gap_name},
                                   {"value", v.gap},
                                   {"strategy", v.strategy}};
    }
    emit(opts, out, result.dump(2) + "\n");
    err << "checked " << summary.checked << " strategies\n";
    if (!summary.holds()) {
      err << "classical bound violated: " << summary.violations.front().gap_name << " = "
          << summary.violations.front().gap << " at " << summary.violations.front().strategy
          << "\n";
      return static_cast<int>(kExitInternalFailure);
    }
    return static_cast<int>(kExitSuccess);
  });
}

namespace {

void add_certify_flags(CLI::App* cmd, RunOptions& o, double& alpha) {
  cmd->add_option("--tol-residual", o.certify.residual_tolerance,
                  "Hardy zero-probability tolerance");
  cmd->add_option("--tol-purity", o.certify.purity_tolerance,
                  "GME test: reduced purity must be <= 1 - tol");
  cmd->add_option("--eps-ent", o.certify.margins.entanglement, "Entanglement margin");
  cmd->add_option("--eps-max", o.certify.margins.non_maximality, "Non-maximality margin");
  cmd->add_option("--eps-norm", o.certify.margins.norm, "Residual norm margin");
  cmd->add_option("--grid", o.certify.grid_points, "Alpha grid size (>= 64)");
  cmd->add_option("--alpha", alpha, "Use this angle instead of scanning the grid");
  cmd->add_option("--out", o.out_path, "Write output here instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify genuine multipartite nonlocality of near-symmetric qubit states"};
  app.require_subcommand(1);
  RunOptions o;
  double alpha = 0.0;

  auto* certify_cmd = app.add_subcommand("certify", "Certify a state file");
  certify_cmd->add_option("--state", o.state_path, "State JSON file")->required();
  add_certify_flags(certify_cmd, o, alpha);

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate polynomial and margins over alpha");
  sweep_cmd->add_option("--state", o.state_path, "State JSON file")->required();
  sweep_cmd->add_option("--points", o.points, "Grid points on [0, pi)");
  add_certify_flags(sweep_cmd, o, alpha);

  auto* random_cmd = app.add_subcommand("random", "Certify a batch of random GME states");
  random_cmd->add_option("--n", o.n, "Number of qubits")->required();
  random_cmd->add_option("--count", o.count, "Number of states");
  random_cmd->add_option("--seed", o.seed, "PRNG seed");
  add_certify_flags(random_cmd, o, alpha);

  auto* demo_cmd = app.add_subcommand("demo", "Certify a built-in state family");
  demo_cmd->add_option("--family", o.family, "ghz, w or dicke-<k>")->required();
  demo_cmd->add_option("--n", o.n, "Number of qubits")->required();
  add_certify_flags(demo_cmd, o, alpha);

  auto* bilocal_cmd =
      app.add_subcommand("check-bilocal", "Check classical bounds on bilocal extreme points");
  bilocal_cmd->add_option("--n", o.n, "Number of parties (3 = exhaustive)");
  bilocal_cmd->add_option("--variant", o.variant, "literal, generalized or both");
  bilocal_cmd->add_option("--model", o.model, "deterministic or no-signaling");
  bilocal_cmd->add_option("--count", o.samples, "Sampled strategies when n > 3");
  bilocal_cmd->add_option("--seed", o.seed, "PRNG seed for sampling");
  bilocal_cmd->add_option("--out", o.out_path, "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }
  for (auto* cmd : {certify_cmd, sweep_cmd, random_cmd, demo_cmd}) {
    if (cmd->parsed() && cmd->count("--alpha") > 0) o.certify.fixed_alpha = alpha;
  }

  if (certify_cmd->parsed()) return cmd_certify(o, out, err);
  if (sweep_cmd->parsed()) return cmd_sweep(o, out, err);
  if (random_cmd->parsed()) return cmd_random(o, out, err);
  if (demo_cmd->parsed()) return cmd_demo(o, out, err);
  return cmd_check_bilocal(o, out, err);
}

}  // namespace gmnl::tools
