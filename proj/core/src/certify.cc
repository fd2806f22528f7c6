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

#include "gmnl/certify.h"

#include <bit>
#include <cstdio>
#include <cstring>

#include "gmnl/errors.h"

namespace gmnl {

void CertifyOptions::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(name) + " must be a positive finite number");
    }
  };
  positive(residual_tolerance, "residual tolerance");
  positive(purity_tolerance, "purity tolerance");
  positive(margins.entanglement, "entanglement margin");
  positive(margins.non_maximality, "non-maximality margin");
  positive(margins.norm, "norm margin");
  if (grid_points < 64) throw DomainError("grid must have at least 64 points");
  if (fixed_alpha && !std::isfinite(*fixed_alpha)) throw DomainError("alpha must be finite");
}

std::string state_digest(const NearSymmetricState& s) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  auto mix = [&hash](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (word >> (8 * byte)) & 0xffu;
      hash *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(s.n));
  for (const auto* coeffs : {&s.h, &s.h_prime}) {
    for (const auto& a : *coeffs) {
      mix(std::bit_cast<std::uint64_t>(a.real()));
      mix(std::bit_cast<std::uint64_t>(a.imag()));
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

BellValues evaluate_bell(const NearSymmetricState& s, const MeasurementAssignment& m) {
  const DenseState psi = embed(s);
  const ProbabilityFn p = quantum_correlations(psi, m);
  BellValues v;
  v.hardy = hardy_residuals(p, s.n);
  v.catalonia_lhs = catalonia_lhs(psi, m);
  v.improved_gap = improved_gap(p, s.n);
  v.curchod_literal = curchod_gap(p, s.n, CurchodVariant::kLiteral);
  v.curchod_generalized = curchod_gap(p, s.n, CurchodVariant::kGeneralized);
  return v;
}

}  // namespace

CertificationReport certify(const NearSymmetricState& s,
                            const CertifyOptions& options) {
  options.validate();
  s.validate();
  CertificationReport report;
  report.n = s.n;
  report.state_digest = state_digest(s);
  report.options = options;

  const GmeResult gme = gme_check(s, options.purity_tolerance);
  report.gme = gme.is_gme;
  if (!gme.is_gme) {
    report.failing_bipartition = gme.failing;
    report.failure_reason = "not genuinely multipartite entangled: product across " +
                            gme.failing->to_string();
    return report;
  }

  std::vector<AlphaSelection> candidates;
  if (options.fixed_alpha) {
    const auto sel = evaluate_alpha(s, *options.fixed_alpha, options.margins);
    if (!sel.valid) {
      report.alpha = sel;
      report.failure_reason = "requested alpha fails the residual margins";
      return report;
    }
    candidates.push_back(sel);
  } else {
    candidates = rank_alphas(s, options.grid_points, options.margins);
    if (candidates.empty()) {
      report.failure_reason = "no grid angle passes every residual margin";
      return report;
    }
  }

  // Candidates are tried best-first. A candidate is rejected when its
  // geometry degenerates or when it does not admit a strictly positive
  // Hardy probability; the first non-degenerate one is kept as a fallback
  // so a failing report still carries its numbers.
  const double tol = options.residual_tolerance;
  auto passes = [tol](const BellValues& v) {
    return v.hardy.max_residual() < tol && v.catalonia_lhs > 10.0 * tol;
  };
  CertificationReport fallback;
  bool have_fallback = false;
  for (const auto& sel : candidates) {
    const ResidualCoeffs r = residual_coeffs(s, sel.alpha);
    HardyVectors vectors;
    try {
      vectors = hardy_vectors(r, options.margins.norm);
    } catch (const DegenerateGeometryError&) {
      continue;
    }
    CertificationReport attempt = report;
    attempt.alpha = sel;
    attempt.residual = r;
    attempt.measurements = assemble(s.n, vectors);
    attempt.values = evaluate_bell(s, *attempt.measurements);
    if (passes(*attempt.values)) {
      attempt.verdict = attempt.gme;
      return attempt;
    }
    if (!have_fallback) {
      fallback = std::move(attempt);
      have_fallback = true;
    }
  }
  if (!have_fallback) {
    report.alpha = candidates.front();
    report.failure_reason = "Hardy construction degenerate at every candidate angle";
    return report;
  }

  report = std::move(fallback);
  report.verdict = false;
  if (!(report.values->hardy.max_residual() < tol)) {
    report.failure_reason = "Hardy zero-probability conditions exceed the residual tolerance";
  } else {
    report.failure_reason = "Bell violation below 10x the residual tolerance";
  }
  return report;
}

}  // namespace gmnl
