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

#include "gmnl/bell.h"

#include <algorithm>
#include <string>

#include "gmnl/errors.h"

namespace gmnl {

CorrelationQuery CorrelationQuery::zeros(int n) {
  return CorrelationQuery{std::vector<std::uint8_t>(n, 0),
                          std::vector<std::uint8_t>(n, 0)};
}

CorrelationQuery& CorrelationQuery::set(int party, std::uint8_t outcome,
                                        std::uint8_t setting) {
  if (party < 1 || party > num_parties()) {
    throw DomainError("CorrelationQuery: party " + std::to_string(party) + " out of range");
  }
  outcomes[party - 1] = outcome;
  settings[party - 1] = setting;
  return *this;
}

double joint_probability(const DenseState& psi, const MeasurementAssignment& m,
                         const CorrelationQuery& q) {
  const int n = psi.num_qubits();
  if (m.num_parties() != n || q.num_parties() != n ||
      q.settings.size() != q.outcomes.size()) {
    throw DomainError("joint_probability: dimension mismatch");
  }
  std::vector<Amplitude> buf(psi.amplitudes().begin(), psi.amplitudes().end());
  std::size_t len = buf.size();
  // Contract the least significant qubit (the last remaining party) each pass.
  for (int j = n; j >= 1; --j) {
    const Bra& bra = m.at(j, q.settings[j - 1]).outcome(q.outcomes[j - 1]);
    len /= 2;
    for (std::size_t r = 0; r < len; ++r) buf[r] = bra.apply(buf[2 * r], buf[2 * r + 1]);
  }
  return std::norm(buf[0]);
}

ProbabilityFn quantum_correlations(const DenseState& psi,
                                   const MeasurementAssignment& m) {
  return [psi, m](const CorrelationQuery& q) { return joint_probability(psi, m, q); };
}

double lifted_chsh(const ProbabilityFn& p, int n, int j) {
  return lifted_chsh(p, n, 1, j);
}

double lifted_chsh(const ProbabilityFn& p, int n, int i, int j) {
  if (n < 2 || i < 1 || j < 1 || i > n || j > n || i == j) {
    throw DomainError("lifted_chsh: need distinct parties in [1, n]");
  }
  const auto zero = CorrelationQuery::zeros(n);
  auto only_i = zero;
  only_i.set(i, 1, 1);
  auto only_j = zero;
  only_j.set(j, 1, 1);
  auto both_settings = zero;
  both_settings.set(i, 0, 1).set(j, 0, 1);
  return p(zero) - p(only_i) - p(only_j) - p(both_settings);
}

double improved_gap(const ProbabilityFn& p, int n) {
  double sum = 0.0;
  for (int j = 2; j <= n; ++j) sum += lifted_chsh(p, n, 1, j);
  const auto zero = CorrelationQuery::zeros(n);
  auto first = zero;
  first.set(1, 1, 1);
  return sum - (n - 2) * (p(zero) - p(first));
}

double improved_gap(const DenseState& psi, const MeasurementAssignment& m) {
  return improved_gap(quantum_correlations(psi, m), psi.num_qubits());
}

double catalonia_lhs(const ProbabilityFn& p, int n) {
  if (n < 2) throw DomainError("catalonia_lhs: need n >= 2");
  const auto zero = CorrelationQuery::zeros(n);
  auto first = zero;
  first.set(1, 1, 1);
  auto second = zero;
  second.set(2, 1, 1);
  auto both_settings = zero;
  both_settings.set(1, 0, 1).set(2, 0, 1);
  return p(zero) - p(first) - (n - 1) * p(second) - (n - 1) * p(both_settings);
}

double catalonia_lhs(const DenseState& psi, const MeasurementAssignment& m) {
  if (!m.symmetric_flag() || !m.parties_match()) {
    throw PreconditionError(
        "catalonia_lhs: parties 2..n must share identical measurements");
  }
  return catalonia_lhs(quantum_correlations(psi, m), psi.num_qubits());
}

std::string_view to_string(CurchodVariant v) {
  return v == CurchodVariant::kLiteral ? "literal" : "generalized";
}

double curchod_gap(const ProbabilityFn& p, int n, CurchodVariant variant) {
  double sum = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int left = variant == CurchodVariant::kLiteral ? 1 : i;
      sum += lifted_chsh(p, n, left, j);
    }
  }
  return sum - (n - 2) * p(CorrelationQuery::zeros(n));
}

double HardyResiduals::max_residual() const { return std::max({r15, r16, r17}); }

HardyResiduals hardy_residuals(const ProbabilityFn& p, int n) {
  const auto zero = CorrelationQuery::zeros(n);
  auto first = zero;
  first.set(1, 1, 1);
  auto second = zero;
  second.set(2, 1, 1);
  auto both_settings = zero;
  both_settings.set(1, 0, 1).set(2, 0, 1);
  return HardyResiduals{p(first), p(second), p(both_settings), p(zero)};
}

HardyResiduals hardy_residuals(const DenseState& psi,
                               const MeasurementAssignment& m) {
  return hardy_residuals(quantum_correlations(psi, m), psi.num_qubits());
}

}  // namespace gmnl
