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

#pragma once

// Independent verification path. Nothing here reuses the closed forms of
// hardy.h or the sequential contraction of bell.h.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gmnl/bell.h"
#include "gmnl/certify.h"
#include "gmnl/state.h"

namespace gmnl::oracle {

// Embeds s and projects parties n, n-1, ..., 3 onto symmetric_bra(alpha).
// Returns (b1, b2, b3, b4), unnormalized.
std::array<Amplitude, 4> dense_residual(const NearSymmetricState& s,
                                        double alpha);

struct SchmidtData {
  double lambda_max = 1.0;
  double lambda_min = 0.0;
  double theta = 0.0;  // arccos(lambda_max), in [0, pi/4]
};

// Singular values of the normalized 2x2 amplitude matrix [[b1 b2] [b3 b4]].
// Throws DomainError on the zero vector.
SchmidtData schmidt_two_qubit(std::span<const Amplitude, 4> b);

// lambda_min * lambda_max = |b1 b4 - b2 b3| / ||b||^2 with
// lambda_max in [1/sqrt2, 1], so the determinant test and the Schmidt test
// agree up to this factor: d > tau => lambda_min > tau, and
// lambda_min > tau => d > kEntanglementCriterionConstant * tau.
inline constexpr double kEntanglementCriterionConstant = 0.70710678118654752;

// Party groups of a bipartition as bitmasks over parties; bit (j-1) is
// party j.
struct Bipartition {
  std::uint32_t s_mask = 1;
  int n = 3;

  std::uint32_t complement() const { return ((1u << n) - 1u) & ~s_mask; }
  std::string to_string() const;
};

// Deterministic response per group. Each table maps the group's settings
// (packed by ascending party, first party as the high bit) to its outcomes,
// packed the same way. Nothing forbids a group member's outcome from
// depending on another member's setting.
struct DeterministicBilocalStrategy {
  Bipartition bipartition;
  std::vector<std::uint32_t> response_s;
  std::vector<std::uint32_t> response_sbar;

  double probability(const CorrelationQuery& q) const;
  std::string to_string() const;
};

// Every strategy for n = 3: 3 cuts x 4 singleton functions x 256 pair
// functions = 3072. Throws DomainError for n != 3.
std::vector<DeterministicBilocalStrategy> enumerate_bilocal_extremes(int n = 3);

// Seeded random strategies for any n >= 3 (random cut, random tables).
std::vector<DeterministicBilocalStrategy> sample_bilocal_strategies(
    int n, std::size_t count, std::uint64_t seed);

// Extreme point of the no-signalling bilocal set at n = 3: a deterministic
// singleton party times one of the 24 extreme two-party no-signalling boxes
// (16 local deterministic, 8 PR boxes).
struct NoSignalingBilocalBox {
  Bipartition bipartition;
  std::array<std::uint8_t, 2> singleton_response{};
  // p(a_u a_v | x_u x_v) for the pair (u < v), indexed [x_u x_v][a_u a_v].
  std::array<std::array<double, 4>, 4> pair_table{};
  bool pr_box = false;

  double probability(const CorrelationQuery& q) const;
  std::string to_string() const;
};

// 3 cuts x 4 x 24 = 288 boxes. Throws DomainError for n != 3.
std::vector<NoSignalingBilocalBox> enumerate_ns_bilocal_extremes(int n = 3);

using GapFunction = std::function<double(const ProbabilityFn&, int)>;

struct NamedGap {
  std::string name;
  GapFunction gap;
};

// "improved", "curchod-literal" and "curchod-generalized", in that order.
std::vector<NamedGap> standard_gaps();

struct BoundViolation {
  std::size_t strategy_index = 0;
  std::string gap_name;
  double gap = 0.0;
  std::string strategy;
};

struct ClassicalBoundSummary {
  std::size_t checked = 0;
  std::vector<BoundViolation> violations;
  std::vector<double> max_gap;  // per gap, in the order given

  bool holds() const { return violations.empty(); }
};

ClassicalBoundSummary check_classical_bound(
    int n, std::span<const DeterministicBilocalStrategy> strategies,
    std::span<const NamedGap> gaps, double tol = 1e-12);
ClassicalBoundSummary check_classical_bound(
    int n, std::span<const NoSignalingBilocalBox> boxes,
    std::span<const NamedGap> gaps, double tol = 1e-12);

// Explicit product bra over all 2^n basis states; <bra|psi>.
Amplitude full_amplitude(const DenseState& psi, const MeasurementAssignment& m,
                         const CorrelationQuery& q);
double full_probability(const DenseState& psi, const MeasurementAssignment& m,
                        const CorrelationQuery& q);

// Recomputes every probability-derived value of the report, the residual
// coefficients, and the orthonormality of the reported measurements, from
// embed(s) and full 2^n inner products. True iff everything agrees within
// tol. Reports without measurements pass vacuously.
bool verify_pipeline(const NearSymmetricState& s,
                     const CertificationReport& report, double tol = 1e-10);

}  // namespace gmnl::oracle
