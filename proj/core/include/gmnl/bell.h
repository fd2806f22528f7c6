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

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "gmnl/hardy.h"
#include "gmnl/state.h"

namespace gmnl {

// Outcome and setting strings a, x of p(a|x); index 0 is party 1.
struct CorrelationQuery {
  std::vector<std::uint8_t> outcomes;
  std::vector<std::uint8_t> settings;

  static CorrelationQuery zeros(int n);
  int num_parties() const { return static_cast<int>(outcomes.size()); }

  // Sets party (1-based) to (outcome, setting); returns *this for chaining.
  CorrelationQuery& set(int party, std::uint8_t outcome, std::uint8_t setting);
};

using ProbabilityFn = std::function<double(const CorrelationQuery&)>;

// |<m_{a1|x1}| (x) ... (x) <m_{an|xn}| psi>|^2 by sequential contraction.
double joint_probability(const DenseState& psi, const MeasurementAssignment& m,
                         const CorrelationQuery& q);

ProbabilityFn quantum_correlations(const DenseState& psi,
                                   const MeasurementAssignment& m);

// I^{i,j}: CHSH between parties i and j lifted to n parties, all other
// parties fixed to setting 0 / outcome 0. The standard form uses i = 1.
double lifted_chsh(const ProbabilityFn& p, int n, int j);
double lifted_chsh(const ProbabilityFn& p, int n, int i, int j);

// sum_{j=2}^n I^{1,j} - (n-2)[p(0|0) - p(10..0|10..0)]; > 0 certifies GMNL.
double improved_gap(const ProbabilityFn& p, int n);
double improved_gap(const DenseState& psi, const MeasurementAssignment& m);

// p(0|0) - p(10..0|10..0) - (n-1)p(010..0|010..0) - (n-1)p(0|110..0).
double catalonia_lhs(const ProbabilityFn& p, int n);
// Throws PreconditionError unless m carries the symmetric flag.
double catalonia_lhs(const DenseState& psi, const MeasurementAssignment& m);

// The double sum over pairs i < j is printed with superscript (1, j); kLiteral
// keeps that, kGeneralized uses (i, j).
enum class CurchodVariant { kLiteral, kGeneralized };
std::string_view to_string(CurchodVariant v);

// sum_{i<j} I^{.,j} - (n-2) p(0|0).
double curchod_gap(const ProbabilityFn& p, int n, CurchodVariant variant);

struct HardyResiduals {
  double r15 = 0.0;  // p(10..0|10..0)
  double r16 = 0.0;  // p(010..0|010..0)
  double r17 = 0.0;  // p(0..0|110..0)
  double p18 = 0.0;  // p(0..0|0..0)

  double max_residual() const;
};

HardyResiduals hardy_residuals(const ProbabilityFn& p, int n);
HardyResiduals hardy_residuals(const DenseState& psi,
                               const MeasurementAssignment& m);

}  // namespace gmnl
