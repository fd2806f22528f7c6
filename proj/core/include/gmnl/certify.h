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

#include <optional>
#include <string>

#include "gmnl/bell.h"
#include "gmnl/gme.h"
#include "gmnl/hardy.h"
#include "gmnl/state.h"

namespace gmnl {

struct CertifyOptions {
  double residual_tolerance = 1e-10;
  double purity_tolerance = kDefaultPurityTolerance;
  AlphaMargins margins{};
  int grid_points = 1024;
  // Skip the grid scan and use this angle (still checked against margins).
  std::optional<double> fixed_alpha;

  // Throws DomainError for non-positive tolerances or grid < 64.
  void validate() const;
};

struct BellValues {
  HardyResiduals hardy;
  double catalonia_lhs = 0.0;
  double improved_gap = 0.0;
  double curchod_literal = 0.0;
  double curchod_generalized = 0.0;
};

struct CertificationReport {
  int n = 0;
  std::string state_digest;
  bool gme = false;
  std::optional<BipartitionClass> failing_bipartition;
  std::optional<AlphaSelection> alpha;
  std::optional<ResidualCoeffs> residual;
  std::optional<MeasurementAssignment> measurements;
  std::optional<BellValues> values;
  // Why the verdict is false, empty otherwise.
  std::string failure_reason;
  CertifyOptions options;
  bool verdict = false;
};

// FNV-1a over n and the IEEE-754 bytes of every coefficient, as 16 hex digits.
std::string state_digest(const NearSymmetricState& s);

// gme_check -> alpha selection -> residual -> Hardy vectors -> Bell values.
// Non-GME input, or no usable angle, yields verdict false rather than an
// error. verdict = gme && max Hardy residual < tol && catalonia_lhs > 10 tol.
CertificationReport certify(const NearSymmetricState& s,
                            const CertifyOptions& options = {});

}  // namespace gmnl
