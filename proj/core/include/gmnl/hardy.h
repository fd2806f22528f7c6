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
#include <vector>

#include "gmnl/state.h"

namespace gmnl {

// Unnormalized two-qubit residual b1|00> + b2|01> + b3|10> + b4|11> on
// parties 1, 2 after parties 3..n project onto cos(a)<0| + sin(a)<1|,
// together with c1 = conj(b1) cos a + conj(b2) sin a and
// c2 = conj(b3) cos a + conj(b4) sin a.
struct ResidualCoeffs {
  std::array<Amplitude, 4> b{};
  Amplitude c1{};
  Amplitude c2{};
  double alpha = 0.0;

  double norm_squared() const;
  Amplitude determinant() const { return b[0] * b[3] - b[1] * b[2]; }
};

struct Measurement {
  Bra outcome0;
  Bra outcome1;

  const Bra& outcome(int a) const { return a == 0 ? outcome0 : outcome1; }
  // Both outcomes unit norm and ket-orthogonal within tol.
  bool is_orthonormal(double tol = 1e-12) const;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

// Two-setting measurements for each of n parties.
class MeasurementAssignment {
 public:
  MeasurementAssignment() = default;
  explicit MeasurementAssignment(int n);

  int num_parties() const { return static_cast<int>(settings_.size()); }

  // party is 1-based, setting is 0 or 1.
  const Measurement& at(int party, int setting) const;
  Measurement& at(int party, int setting);

  bool symmetric_flag() const { return symmetric_; }
  void set_symmetric_flag(bool flag) { symmetric_ = flag; }
  // Checks parties 2..n are componentwise equal.
  bool parties_match() const;

 private:
  std::vector<std::array<Measurement, 2>> settings_;
  bool symmetric_ = false;
};

// cos(alpha)<0| + sin(alpha)<1|.
Bra symmetric_bra(double alpha);

// Closed-form residual via the binomial sums, applied to the Dicke-normalized
// coefficients g_k = h_k / sqrt(C(n-1, k)).
ResidualCoeffs residual_coeffs(const NearSymmetricState& s, double alpha);

// Normalized bra proportional to (w1, -w0): the bra killing w0|0> + w1|1>.
Bra annihilator(Amplitude w0, Amplitude w1);

// Normalized bra whose ket is orthogonal to v's ket.
Bra orthocomplement(const Bra& v);

struct HardyVectors {
  Measurement a0;  // party 1, setting 0
  Measurement a1;  // party 1, setting 1
  Measurement b0;  // parties 2..n, setting 0
  Measurement b1;  // parties 2..n, setting 1
};

// Annihilation chain realizing
//   p(10..0|10..0) = 0, p(010..0|010..0) = 0, p(0..0|110..0) = 0.
// Throws DegenerateGeometryError if an intermediate single-qubit residual has
// squared norm below eps_norm * ||psi2||^2.
HardyVectors hardy_vectors(const ResidualCoeffs& r, double eps_norm = 1e-10);

MeasurementAssignment assemble(int n, const HardyVectors& v);

}  // namespace gmnl
