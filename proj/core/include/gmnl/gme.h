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
#include <vector>

#include "gmnl/state.h"

namespace gmnl {

// Coefficients C_0..C_{2n-4} of the concurrence polynomial
//   b1 b4 - b2 b3 = cos^{2n-4}(a) * sum_m C_m tan^m(a).
struct PolyCoeffs {
  int n = 3;
  std::vector<Amplitude> c;

  int degree_bound() const { return 2 * n - 4; }
};

PolyCoeffs c_coefficients(const NearSymmetricState& s);

// cos^{2n-4}(alpha) * sum_m C_m tan^m(alpha), evaluated as
// sum_m C_m sin^m cos^{2n-4-m}. Throws DomainError at alpha = pi/2 mod pi.
Amplitude poly_eval(const PolyCoeffs& p, double alpha);

struct SeparabilityResult {
  bool separable = false;
  std::optional<Amplitude> lambda;
};

// Separable across {1}|{2..n} iff max_m |C_m| < tol * max|h| * max|h'|.
// lambda is the |h'_k|^2-weighted least-squares fit of h_k = lambda h'_k,
// reported when the state is separable and h' is nonzero.
SeparabilityResult first_party_separability(const NearSymmetricState& s,
                                            double tol = 1e-9);

// Bipartition class under the 2..n symmetry. Every cut is equivalent to
// S = {1, 2, ..., 1 + symmetric_in_s}, 0 <= symmetric_in_s <= n-2.
struct BipartitionClass {
  int n = 3;
  int symmetric_in_s = 0;

  std::string to_string() const;  // e.g. "{1,2}|{3,4}"
  friend bool operator==(const BipartitionClass&, const BipartitionClass&) = default;
};

struct GmeResult {
  bool is_gme = false;
  std::optional<BipartitionClass> failing;
  std::vector<double> purities;  // one per class, in enumeration order
};

inline constexpr double kDefaultPurityTolerance = 1e-9;

// Purity of the reduced state on S for the given class.
double reduced_purity(const DenseState& psi, const BipartitionClass& cut);

// GME iff every class has reduced purity <= 1 - tol. Classes are visited
// with party 1 alone first.
GmeResult gme_check(const NearSymmetricState& s,
                    double tol = kDefaultPurityTolerance);

struct AlphaMargins {
  double entanglement = 1e-8;   // |b1b4 - b2b3| / ||psi2||^2
  double non_maximality = 1e-6; // lambda_max - lambda_min of normalized psi2
  double norm = 1e-10;          // ||psi2||^2
};

struct AlphaSelection {
  double alpha = 0.0;
  double entanglement_margin = 0.0;
  double non_maximality_margin = 0.0;
  double residual_norm = 0.0;  // ||psi2||^2
  bool valid = false;

  double score() const;  // min of the three margins
};

// Margins of the residual at one angle; valid iff all exceed the thresholds
// and alpha is not pi/2 mod pi.
AlphaSelection evaluate_alpha(const NearSymmetricState& s, double alpha,
                              const AlphaMargins& margins = {});

// Grid alpha_i = i*pi/grid_points, i = 0..grid_points-1, with the point at
// pi/2 (2i == grid_points) dropped.
std::vector<double> alpha_grid(int grid_points);

// Every valid grid angle, best score first, ties by smaller alpha.
std::vector<AlphaSelection> rank_alphas(const NearSymmetricState& s,
                                        int grid_points,
                                        const AlphaMargins& margins = {});

// Best valid grid angle. Throws PreconditionError when s is not GME and
// SelectionError when no grid angle passes every margin.
AlphaSelection select_alpha(const NearSymmetricState& s, int grid_points = 1024,
                            const AlphaMargins& margins = {});

// Number of strict local minima of |poly| over the cyclic grid that lie below
// rel_tol * max|poly|. Each is a sampled root; the count can never exceed
// 2n-4 for a nonzero polynomial.
int sampled_root_count(const PolyCoeffs& p, int grid_points,
                       double rel_tol = 1e-3);

}  // namespace gmnl
