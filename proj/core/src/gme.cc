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

#include "gmnl/gme.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "gmnl/errors.h"
#include "gmnl/hardy.h"

namespace gmnl {

namespace {

// h_k / sqrt(C(n-1, k)): the weight of each individual basis string.
std::vector<Amplitude> per_string(const std::vector<Amplitude>& coeffs, int n) {
  std::vector<Amplitude> g(coeffs.size());
  for (int k = 0; k < n; ++k) g[k] = coeffs[k] / std::sqrt(binomial(n - 1, k));
  return g;
}

bool at_pole(double alpha) { return std::abs(std::cos(alpha)) < 1e-12; }

}  // namespace

PolyCoeffs c_coefficients(const NearSymmetricState& s) {
  const int n = s.n;
  if (n < 3) throw DomainError("c_coefficients: n must be at least 3");
  const auto g = per_string(s.h, n);
  const auto gp = per_string(s.h_prime, n);
  PolyCoeffs out{n, std::vector<Amplitude>(2 * n - 3)};
  for (int m = 0; m <= 2 * n - 4; ++m) {
    Amplitude acc{};
    for (int k = std::max(0, m - n + 2); k <= std::min(n - 2, m); ++k) {
      const int l = m - k + 1;
      acc += (g[k] * gp[l] - gp[k] * g[l]) * binomial(n - 2, k) *
             binomial(n - 2, m - k);
    }
    out.c[m] = acc;
  }
  return out;
}

Amplitude poly_eval(const PolyCoeffs& p, double alpha) {
  if (at_pole(alpha)) throw DomainError("poly_eval: alpha is pi/2 mod pi");
  const int degree = p.degree_bound();
  if (p.c.size() != static_cast<std::size_t>(degree + 1)) {
    throw DomainError("poly_eval: expected 2n-3 coefficients");
  }
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Amplitude acc{};
  for (int m = 0; m <= degree; ++m) {
    acc += p.c[m] * (std::pow(s, m) * std::pow(c, degree - m));
  }
  return acc;
}

SeparabilityResult first_party_separability(const NearSymmetricState& s,
                                            double tol) {
  if (!(tol > 0.0)) throw DomainError("first_party_separability: tol must be positive");
  const auto coeffs = c_coefficients(s);
  double max_c = 0.0;
  for (const auto& c : coeffs.c) max_c = std::max(max_c, std::abs(c));
  double max_h = 0.0;
  double max_hp = 0.0;
  double hp_norm = 0.0;
  for (int k = 0; k < s.n; ++k) {
    max_h = std::max(max_h, std::abs(s.h[k]));
    max_hp = std::max(max_hp, std::abs(s.h_prime[k]));
    hp_norm += std::norm(s.h_prime[k]);
  }
  SeparabilityResult out;
  out.separable = max_c <= tol * max_h * max_hp;
  if (out.separable && hp_norm > 0.0) {
    Amplitude num{};
    for (int k = 0; k < s.n; ++k) num += std::conj(s.h_prime[k]) * s.h[k];
    out.lambda = num / hp_norm;
  }
  return out;
}

std::string BipartitionClass::to_string() const {
  std::string left = "{";
  std::string right = "{";
  for (int j = 1; j <= n; ++j) {
    std::string& side = j <= 1 + symmetric_in_s ? left : right;
    if (side.size() > 1) side += ',';
    side += std::to_string(j);
  }
  return left + "}|" + right + "}";
}

double reduced_purity(const DenseState& psi, const BipartitionClass& cut) {
  const int n = psi.num_qubits();
  const int s_qubits = 1 + cut.symmetric_in_s;
  if (s_qubits < 1 || s_qubits >= n) throw DomainError("reduced_purity: bad cut");
  const Eigen::Index rows = Eigen::Index{1} << s_qubits;
  const Eigen::Index cols = Eigen::Index{1} << (n - s_qubits);
  using RowMajor = Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> m(psi.amplitudes().data(), rows, cols);
  // Tr(rho_S^2) = Tr(rho_Sbar^2); use the smaller Gram matrix.
  const Eigen::MatrixXcd rho = rows <= cols ? Eigen::MatrixXcd(m * m.adjoint())
                                            : Eigen::MatrixXcd(m.adjoint() * m);
  return rho.squaredNorm();
}

GmeResult gme_check(const NearSymmetricState& s, double tol) {
  if (!(tol > 0.0)) throw DomainError("gme_check: tol must be positive");
  const DenseState psi = embed(s);
  const double norm2 = psi.norm_squared();
  GmeResult out;
  out.is_gme = true;
  for (int c = 0; c <= s.n - 2; ++c) {
    const BipartitionClass cut{s.n, c};
    const double purity = reduced_purity(psi, cut) / (norm2 * norm2);
    out.purities.push_back(purity);
    if (out.is_gme && purity > 1.0 - tol) {
      out.is_gme = false;
      out.failing = cut;
    }
  }
  return out;
}

double AlphaSelection::score() const {
  return std::min({entanglement_margin, non_maximality_margin, residual_norm});
}

AlphaSelection evaluate_alpha(const NearSymmetricState& s, double alpha,
                              const AlphaMargins& margins) {
  AlphaSelection out;
  out.alpha = alpha;
  if (at_pole(alpha)) return out;
  const ResidualCoeffs r = residual_coeffs(s, alpha);
  const double norm2 = r.norm_squared();
  out.residual_norm = norm2;
  if (norm2 > 0.0) {
    // Normalized residual: lambda_max * lambda_min = d and
    // (lambda_max - lambda_min)^2 = 1 - 2d.
    const double d = std::abs(r.determinant()) / norm2;
    out.entanglement_margin = d;
    out.non_maximality_margin = std::sqrt(std::max(0.0, 1.0 - 2.0 * d));
  }
  out.valid = out.entanglement_margin > margins.entanglement &&
              out.non_maximality_margin > margins.non_maximality &&
              out.residual_norm > margins.norm;
  return out;
}

std::vector<double> alpha_grid(int grid_points) {
  if (grid_points < 1) throw DomainError("alpha_grid: need at least one point");
  std::vector<double> grid;
  grid.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    if (2 * i == grid_points) continue;
    grid.push_back(i * std::numbers::pi / grid_points);
  }
  return grid;
}

std::vector<AlphaSelection> rank_alphas(const NearSymmetricState& s,
                                        int grid_points,
                                        const AlphaMargins& margins) {
  std::vector<AlphaSelection> ranked;
  for (double alpha : alpha_grid(grid_points)) {
    auto sel = evaluate_alpha(s, alpha, margins);
    if (sel.valid) ranked.push_back(sel);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const AlphaSelection& a, const AlphaSelection& b) {
                     return a.score() > b.score();
                   });
  return ranked;
}

AlphaSelection select_alpha(const NearSymmetricState& s, int grid_points,
                            const AlphaMargins& margins) {
  if (grid_points < 64) throw DomainError("select_alpha: grid must have at least 64 points");
  const auto gme = gme_check(s);
  if (!gme.is_gme) {
    throw PreconditionError("select_alpha: state is not GME (fails on " +
                            gme.failing->to_string() + ")");
  }
  const auto ranked = rank_alphas(s, grid_points, margins);
  if (ranked.empty()) {
    throw SelectionError("select_alpha: no grid angle passes every margin");
  }
  return ranked.front();
}

int sampled_root_count(const PolyCoeffs& p, int grid_points, double rel_tol) {
  const auto grid = alpha_grid(grid_points);
  std::vector<double> mag;
  mag.reserve(grid.size());
  for (double alpha : grid) mag.push_back(std::abs(poly_eval(p, alpha)));
  const double peak = *std::max_element(mag.begin(), mag.end());
  if (!(peak > 0.0)) return 0;
  const std::size_t len = mag.size();
  int roots = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const double prev = mag[(i + len - 1) % len];
    const double next = mag[(i + 1) % len];
    if (mag[i] < prev && mag[i] < next && mag[i] <= rel_tol * peak) ++roots;
  }
  return roots;
}

}  // namespace gmnl
