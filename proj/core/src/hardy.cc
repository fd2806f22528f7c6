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

#include "gmnl/hardy.h"

#include <cmath>
#include <string>
#include <utility>

#include "gmnl/errors.h"

namespace gmnl {

double ResidualCoeffs::norm_squared() const {
  return std::norm(b[0]) + std::norm(b[1]) + std::norm(b[2]) + std::norm(b[3]);
}

bool Measurement::is_orthonormal(double tol) const {
  return std::abs(outcome0.norm_squared() - 1.0) <= tol &&
         std::abs(outcome1.norm_squared() - 1.0) <= tol &&
         std::abs(ket_overlap(outcome0, outcome1)) <= tol;
}

MeasurementAssignment::MeasurementAssignment(int n) {
  if (n < 1) throw DomainError("MeasurementAssignment: need at least one party");
  const Measurement computational{Bra{1.0, 0.0}, Bra{0.0, 1.0}};
  settings_.assign(n, {computational, computational});
}

const Measurement& MeasurementAssignment::at(int party, int setting) const {
  if (party < 1 || party > num_parties() || setting < 0 || setting > 1) {
    throw DomainError("MeasurementAssignment: no party " + std::to_string(party) +
                      " setting " + std::to_string(setting));
  }
  return settings_[party - 1][setting];
}

Measurement& MeasurementAssignment::at(int party, int setting) {
  return const_cast<Measurement&>(std::as_const(*this).at(party, setting));
}

bool MeasurementAssignment::parties_match() const {
  for (int j = 3; j <= num_parties(); ++j) {
    if (settings_[j - 1] != settings_[1]) return false;
  }
  return true;
}

Bra symmetric_bra(double alpha) { return Bra{std::cos(alpha), std::sin(alpha)}; }

ResidualCoeffs residual_coeffs(const NearSymmetricState& s, double alpha) {
  const int n = s.n;
  if (n < 3 || s.h.size() != static_cast<std::size_t>(n) ||
      s.h_prime.size() != static_cast<std::size_t>(n)) {
    throw DomainError("residual_coeffs: malformed state");
  }
  const double c = std::cos(alpha);
  const double sn = std::sin(alpha);
  ResidualCoeffs r;
  r.alpha = alpha;
  for (int k = 0; k <= n - 1; ++k) {
    const double string_weight = 1.0 / std::sqrt(binomial(n - 1, k));
    const Amplitude g = s.h[k] * string_weight;
    const Amplitude gp = s.h_prime[k] * string_weight;
    if (k <= n - 2) {
      // Second qubit |0>: k ones among the n-2 measured qubits.
      const double w = binomial(n - 2, k) * std::pow(c, n - k - 2) * std::pow(sn, k);
      r.b[0] += g * w;
      r.b[2] += gp * w;
    }
    if (k >= 1) {
      // Second qubit |1>: k-1 ones among the measured qubits.
      const double w =
          binomial(n - 2, k - 1) * std::pow(c, n - k - 1) * std::pow(sn, k - 1);
      r.b[1] += g * w;
      r.b[3] += gp * w;
    }
  }
  r.c1 = std::conj(r.b[0]) * c + std::conj(r.b[1]) * sn;
  r.c2 = std::conj(r.b[2]) * c + std::conj(r.b[3]) * sn;
  return r;
}

Bra annihilator(Amplitude w0, Amplitude w1) {
  if (w0 == Amplitude{} && w1 == Amplitude{}) {
    throw DomainError("annihilator: zero vector");
  }
  return Bra{w1, -w0}.normalized();
}

Bra orthocomplement(const Bra& v) {
  if (v.is_zero()) throw DomainError("orthocomplement: zero bra");
  return Bra{std::conj(v.gamma), -std::conj(v.beta)}.normalized();
}

namespace {

void require_nondegenerate(Amplitude x0, Amplitude x1, double scale, double eps,
                           const char* step) {
  if (std::norm(x0) + std::norm(x1) < eps * scale) {
    throw DegenerateGeometryError(std::string("hardy_vectors: residual vanishes at ") +
                                  step);
  }
}

Measurement complete(const Bra& outcome, int which) {
  const Bra other = orthocomplement(outcome);
  return which == 0 ? Measurement{outcome, other} : Measurement{other, outcome};
}

}  // namespace

HardyVectors hardy_vectors(const ResidualCoeffs& r, double eps_norm) {
  const auto& b = r.b;
  const double scale = r.norm_squared();
  if (!(scale > 0.0)) throw DegenerateGeometryError("hardy_vectors: zero residual");
  HardyVectors v;

  v.b0 = complete(symmetric_bra(r.alpha), 0);

  // Party 2 on <m_{0|0}|, the party-1 leftover must be killed by m_{1|1}.
  const Bra& m2_00 = v.b0.outcome0;
  const Amplitude w0 = m2_00.apply(b[0], b[1]);
  const Amplitude w1 = m2_00.apply(b[2], b[3]);
  require_nondegenerate(w0, w1, scale, eps_norm, "party 2 setting 0");
  v.a1 = complete(annihilator(w0, w1), 1);

  // Party 1 on <m_{0|1}|, party 2 setting 1 outcome 0 must vanish.
  const Bra& m1_01 = v.a1.outcome0;
  const Amplitude u0 = m1_01.apply(b[0], b[2]);
  const Amplitude u1 = m1_01.apply(b[1], b[3]);
  require_nondegenerate(u0, u1, scale, eps_norm, "party 1 setting 1");
  v.b1 = complete(annihilator(u0, u1), 0);

  // Party 2 on <m_{1|1}|, party 1 setting 0 outcome 0 must vanish.
  const Bra& m2_11 = v.b1.outcome1;
  const Amplitude z0 = m2_11.apply(b[0], b[1]);
  const Amplitude z1 = m2_11.apply(b[2], b[3]);
  require_nondegenerate(z0, z1, scale, eps_norm, "party 2 setting 1");
  v.a0 = complete(annihilator(z0, z1), 0);
  return v;
}

MeasurementAssignment assemble(int n, const HardyVectors& v) {
  MeasurementAssignment m(n);
  m.at(1, 0) = v.a0;
  m.at(1, 1) = v.a1;
  for (int j = 2; j <= n; ++j) {
    m.at(j, 0) = v.b0;
    m.at(j, 1) = v.b1;
  }
  m.set_symmetric_flag(true);
  return m;
}

}  // namespace gmnl
