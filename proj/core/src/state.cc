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

#include "gmnl/state.h"

#include <bit>
#include <cmath>
#include <string>

#include "gmnl/errors.h"
#include "gmnl/gme.h"
#include "gmnl/rng.h"

namespace gmnl {

double binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

Bra Bra::normalized() const {
  const double nrm = std::sqrt(norm_squared());
  if (!(nrm > 0.0)) throw DomainError("cannot normalize the zero bra");
  // Phase reference: first component whose magnitude is not rounding noise.
  const Amplitude ref = std::abs(beta) > 1e-14 * nrm ? beta : gamma;
  const Amplitude phase = std::conj(ref) / std::abs(ref);
  Bra out{beta * phase / nrm, gamma * phase / nrm};
  // Force the reference component exactly real.
  if (std::abs(beta) > 1e-14 * nrm) {
    out.beta = Amplitude{std::abs(out.beta), 0.0};
  } else {
    out.gamma = Amplitude{std::abs(out.gamma), 0.0};
  }
  return out;
}

Amplitude ket_overlap(const Bra& u, const Bra& v) {
  // kets are (conj beta, conj gamma).
  return u.beta * std::conj(v.beta) + u.gamma * std::conj(v.gamma);
}

DenseState::DenseState(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amp_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw DomainError("qubit count out of range: " + std::to_string(num_qubits));
  }
  if (amp_.size() != (std::size_t{1} << num_qubits)) {
    throw DomainError("amplitude vector length " + std::to_string(amp_.size()) +
                      " does not equal 2^" + std::to_string(num_qubits));
  }
}

DenseState DenseState::zeros(int num_qubits) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw DomainError("qubit count out of range: " + std::to_string(num_qubits));
  }
  return DenseState(num_qubits,
                    std::vector<Amplitude>(std::size_t{1} << num_qubits));
}

double DenseState::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amp_) acc += std::norm(a);
  return acc;
}

bool DenseState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

double NearSymmetricState::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : h) acc += std::norm(a);
  for (const auto& a : h_prime) acc += std::norm(a);
  return acc;
}

void NearSymmetricState::validate(double tol) const {
  if (n < 3) throw DomainError("n must be at least 3, got " + std::to_string(n));
  if (n > 24) throw DomainError("n too large for dense evaluation: " + std::to_string(n));
  if (h.size() != static_cast<std::size_t>(n)) {
    throw DomainError("h has length " + std::to_string(h.size()) + ", expected " +
                      std::to_string(n));
  }
  if (h_prime.size() != static_cast<std::size_t>(n)) {
    throw DomainError("h_prime has length " + std::to_string(h_prime.size()) +
                      ", expected " + std::to_string(n));
  }
  for (int k = 0; k < n; ++k) {
    if (!is_finite(h[k])) throw DomainError("h[" + std::to_string(k) + "] is not finite");
    if (!is_finite(h_prime[k])) {
      throw DomainError("h_prime[" + std::to_string(k) + "] is not finite");
    }
  }
  const double nrm = norm_squared();
  if (std::abs(nrm - 1.0) > tol) {
    throw DomainError("state is not normalized: sum |h|^2 + |h'|^2 = " +
                      std::to_string(nrm));
  }
}

NearSymmetricState NearSymmetricState::scaled(Amplitude factor) const {
  NearSymmetricState out = *this;
  for (auto& a : out.h) a *= factor;
  for (auto& a : out.h_prime) a *= factor;
  return out;
}

DenseState dicke(int n, int k) {
  if (n < 1) throw DomainError("dicke: n must be positive");
  if (k < 0 || k > n) {
    throw DomainError("dicke: k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(n) + "]");
  }
  DenseState out = DenseState::zeros(n);
  const double a = 1.0 / std::sqrt(binomial(n, k));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (std::popcount(i) == k) out[i] = a;
  }
  return out;
}

DenseState embed(const NearSymmetricState& s) {
  const int n = s.n;
  if (n < 1 || s.h.size() != static_cast<std::size_t>(n) ||
      s.h_prime.size() != static_cast<std::size_t>(n)) {
    throw DomainError("embed: malformed near-symmetric state");
  }
  DenseState out = DenseState::zeros(n);
  const std::size_t rest_mask = (std::size_t{1} << (n - 1)) - 1;
  std::vector<double> inv_norm(n);
  for (int k = 0; k < n; ++k) inv_norm[k] = 1.0 / std::sqrt(binomial(n - 1, k));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int w = std::popcount(i & rest_mask);
    const bool first = (i >> (n - 1)) & 1u;
    out[i] = (first ? s.h_prime[w] : s.h[w]) * inv_norm[w];
  }
  return out;
}

DenseState project_party(const DenseState& psi, int party, const Bra& v) {
  const int n = psi.num_qubits();
  if (party < 1 || party > n) {
    throw DomainError("project_party: party " + std::to_string(party) +
                      " outside [1, " + std::to_string(n) + "]");
  }
  if (v.is_zero()) throw DomainError("project_party: zero bra");
  const int pos = n - party;
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  DenseState out = DenseState::zeros(n - 1);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::size_t i0 = ((r & ~low_mask) << 1) | (r & low_mask);
    const std::size_t i1 = i0 | (std::size_t{1} << pos);
    out[r] = v.apply(psi[i0], psi[i1]);
  }
  return out;
}

Amplitude inner(const DenseState& a, const DenseState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DomainError("inner: dimension mismatch (" + std::to_string(a.num_qubits()) +
                      " vs " + std::to_string(b.num_qubits()) + " qubits)");
  }
  Amplitude acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

namespace {

void normalize_in_place(NearSymmetricState& s) {
  const double nrm = std::sqrt(s.norm_squared());
  for (auto& a : s.h) a /= nrm;
  for (auto& a : s.h_prime) a /= nrm;
}

}  // namespace

NearSymmetricState random_near_symmetric(int n, std::uint64_t seed) {
  if (n < 3) throw DomainError("random_near_symmetric: n must be at least 3");
  NormalSampler rng(seed);
  NearSymmetricState s{n, std::vector<Amplitude>(n), std::vector<Amplitude>(n)};
  for (;;) {
    for (auto* v : {&s.h, &s.h_prime}) {
      for (auto& a : *v) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Amplitude{re, im};
      }
    }
    normalize_in_place(s);
    if (gme_check(s).is_gme) return s;
  }
}

NearSymmetricState biseparable(int n, Amplitude lambda,
                               std::span<const Amplitude> h_prime) {
  if (n < 3) throw DomainError("biseparable: n must be at least 3");
  if (h_prime.size() != static_cast<std::size_t>(n)) {
    throw DomainError("biseparable: h_prime must have length n");
  }
  NearSymmetricState s{n, std::vector<Amplitude>(n),
                       std::vector<Amplitude>(h_prime.begin(), h_prime.end())};
  double nrm = 0.0;
  for (const auto& a : h_prime) nrm += std::norm(a);
  if (!(nrm > 0.0)) throw DomainError("biseparable: h_prime is zero");
  for (int k = 0; k < n; ++k) s.h[k] = lambda * h_prime[k];
  normalize_in_place(s);
  return s;
}

NearSymmetricState ghz_state(int n) {
  if (n < 3) throw DomainError("ghz_state: n must be at least 3");
  NearSymmetricState s{n, std::vector<Amplitude>(n), std::vector<Amplitude>(n)};
  s.h[0] = 1.0 / std::sqrt(2.0);
  s.h_prime[n - 1] = 1.0 / std::sqrt(2.0);
  return s;
}

// |D^n_k> = sqrt((n-k)/n) |0>|D^{n-1}_k> + sqrt(k/n) |1>|D^{n-1}_{k-1}>.
NearSymmetricState dicke_state(int n, int k) {
  if (n < 3) throw DomainError("dicke_state: n must be at least 3");
  if (k < 0 || k > n) throw DomainError("dicke_state: k outside [0, n]");
  NearSymmetricState s{n, std::vector<Amplitude>(n), std::vector<Amplitude>(n)};
  if (k < n) s.h[k] = std::sqrt(static_cast<double>(n - k) / n);
  if (k > 0) s.h_prime[k - 1] = std::sqrt(static_cast<double>(k) / n);
  return s;
}

}  // namespace gmnl
