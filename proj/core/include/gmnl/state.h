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

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gmnl {

using Amplitude = std::complex<double>;

inline bool is_finite(Amplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

// Binomial coefficient C(n, k) as a double; zero outside 0 <= k <= n.
double binomial(int n, int k);

inline constexpr double kNormalizationTolerance = 1e-12;

// Single-qubit bra beta<0| + gamma<1|. Contracting it against a ket gives
// beta*psi_0 + gamma*psi_1 with no conjugation; the corresponding ket is
// conj(beta)|0> + conj(gamma)|1>.
struct Bra {
  Amplitude beta{1.0, 0.0};
  Amplitude gamma{0.0, 0.0};

  Amplitude apply(Amplitude zero, Amplitude one) const {
    return beta * zero + gamma * one;
  }
  double norm_squared() const { return std::norm(beta) + std::norm(gamma); }
  bool is_zero() const { return beta == Amplitude{} && gamma == Amplitude{}; }

  // Scaled to unit norm with the first nonzero component real positive.
  Bra normalized() const;

  friend bool operator==(const Bra&, const Bra&) = default;
};

// Ket overlap <u|v> of the kets dual to two bras.
Amplitude ket_overlap(const Bra& u, const Bra& v);

// Full 2^n amplitude vector. Party 1 is the most significant bit of the
// basis index, party n the least significant.
class DenseState {
 public:
  DenseState() = default;
  DenseState(int num_qubits, std::vector<Amplitude> amplitudes);

  static DenseState zeros(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amp_.size(); }
  std::span<const Amplitude> amplitudes() const { return amp_; }
  Amplitude operator[](std::size_t i) const { return amp_[i]; }
  Amplitude& operator[](std::size_t i) { return amp_[i]; }

  double norm_squared() const;
  bool is_normalized(double tol = kNormalizationTolerance) const;

  // Bit of party j (1-based) in basis index i.
  static unsigned party_bit(int num_qubits, int party, std::size_t i) {
    return static_cast<unsigned>((i >> (num_qubits - party)) & 1u);
  }

 private:
  int num_qubits_ = 0;
  std::vector<Amplitude> amp_{Amplitude{1.0, 0.0}};
};

// Pure state symmetric under permutations of parties 2..n:
//   sum_k (h_k|0> + h'_k|1>) (x) |D^{n-1}_k>,  k = 0..n-1.
struct NearSymmetricState {
  int n = 3;
  std::vector<Amplitude> h;
  std::vector<Amplitude> h_prime;

  double norm_squared() const;

  // Throws DomainError naming the violated invariant (n >= 3, lengths,
  // finiteness, normalization).
  void validate(double tol = kNormalizationTolerance) const;

  // Same state with every coefficient multiplied by a common factor.
  NearSymmetricState scaled(Amplitude factor) const;
};

// Normalized Dicke state |D^n_k>.
DenseState dicke(int n, int k);

// Dense amplitudes of a near-symmetric state. Normalized iff the input is.
DenseState embed(const NearSymmetricState& s);

// Contracts bra v against qubit `party` (1-based); the remaining qubits keep
// their order. The result is not renormalized.
DenseState project_party(const DenseState& psi, int party, const Bra& v);

// sum_i conj(a_i) b_i.
Amplitude inner(const DenseState& a, const DenseState& b);

// Deterministic in seed: 2n standard complex normals (std::mt19937_64 +
// Box-Muller, see rng.h), normalized, redrawn until gme_check accepts.
NearSymmetricState random_near_symmetric(int n, std::uint64_t seed);

// Normalized state with h_k = lambda * h'_k, a product across {1}|{2..n}.
NearSymmetricState biseparable(int n, Amplitude lambda,
                               std::span<const Amplitude> h_prime);

// Built-in families.
NearSymmetricState ghz_state(int n);
NearSymmetricState dicke_state(int n, int k);
inline NearSymmetricState w_state(int n) { return dicke_state(n, 1); }

}  // namespace gmnl
