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

#include <cmath>

#include "gmnl/bell.h"
#include "gmnl/errors.h"
#include "gmnl/gme.h"
#include "gmnl/hardy.h"
#include "gmnl/state.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gmnl;

namespace {

MeasurementAssignment chain_measurements(const NearSymmetricState& s) {
  const double alpha = select_alpha(s).alpha;
  return assemble(s.n, hardy_vectors(residual_coeffs(s, alpha)));
}

// Deterministic model where every party outputs f(x_j).
ProbabilityFn deterministic(int n, std::uint8_t on0, std::uint8_t on1) {
  return [n, on0, on1](const CorrelationQuery& q) {
    for (int j = 0; j < n; ++j) {
      if (q.outcomes[j] != (q.settings[j] == 0 ? on0 : on1)) return 0.0;
    }
    return 1.0;
  };
}

CorrelationQuery query_from_bits(int n, std::uint32_t outcomes, std::uint32_t settings) {
  auto q = CorrelationQuery::zeros(n);
  for (int j = 1; j <= n; ++j) {
    q.set(j, (outcomes >> (j - 1)) & 1u, (settings >> (j - 1)) & 1u);
  }
  return q;
}

}  // namespace

TEST(bell, ghz_computational_basis) {
  for (int n = 3; n <= 6; ++n) {
    const auto psi = embed(ghz_state(n));
    MeasurementAssignment m(n);
    EXPECT_NEAR(joint_probability(psi, m, CorrelationQuery::zeros(n)), 0.5, 1e-15);
    auto ones = CorrelationQuery::zeros(n);
    for (int j = 1; j <= n; ++j) ones.set(j, 1, 0);
    EXPECT_NEAR(joint_probability(psi, m, ones), 0.5, 1e-15);
    auto mixed = CorrelationQuery::zeros(n);
    mixed.set(2, 1, 0);
    EXPECT_NEAR(joint_probability(psi, m, mixed), 0.0, 1e-15);
  }
}

TEST(bell, outcomes_sum_to_one) {
  for (int n = 3; n <= 6; ++n) {
    const auto s = random_near_symmetric(n, 50 + n);
    const auto psi = embed(s);
    const auto m = chain_measurements(s);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      double total = 0.0;
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        total += joint_probability(psi, m, query_from_bits(n, a, x));
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(bell, product_state_factorizes) {
  const int n = 3;
  const Bra kets[3] = {Bra{0.6, Amplitude{0.0, 0.8}}, Bra{1.0, 0.0},
                       Bra{Amplitude{0.5, 0.5}, Amplitude{0.5, -0.5}}};
  auto psi = DenseState::zeros(n);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Amplitude a = 1.0;
    for (int j = 1; j <= n; ++j) {
      a *= ((i >> (n - j)) & 1u) ? kets[j - 1].gamma : kets[j - 1].beta;
    }
    psi[i] = a;
  }
  const auto m = chain_measurements(random_near_symmetric(n, 5));
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t a = 0; a < 8; ++a) {
      const auto q = query_from_bits(n, a, x);
      double expected = 1.0;
      for (int j = 1; j <= n; ++j) {
        expected *= std::norm(
            m.at(j, q.settings[j - 1]).outcome(q.outcomes[j - 1]).apply(kets[j - 1].beta,
                                                                        kets[j - 1].gamma));
      }
      EXPECT_NEAR(joint_probability(psi, m, q), expected, 1e-14);
    }
  }
}

TEST(bell, no_signalling_marginals) {
  const int n = 4;
  const auto s = random_near_symmetric(n, 99);
  const auto psi = embed(s);
  const auto m = chain_measurements(s);
  // Summing out any party's outcome gives the same marginal for both of its settings.
  for (int j = 1; j <= n; ++j) {
    const std::uint32_t bit = 1u << (j - 1);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      if (x & bit) continue;
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if (a & bit) continue;
        const double with0 = joint_probability(psi, m, query_from_bits(n, a, x)) +
                             joint_probability(psi, m, query_from_bits(n, a | bit, x));
        const double with1 =
            joint_probability(psi, m, query_from_bits(n, a, x | bit)) +
            joint_probability(psi, m, query_from_bits(n, a | bit, x | bit));
        EXPECT_NEAR(with0, with1, 1e-13);
      }
    }
  }
}

TEST(bell, dimension_mismatch) {
  const auto psi = embed(ghz_state(3));
  EXPECT_THROW(joint_probability(psi, MeasurementAssignment(4), CorrelationQuery::zeros(3)),
               DomainError);
  EXPECT_THROW(joint_probability(psi, MeasurementAssignment(3), CorrelationQuery::zeros(4)),
               DomainError);
  EXPECT_THROW(CorrelationQuery::zeros(3).set(4, 0, 0), DomainError);
}

TEST(bell, lifted_chsh_deterministic_values) {
  // Everyone outputs 0: p(0|0) = 1 and the other three terms vanish except
  // p(0..0|1_i 1_j) = 1, so the value is 0.
  EXPECT_DOUBLE_EQ(lifted_chsh(deterministic(2, 0, 0), 2, 2), 0.0);
  for (int n = 3; n <= 6; ++n) {
    for (int j = 2; j <= n; ++j) {
      EXPECT_DOUBLE_EQ(lifted_chsh(deterministic(n, 0, 0), n, j), 0.0);
    }
  }
  // Output equals input: 1 - 1 - 1 - 0.
  EXPECT_DOUBLE_EQ(lifted_chsh(deterministic(2, 0, 1), 2, 2), -1.0);
  EXPECT_DOUBLE_EQ(lifted_chsh(deterministic(4, 0, 1), 4, 2, 3), -1.0);
  // Constant 1 outputs never hit an all-zero outcome.
  EXPECT_DOUBLE_EQ(lifted_chsh(deterministic(3, 1, 1), 3, 3), 0.0);

  EXPECT_THROW(lifted_chsh(deterministic(3, 0, 0), 3, 1), DomainError);
  EXPECT_THROW(lifted_chsh(deterministic(3, 0, 0), 3, 4), DomainError);
  EXPECT_THROW(lifted_chsh(deterministic(3, 0, 0), 3, 2, 2), DomainError);
}

TEST(bell, lifted_chsh_within_algebraic_range) {
  const auto s = random_near_symmetric(3, 2);
  const auto p = quantum_correlations(embed(s), chain_measurements(s));
  const double lhs = lifted_chsh(p, 3, 2);
  EXPECT_LE(lhs, 1.0);
  EXPECT_GE(lhs, -3.0);
}

TEST(bell, deterministic_gap_values) {
  for (int n = 3; n <= 6; ++n) {
    const auto zero = deterministic(n, 0, 0);
    EXPECT_DOUBLE_EQ(improved_gap(zero, n), -(n - 2.0));
    EXPECT_DOUBLE_EQ(catalonia_lhs(zero, n), 1.0 - (n - 1.0));
    EXPECT_DOUBLE_EQ(curchod_gap(zero, n, CurchodVariant::kLiteral), -(n - 2.0));
    EXPECT_DOUBLE_EQ(curchod_gap(zero, n, CurchodVariant::kGeneralized), -(n - 2.0));
  }
  EXPECT_EQ(to_string(CurchodVariant::kLiteral), "literal");
  EXPECT_EQ(to_string(CurchodVariant::kGeneralized), "generalized");
}

TEST(bell, product_state_catalonia) {
  for (int n = 3; n <= 6; ++n) {
    auto psi = DenseState::zeros(n);
    psi[0] = 1.0;
    MeasurementAssignment m(n);
    m.set_symmetric_flag(true);
    EXPECT_NEAR(catalonia_lhs(psi, m), 1.0 - (n - 1.0), 1e-15);
  }
}

TEST(bell, improved_equals_catalonia_under_symmetry) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = random_near_symmetric(n, 10 * n + seed);
      const auto psi = embed(s);
      const auto m = chain_measurements(s);
      EXPECT_NEAR(improved_gap(psi, m), catalonia_lhs(psi, m), 1e-12);
    }
  }
}

TEST(bell, catalonia_requires_symmetric_measurements) {
  const auto s = random_near_symmetric(3, 1);
  auto m = chain_measurements(s);
  auto asymmetric = m;
  asymmetric.at(3, 1) = asymmetric.at(3, 0);
  EXPECT_THROW(catalonia_lhs(embed(s), asymmetric), PreconditionError);
  MeasurementAssignment unflagged(3);
  EXPECT_THROW(catalonia_lhs(embed(s), unflagged), PreconditionError);
  EXPECT_NO_THROW(catalonia_lhs(embed(s), m));
}

TEST(bell, hardy_state_violates_and_matches_p18) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = random_near_symmetric(n, 123 + n);
    const auto psi = embed(s);
    const auto m = chain_measurements(s);
    const auto res = hardy_residuals(psi, m);
    EXPECT_LT(res.max_residual(), 1e-10);
    // With the three zeros, the inequality value reduces to p18.
    EXPECT_NEAR(catalonia_lhs(psi, m), res.p18, 1e-10);
    EXPECT_GT(catalonia_lhs(psi, m), 0.0);
  }
}

TEST(bell, permutation_of_symmetric_parties) {
  const int n = 4;
  const auto s = random_near_symmetric(n, 17);
  const auto psi = embed(s);
  const auto m = chain_measurements(s);
  const auto swapped = gmnl::testing::swap_parties(psi, 2, 4);
  EXPECT_NEAR(catalonia_lhs(psi, m), catalonia_lhs(swapped, m), 1e-13);
  EXPECT_NEAR(curchod_gap(quantum_correlations(psi, m), n, CurchodVariant::kGeneralized),
              curchod_gap(quantum_correlations(swapped, m), n, CurchodVariant::kGeneralized),
              1e-13);
}

TEST(bell, hardy_residuals_fields) {
  const auto r = hardy_residuals(deterministic(3, 0, 1), 3);
  EXPECT_DOUBLE_EQ(r.r15, 1.0);
  EXPECT_DOUBLE_EQ(r.r16, 1.0);
  EXPECT_DOUBLE_EQ(r.r17, 0.0);
  EXPECT_DOUBLE_EQ(r.p18, 1.0);
  HardyResiduals h{0.1, 0.3, 0.2, 0.5};
  EXPECT_DOUBLE_EQ(h.max_residual(), 0.3);
}

TEST(bell, two_party_variants_reduce_to_chsh) {
  const auto s = random_near_symmetric(3, 44);
  const auto full = quantum_correlations(embed(s), chain_measurements(s));
  // Two-party marginal: sum out party 3 at setting 0.
  const ProbabilityFn p = [&](const CorrelationQuery& q) {
    double total = 0.0;
    for (std::uint8_t a = 0; a < 2; ++a) {
      auto q3 = CorrelationQuery::zeros(3);
      q3.set(1, q.outcomes[0], q.settings[0]).set(2, q.outcomes[1], q.settings[1]).set(3, a, 0);
      total += full(q3);
    }
    return total;
  };
  const double chsh = lifted_chsh(p, 2, 2);
  EXPECT_DOUBLE_EQ(curchod_gap(p, 2, CurchodVariant::kLiteral), chsh);
  EXPECT_DOUBLE_EQ(curchod_gap(p, 2, CurchodVariant::kGeneralized), chsh);
  EXPECT_DOUBLE_EQ(improved_gap(p, 2), chsh);
}
