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

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "gmnl/errors.h"
#include "gmnl/gme.h"
#include "gmnl/hardy.h"
#include "gmnl/oracle.h"
#include "gmnl/state.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gmnl;
using gmnl::testing::complex_near;
using gmnl::testing::kPi;

namespace {

// Purity of the reduced state on an arbitrary party subset by explicit
// partial trace over the complement.
double purity_by_partial_trace(const DenseState& psi, std::uint32_t s_mask) {
  const int n = psi.num_qubits();
  std::vector<int> s_parties;
  std::vector<int> rest;
  for (int j = 1; j <= n; ++j) ((s_mask >> (j - 1)) & 1u ? s_parties : rest).push_back(j);
  const std::size_t ds = std::size_t{1} << s_parties.size();
  const std::size_t dr = std::size_t{1} << rest.size();
  auto index = [&](std::size_t s, std::size_t r) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < s_parties.size(); ++k) {
      if ((s >> k) & 1u) i |= std::size_t{1} << (n - s_parties[k]);
    }
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if ((r >> k) & 1u) i |= std::size_t{1} << (n - rest[k]);
    }
    return i;
  };
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(ds, ds);
  for (std::size_t a = 0; a < ds; ++a) {
    for (std::size_t b = 0; b < ds; ++b) {
      for (std::size_t r = 0; r < dr; ++r) {
        rho(a, b) += psi[index(a, r)] * std::conj(psi[index(b, r)]);
      }
    }
  }
  return (rho * rho).trace().real();
}

}  // namespace

TEST(gme, c_coefficients_ghz3) {
  const auto p = c_coefficients(ghz_state(3));
  ASSERT_EQ(p.c.size(), 3u);
  EXPECT_TRUE(complex_near(0.0, p.c[0], 1e-15));
  EXPECT_TRUE(complex_near(0.5, p.c[1], 1e-15));
  EXPECT_TRUE(complex_near(0.0, p.c[2], 1e-15));
}

TEST(gme, c_coefficients_length) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(c_coefficients(ghz_state(n)).c.size(), static_cast<std::size_t>(2 * n - 3));
  }
}

TEST(gme, c_coefficients_vanish_on_biseparable) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = biseparable(n, Amplitude{0.7, -1.3}, gmnl::testing::random_coefficients(n, n));
    for (const auto& c : c_coefficients(s).c) EXPECT_LT(std::abs(c), 1e-12);
  }
}

TEST(gme, poly_eval_examples) {
  PolyCoeffs zero{4, std::vector<Amplitude>(5)};
  EXPECT_EQ(poly_eval(zero, 0.3), Amplitude{});
  EXPECT_EQ(poly_eval(zero, 2.9), Amplitude{});

  const auto ghz = c_coefficients(ghz_state(3));
  EXPECT_TRUE(complex_near(std::sqrt(3.0) / 8.0, poly_eval(ghz, kPi / 6), 1e-15));

  const auto s = random_near_symmetric(5, 11);
  const auto p = c_coefficients(s);
  EXPECT_TRUE(complex_near(p.c[0], poly_eval(p, 0.0), 1e-15));

  EXPECT_THROW(poly_eval(p, kPi / 2), DomainError);
  EXPECT_THROW(poly_eval(p, 3 * kPi / 2), DomainError);
}

TEST(gme, identity_chain) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = random_near_symmetric(n, 1000 * n + seed);
      const auto p = c_coefficients(s);
      for (double alpha : alpha_grid(64)) {
        const Amplitude poly = poly_eval(p, alpha);
        const Amplitude closed = residual_coeffs(s, alpha).determinant();
        const auto b = oracle::dense_residual(s, alpha);
        const Amplitude dense = b[0] * b[3] - b[1] * b[2];
        ASSERT_TRUE(complex_near(closed, poly, 1e-11)) << n << " " << alpha;
        ASSERT_TRUE(complex_near(dense, poly, 1e-11)) << n << " " << alpha;
      }
    }
  }
}

TEST(gme, first_party_separability_examples) {
  const Amplitude lambda{2.0, 1.0};
  const auto s = biseparable(5, lambda, gmnl::testing::random_coefficients(5, 77));
  const auto sep = first_party_separability(s);
  EXPECT_TRUE(sep.separable);
  ASSERT_TRUE(sep.lambda.has_value());
  EXPECT_TRUE(complex_near(lambda, *sep.lambda, 1e-12));

  const auto ghz = first_party_separability(ghz_state(3));
  EXPECT_FALSE(ghz.separable);
  EXPECT_FALSE(ghz.lambda.has_value());

  NearSymmetricState ones{3, {0.0, 0.0, 0.0}, {0.6, 0.0, 0.8}};
  const auto zero_h = first_party_separability(ones);
  EXPECT_TRUE(zero_h.separable);
  ASSERT_TRUE(zero_h.lambda.has_value());
  EXPECT_EQ(*zero_h.lambda, Amplitude{});
}

TEST(gme, separability_equivalence_both_directions) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto sep_state =
          biseparable(n, Amplitude{std::cos(1.0 * seed), std::sin(2.0 * seed)},
                      gmnl::testing::random_coefficients(n, 500 + seed));
      double max_c = 0.0;
      for (const auto& c : c_coefficients(sep_state).c) max_c = std::max(max_c, std::abs(c));
      EXPECT_LT(max_c, 1e-12);
      EXPECT_TRUE(first_party_separability(sep_state).separable);
      EXPECT_FALSE(gme_check(sep_state).is_gme);

      const auto gme_state = random_near_symmetric(n, 900 + seed);
      double max_gme_c = 0.0;
      for (const auto& c : c_coefficients(gme_state).c) {
        max_gme_c = std::max(max_gme_c, std::abs(c));
      }
      EXPECT_GT(max_gme_c, 1e-12);
      EXPECT_FALSE(first_party_separability(gme_state).separable);
    }
  }
}

TEST(gme, gme_check_ghz_and_w) {
  for (int n = 3; n <= 8; ++n) {
    const auto ghz = gme_check(ghz_state(n));
    EXPECT_TRUE(ghz.is_gme) << n;
    ASSERT_EQ(ghz.purities.size(), static_cast<std::size_t>(n - 1));
    for (double p : ghz.purities) EXPECT_NEAR(p, 0.5, 1e-12);
    EXPECT_TRUE(gme_check(w_state(n)).is_gme) << n;
  }
}

TEST(gme, gme_check_names_first_party_cut) {
  for (int n = 3; n <= 6; ++n) {
    // |0> (x) |D^{n-1}_1>
    NearSymmetricState s{n, std::vector<Amplitude>(n), std::vector<Amplitude>(n)};
    s.h[1] = 1.0;
    const auto res = gme_check(s);
    EXPECT_FALSE(res.is_gme);
    ASSERT_TRUE(res.failing.has_value());
    EXPECT_EQ(res.failing->symmetric_in_s, 0);
  }
  EXPECT_EQ((BipartitionClass{4, 0}.to_string()), "{1}|{2,3,4}");
  EXPECT_EQ((BipartitionClass{5, 2}.to_string()), "{1,2,3}|{4,5}");

  const auto bis = biseparable(4, Amplitude{0.2, 0.1}, gmnl::testing::random_coefficients(4, 4));
  EXPECT_FALSE(gme_check(bis).is_gme);
}

TEST(gme, class_purity_matches_every_cut_in_the_class) {
  for (int n = 3; n <= 6; ++n) {
    const auto s = random_near_symmetric(n, 31 * n);
    const auto psi = embed(s);
    const auto res = gme_check(s);
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      // Class: party 1 on the same side as `mask`'s party-1 side.
      const std::uint32_t side = (mask & 1u) ? mask : (full & ~mask);
      const int c = std::popcount(side) - 1;
      EXPECT_NEAR(purity_by_partial_trace(psi, mask), res.purities[c], 1e-12)
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(gme, alpha_grid_drops_pi_over_two) {
  const auto even = alpha_grid(1024);
  EXPECT_EQ(even.size(), 1023u);
  for (double a : even) EXPECT_GT(std::abs(a - kPi / 2), 1e-6);
  EXPECT_EQ(alpha_grid(65).size(), 65u);
  EXPECT_EQ(even.front(), 0.0);
}

TEST(gme, select_alpha_ghz3) {
  const auto sel = select_alpha(ghz_state(3));
  EXPECT_TRUE(sel.valid);
  EXPECT_GT(sel.entanglement_margin, 1e-8);
  EXPECT_GT(sel.non_maximality_margin, 1e-6);
  EXPECT_GT(sel.residual_norm, 1e-10);
  EXPECT_GE(sel.alpha, 0.0);
  EXPECT_LT(sel.alpha, kPi);
  // Product at 0, maximally entangled at pi/4, excluded at pi/2.
  for (double bad : {0.0, kPi / 4, kPi / 2}) EXPECT_GT(std::abs(sel.alpha - bad), 1e-3);
  EXPECT_FALSE(evaluate_alpha(ghz_state(3), 0.0).valid);
  EXPECT_FALSE(evaluate_alpha(ghz_state(3), kPi / 4).valid);
  EXPECT_FALSE(evaluate_alpha(ghz_state(3), kPi / 2).valid);
}

TEST(gme, select_alpha_guards) {
  const auto bis = biseparable(3, 1.0, std::vector<Amplitude>{1.0, 0.0, 0.0});
  EXPECT_THROW(select_alpha(bis), PreconditionError);
  EXPECT_THROW(select_alpha(ghz_state(3), 32), DomainError);
  AlphaMargins impossible;
  impossible.norm = 10.0;
  EXPECT_THROW(select_alpha(ghz_state(3), 1024, impossible), SelectionError);
}

TEST(gme, select_alpha_random_states) {
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto sel = select_alpha(random_near_symmetric(n, seed * 13 + n));
      EXPECT_TRUE(sel.valid);
      EXPECT_GT(sel.score(), 0.0);
    }
  }
}

TEST(gme, ranking_is_best_first_with_smallest_alpha_tiebreak) {
  const auto ranked = rank_alphas(ghz_state(3), 256);
  ASSERT_FALSE(ranked.empty());
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].score(), ranked[i].score());
    if (ranked[i - 1].score() == ranked[i].score()) {
      EXPECT_LT(ranked[i - 1].alpha, ranked[i].alpha);
    }
  }
}

TEST(gme, sampled_root_count_bound) {
  // GHZ_3: sin(a)cos(a)/2 has its only in-range root at 0.
  EXPECT_EQ(sampled_root_count(c_coefficients(ghz_state(3)), 4096), 1);
  EXPECT_EQ(sampled_root_count(PolyCoeffs{3, std::vector<Amplitude>(3)}, 4096), 0);
  for (int n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto p = c_coefficients(random_near_symmetric(n, 7000 + seed));
      EXPECT_LE(sampled_root_count(p, 4096), 2 * n - 4);
    }
  }
}

TEST(gme, real_polynomial_with_interior_roots) {
  // Real coefficients whose polynomial in tan(alpha) is (t - 1)(t - 2) for
  // n = 3: C = (2, -3, 1). Roots at atan(1) and atan(2).
  PolyCoeffs p{3, {2.0, -3.0, 1.0}};
  EXPECT_EQ(sampled_root_count(p, 4096), 2);
  EXPECT_NEAR(std::abs(poly_eval(p, std::atan(1.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(poly_eval(p, std::atan(2.0))), 0.0, 1e-15);
}
