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

#include "gmnl/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gmnl/errors.h"
#include "gmnl/rng.h"

namespace gmnl::oracle {

std::array<Amplitude, 4> dense_residual(const NearSymmetricState& s,
                                        double alpha) {
  DenseState psi = embed(s);
  const Bra measured{std::cos(alpha), std::sin(alpha)};
  for (int j = s.n; j >= 3; --j) psi = project_party(psi, j, measured);
  return {psi[0], psi[1], psi[2], psi[3]};
}

SchmidtData schmidt_two_qubit(std::span<const Amplitude, 4> b) {
  Eigen::Matrix2cd m;
  m << b[0], b[1], b[2], b[3];
  const double nrm = m.norm();
  if (!(nrm > 0.0)) throw DomainError("schmidt_two_qubit: zero vector");
  m /= nrm;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const auto& sv = svd.singularValues();
  SchmidtData out;
  out.lambda_max = sv(0);
  out.lambda_min = sv(1);
  out.theta = std::acos(std::clamp(out.lambda_max, 0.0, 1.0));
  return out;
}

namespace {

std::string party_list(std::uint32_t mask, int n) {
  std::string out = "{";
  for (int j = 1; j <= n; ++j) {
    if (!((mask >> (j - 1)) & 1u)) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(j);
  }
  return out + "}";
}

// Bits of `bits` belonging to `mask`, lowest-numbered party as the high bit.
std::uint32_t pack(const std::vector<std::uint8_t>& bits, std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int j = 1; j <= n; ++j) {
    if ((mask >> (j - 1)) & 1u) out = (out << 1) | (bits[j - 1] & 1u);
  }
  return out;
}

std::string table_string(const std::vector<std::uint32_t>& table) {
  std::string out = "[";
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(x) + "->" + std::to_string(table[x]);
  }
  return out + "]";
}

}  // namespace

std::string Bipartition::to_string() const {
  return party_list(s_mask, n) + "|" + party_list(complement(), n);
}

double DeterministicBilocalStrategy::probability(const CorrelationQuery& q) const {
  const int n = bipartition.n;
  const std::uint32_t s = bipartition.s_mask;
  const std::uint32_t sbar = bipartition.complement();
  const bool match_s = response_s[pack(q.settings, s, n)] == pack(q.outcomes, s, n);
  const bool match_sbar =
      response_sbar[pack(q.settings, sbar, n)] == pack(q.outcomes, sbar, n);
  return match_s && match_sbar ? 1.0 : 0.0;
}

std::string DeterministicBilocalStrategy::to_string() const {
  return "cut " + bipartition.to_string() + " S " + table_string(response_s) +
         " Sbar " + table_string(response_sbar);
}

std::vector<DeterministicBilocalStrategy> enumerate_bilocal_extremes(int n) {
  if (n != 3) {
    throw DomainError("enumerate_bilocal_extremes: exhaustive mode supports n = 3 only; "
                      "use sample_bilocal_strategies");
  }
  std::vector<DeterministicBilocalStrategy> out;
  out.reserve(3 * 4 * 256);
  for (int single = 0; single < 3; ++single) {
    const Bipartition cut{1u << single, n};
    for (std::uint32_t fs = 0; fs < 4; ++fs) {
      for (std::uint32_t fpair = 0; fpair < 256; ++fpair) {
        DeterministicBilocalStrategy st{cut, {fs & 1u, (fs >> 1) & 1u}, {}};
        for (int x = 0; x < 4; ++x) st.response_sbar.push_back((fpair >> (2 * x)) & 3u);
        out.push_back(std::move(st));
      }
    }
  }
  return out;
}

std::vector<DeterministicBilocalStrategy> sample_bilocal_strategies(
    int n, std::size_t count, std::uint64_t seed) {
  if (n < 3 || n > 16) throw DomainError("sample_bilocal_strategies: n outside [3, 16]");
  NormalSampler rng(seed);
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<DeterministicBilocalStrategy> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t mask = 0;
    while (mask == 0 || mask == full) mask = static_cast<std::uint32_t>(rng.next_bits()) & full;
    const Bipartition cut{mask, n};
    auto random_table = [&rng](std::uint32_t group) {
      const int size = std::popcount(group);
      std::vector<std::uint32_t> table(std::size_t{1} << size);
      for (auto& a : table) {
        a = static_cast<std::uint32_t>(rng.next_bits() & ((1u << size) - 1u));
      }
      return table;
    };
    DeterministicBilocalStrategy st{cut, random_table(mask), {}};
    st.response_sbar = random_table(cut.complement());
    out.push_back(std::move(st));
  }
  return out;
}

double NoSignalingBilocalBox::probability(const CorrelationQuery& q) const {
  const int n = bipartition.n;
  int single = 0;
  while (!((bipartition.s_mask >> single) & 1u)) ++single;
  if (q.outcomes[single] != singleton_response[q.settings[single]]) return 0.0;
  const std::uint32_t pair = bipartition.complement();
  return pair_table[pack(q.settings, pair, n)][pack(q.outcomes, pair, n)];
}

std::string NoSignalingBilocalBox::to_string() const {
  std::ostringstream os;
  os << "cut " << bipartition.to_string() << " singleton [0->"
     << int(singleton_response[0]) << ",1->" << int(singleton_response[1]) << "] "
     << (pr_box ? "PR" : "local") << " box [";
  for (int x = 0; x < 4; ++x) {
    for (int a = 0; a < 4; ++a) os << (x || a ? "," : "") << pair_table[x][a];
  }
  os << "]";
  return os.str();
}

std::vector<NoSignalingBilocalBox> enumerate_ns_bilocal_extremes(int n) {
  if (n != 3) throw DomainError("enumerate_ns_bilocal_extremes: supports n = 3 only");
  std::vector<std::array<std::array<double, 4>, 4>> local_boxes;
  std::vector<std::array<std::array<double, 4>, 4>> pr_boxes;
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      std::array<std::array<double, 4>, 4> t{};
      for (int xu = 0; xu < 2; ++xu) {
        for (int xv = 0; xv < 2; ++xv) {
          const int au = (f >> xu) & 1;
          const int av = (g >> xv) & 1;
          t[2 * xu + xv][2 * au + av] = 1.0;
        }
      }
      local_boxes.push_back(t);
    }
  }
  // a_u xor a_v = x_u x_v xor p x_u xor q x_v xor r.
  for (int bits = 0; bits < 8; ++bits) {
    std::array<std::array<double, 4>, 4> t{};
    for (int xu = 0; xu < 2; ++xu) {
      for (int xv = 0; xv < 2; ++xv) {
        const int parity =
            (xu & xv) ^ ((bits & 1) & xu) ^ (((bits >> 1) & 1) & xv) ^ ((bits >> 2) & 1);
        for (int au = 0; au < 2; ++au) {
          for (int av = 0; av < 2; ++av) {
            if ((au ^ av) == parity) t[2 * xu + xv][2 * au + av] = 0.5;
          }
        }
      }
    }
    pr_boxes.push_back(t);
  }
  std::vector<NoSignalingBilocalBox> out;
  for (int single = 0; single < 3; ++single) {
    const Bipartition cut{1u << single, n};
    for (std::uint8_t fs = 0; fs < 4; ++fs) {
      const std::array<std::uint8_t, 2> resp{static_cast<std::uint8_t>(fs & 1u),
                                             static_cast<std::uint8_t>((fs >> 1) & 1u)};
      for (const auto& t : local_boxes) out.push_back({cut, resp, t, false});
      for (const auto& t : pr_boxes) out.push_back({cut, resp, t, true});
    }
  }
  return out;
}

std::vector<NamedGap> standard_gaps() {
  return {
      {"improved", [](const ProbabilityFn& p, int n) { return improved_gap(p, n); }},
      {"curchod-literal",
       [](const ProbabilityFn& p, int n) {
         return curchod_gap(p, n, CurchodVariant::kLiteral);
       }},
      {"curchod-generalized",
       [](const ProbabilityFn& p, int n) {
         return curchod_gap(p, n, CurchodVariant::kGeneralized);
       }},
  };
}

namespace {

template <typename Strategy>
ClassicalBoundSummary check_bound(int n, std::span<const Strategy> strategies,
                                  std::span<const NamedGap> gaps, double tol) {
  ClassicalBoundSummary summary;
  summary.max_gap.assign(gaps.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    const Strategy& st = strategies[i];
    const ProbabilityFn p = [&st](const CorrelationQuery& q) { return st.probability(q); };
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      const double value = gaps[g].gap(p, n);
      summary.max_gap[g] = std::max(summary.max_gap[g], value);
      if (value > tol) summary.violations.push_back({i, gaps[g].name, value, st.to_string()});
    }
    ++summary.checked;
  }
  return summary;
}

}  // namespace

ClassicalBoundSummary check_classical_bound(
    int n, std::span<const DeterministicBilocalStrategy> strategies,
    std::span<const NamedGap> gaps, double tol) {
  return check_bound(n, strategies, gaps, tol);
}

ClassicalBoundSummary check_classical_bound(
    int n, std::span<const NoSignalingBilocalBox> boxes,
    std::span<const NamedGap> gaps, double tol) {
  return check_bound(n, boxes, gaps, tol);
}

Amplitude full_amplitude(const DenseState& psi, const MeasurementAssignment& m,
                         const CorrelationQuery& q) {
  const int n = psi.num_qubits();
  if (m.num_parties() != n || q.num_parties() != n) {
    throw DomainError("full_amplitude: dimension mismatch");
  }
  std::vector<const Bra*> bras(n);
  for (int j = 1; j <= n; ++j) {
    bras[j - 1] = &m.at(j, q.settings[j - 1]).outcome(q.outcomes[j - 1]);
  }
  Amplitude acc{};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Amplitude coeff{1.0, 0.0};
    for (int j = 1; j <= n; ++j) {
      coeff *= DenseState::party_bit(n, j, i) ? bras[j - 1]->gamma : bras[j - 1]->beta;
    }
    acc += coeff * psi[i];
  }
  return acc;
}

double full_probability(const DenseState& psi, const MeasurementAssignment& m,
                        const CorrelationQuery& q) {
  return std::norm(full_amplitude(psi, m, q));
}

bool verify_pipeline(const NearSymmetricState& s,
                     const CertificationReport& report, double tol) {
  if (!report.measurements) return true;
  const MeasurementAssignment& m = *report.measurements;
  if (m.num_parties() != s.n || report.n != s.n) return false;
  for (int j = 1; j <= s.n; ++j) {
    for (int x = 0; x < 2; ++x) {
      if (!m.at(j, x).is_orthonormal(tol)) return false;
    }
  }
  if (m.symmetric_flag() && !m.parties_match()) return false;

  auto close = [tol](double a, double b) { return std::abs(a - b) <= tol; };
  if (report.residual && report.alpha) {
    const auto b = dense_residual(s, report.alpha->alpha);
    for (int i = 0; i < 4; ++i) {
      if (std::abs(b[i] - report.residual->b[i]) > tol) return false;
    }
  }
  if (!report.values) return true;

  const DenseState psi = embed(s);
  const ProbabilityFn p = [&](const CorrelationQuery& q) {
    return full_probability(psi, m, q);
  };
  const BellValues& v = *report.values;
  const HardyResiduals hardy = hardy_residuals(p, s.n);
  const bool probabilities_match =
      close(hardy.r15, v.hardy.r15) && close(hardy.r16, v.hardy.r16) &&
      close(hardy.r17, v.hardy.r17) && close(hardy.p18, v.hardy.p18) &&
      close(catalonia_lhs(p, s.n), v.catalonia_lhs) &&
      close(improved_gap(p, s.n), v.improved_gap) &&
      close(curchod_gap(p, s.n, CurchodVariant::kLiteral), v.curchod_literal) &&
      close(curchod_gap(p, s.n, CurchodVariant::kGeneralized), v.curchod_generalized);
  if (!probabilities_match) return false;

  const double rtol = report.options.residual_tolerance;
  const bool expected_verdict = report.gme && hardy.max_residual() < rtol &&
                                catalonia_lhs(p, s.n) > 10.0 * rtol;
  return expected_verdict == report.verdict;
}

}  // namespace gmnl::oracle
