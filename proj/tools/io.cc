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

#include "io.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gmnl::tools {

using nlohmann::json;

namespace {

Amplitude parse_amplitude(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError(field + ": expected [re, im]");
  }
  const double re = v[0].get<double>();
  const double im = v[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InputError(field + ": non-finite value");
  }
  return {re, im};
}

std::vector<Amplitude> parse_coefficients(const json& doc, const char* key, int n) {
  if (!doc.contains(key)) throw InputError(std::string(key) + ": missing");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string(key) + ": expected an array");
  if (arr.size() != static_cast<std::size_t>(n)) {
    throw InputError(std::string(key) + ": expected " + std::to_string(n) +
                     " entries, got " + std::to_string(arr.size()));
  }
  std::vector<Amplitude> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    out.push_back(parse_amplitude(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json measurement_to_json(const Measurement& m) {
  auto bra = [](const Bra& b) {
    return json::array({amplitude_to_json(b.beta), amplitude_to_json(b.gamma)});
  };
  return json::array({bra(m.outcome0), bra(m.outcome1)});
}

}  // namespace

NearSymmetricState parse_state(const json& doc) {
  if (!doc.is_object()) throw InputError("state: expected a JSON object");
  if (!doc.contains("n")) throw InputError("n: missing");
  if (!doc.at("n").is_number_integer()) throw InputError("n: expected an integer");
  const auto n = doc.at("n").get<long long>();
  if (n < 3 || n > 24) throw InputError("n: must lie in [3, 24], got " + std::to_string(n));
  NearSymmetricState s{static_cast<int>(n), parse_coefficients(doc, "h", static_cast<int>(n)),
                       parse_coefficients(doc, "h_prime", static_cast<int>(n))};
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("state: ") + e.what());
  }
  return s;
}

NearSymmetricState parse_state_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("state: malformed JSON: ") + e.what());
  }
  return parse_state(doc);
}

NearSymmetricState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("state: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

json amplitude_to_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

json state_to_json(const NearSymmetricState& s) {
  json h = json::array();
  json hp = json::array();
  for (const auto& a : s.h) h.push_back(amplitude_to_json(a));
  for (const auto& a : s.h_prime) hp.push_back(amplitude_to_json(a));
  return json{{"n", s.n}, {"h", h}, {"h_prime", hp}};
}

json report_to_json(const CertificationReport& r) {
  json out;
  out["n"] = r.n;
  out["state_digest"] = r.state_digest;
  out["gme"] = r.gme;
  out["failing_bipartition"] =
      r.failing_bipartition ? json(r.failing_bipartition->to_string()) : json(nullptr);
  if (r.alpha) {
    out["alpha"] = r.alpha->alpha;
    out["margins"] = {{"entanglement", r.alpha->entanglement_margin},
                      {"non_maximality", r.alpha->non_maximality_margin},
                      {"residual_norm", r.alpha->residual_norm}};
  } else {
    out["alpha"] = nullptr;
    out["margins"] = nullptr;
  }
  if (r.residual) {
    json b = json::array();
    for (const auto& a : r.residual->b) b.push_back(amplitude_to_json(a));
    out["b"] = b;
    out["c"] = json::array({amplitude_to_json(r.residual->c1), amplitude_to_json(r.residual->c2)});
  } else {
    out["b"] = nullptr;
    out["c"] = nullptr;
  }
  if (r.measurements) {
    json m = json::object();
    for (int j = 1; j <= r.measurements->num_parties(); ++j) {
      for (int x = 0; x < 2; ++x) {
        m[std::to_string(j) + "," + std::to_string(x)] =
            measurement_to_json(r.measurements->at(j, x));
      }
    }
    out["measurements"] = m;
  } else {
    out["measurements"] = nullptr;
  }
  if (r.values) {
    const auto& v = *r.values;
    out["hardy_residuals"] = {v.hardy.r15, v.hardy.r16, v.hardy.r17};
    out["hardy_probability"] = v.hardy.p18;
    out["catalonia_lhs"] = v.catalonia_lhs;
    out["improved_gap"] = v.improved_gap;
    out["curchod_gap"] = {{"literal", v.curchod_literal},
                          {"generalized", v.curchod_generalized}};
  } else {
    for (const char* key : {"hardy_residuals", "hardy_probability", "catalonia_lhs",
                            "improved_gap", "curchod_gap"}) {
      out[key] = nullptr;
    }
  }
  out["verdict"] = r.verdict;
  out["failure_reason"] = r.failure_reason.empty() ? json(nullptr) : json(r.failure_reason);
  const auto& o = r.options;
  out["tolerances"] = {{"residual", o.residual_tolerance},
                       {"purity", o.purity_tolerance},
                       {"entanglement_margin", o.margins.entanglement},
                       {"non_maximality_margin", o.margins.non_maximality},
                       {"norm_margin", o.margins.norm},
                       {"grid", o.grid_points},
                       {"violation_threshold", 10.0 * o.residual_tolerance}};
  return out;
}

}  // namespace gmnl::tools
