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

#include <stdexcept>
#include <string>

#include "gmnl/certify.h"
#include "gmnl/state.h"
#include "json.hpp"

namespace gmnl::tools {

// Malformed user input. The message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": <int>, "h": [[re, im] x n], "h_prime": [[re, im] x n]}.
NearSymmetricState parse_state(const nlohmann::json& doc);
NearSymmetricState parse_state_text(const std::string& text);
NearSymmetricState load_state_file(const std::string& path);

nlohmann::json state_to_json(const NearSymmetricState& s);
nlohmann::json amplitude_to_json(Amplitude a);
nlohmann::json report_to_json(const CertificationReport& report);

}  // namespace gmnl::tools
