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

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gmnl/certify.h"
#include "gmnl/oracle.h"

namespace gmnl::tools {

// Stable exit-code contract.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 1,
  kExitVerdictFalse = 2,
  kExitInternalFailure = 3,
};

struct RunOptions {
  CertifyOptions certify;
  std::optional<std::string> state_path;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  int n = 3;
  int count = 100;
  int points = 720;
  std::string family;
  std::string variant = "both";           // literal | generalized | both
  std::string model = "deterministic";    // deterministic | no-signaling
  std::size_t samples = 100000;           // check-bilocal, n > 3

  void validate() const;
};

int cmd_certify(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_random(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_demo(const RunOptions& opts, std::ostream& out, std::ostream& err);

// With a non-empty gap_override the given functionals replace the standard
// ones; used to exercise the violation path.
int cmd_check_bilocal(const RunOptions& opts, std::ostream& out, std::ostream& err,
                      std::span<const oracle::NamedGap> gap_override = {});

// Parses argv and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmnl::tools
