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
#include <random>

namespace gmnl {

// Seeded source of standard normal deviates whose output sequence is fixed
// across standard libraries: std::mt19937_64 (algorithm pinned by the
// standard), 53-bit uniforms u = (x >> 11) * 2^-53, and the basic Box-Muller
// transform using both outputs of each pair. std::normal_distribution is
// avoided because its algorithm is implementation-defined.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();           // [0, 1)
  double uniform_open_left(); // (0, 1]
  double normal();

  std::uint64_t next_bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gmnl
