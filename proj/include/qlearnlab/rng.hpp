// Copyright 2026 The qlearnlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qlearnlab {

/// Deterministic random stream: a std::mt19937_64 engine (bit-exact across
/// standard libraries) combined with hand-rolled draw transforms, so that a
/// 64-bit seed fully determines every output on every platform.  The
/// std::<distribution> classes are deliberately not used; their output is
/// implementation-defined.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); exact via rejection.  bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Standard normal via Box-Muller; generates draws in pairs and caches
    /// the second, so consumption order is part of the stream contract.
    double normal();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// SplitMix64 output function.  Used as the mixing primitive for deriving
/// purpose-keyed child seeds from one master seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stateless finalizer form of splitmix64 (a bijection on 64-bit values).
std::uint64_t mix64(std::uint64_t x);

}  // namespace qlearnlab
