// Copyright 2026 The entvar developers
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

namespace entvar {

/// SplitMix64 finalizer. Spreads low-entropy seeds over the full 64-bit
/// range before they reach an engine.
std::uint64_t mix64(std::uint64_t z);

/// Seed of the substream identified by (a, b) under a base seed. Sampling
/// one observable per substream keeps parallel and serial schedules
/// bit-identical.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Seeded random stream with portable output: the engine sequence is fixed
/// by the standard and the uniform/normal transforms below use plain
/// arithmetic on the raw 64-bit draws, so identical seeds give identical
/// doubles within a build.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(mix64(seed)) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; generates in pairs.
    double normal();

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace entvar
