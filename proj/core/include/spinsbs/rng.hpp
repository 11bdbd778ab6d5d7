// Copyright 2026 The spinsbs Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Reproducible random streams.
 *
 * Every (base seed, realization, stream) triple gets its own generator: the
 * triple is hashed with the SplitMix64 finalizer into a 64-bit seed for a
 * std::mt19937_64, whose output sequence is fixed by the C++ standard.
 * Uniform doubles are built from the top 53 bits, so the numbers do not
 * depend on the standard library's distribution implementations or on how
 * realizations are scheduled across threads.
 */
#pragma once

#include <cstdint>
#include <random>

namespace spinsbs {

/// SplitMix64 output function applied to x.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

[[nodiscard]] std::uint64_t derive_stream_seed(std::uint64_t base_seed,
                                               std::uint64_t realization,
                                               std::uint64_t stream);

class StreamRng {
  public:
    StreamRng(std::uint64_t base_seed, std::uint64_t realization,
              std::uint64_t stream)
        : engine_(derive_stream_seed(base_seed, realization, stream)) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [low, high); exactly low when low == high.
    double uniform(double low, double high) {
        return low + (high - low) * uniform01();
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace spinsbs
