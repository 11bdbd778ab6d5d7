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
 * Half-integer quantum numbers and the spin-j angular momentum matrices.
 *
 * Basis convention, used everywhere in the library: the S_z eigenbasis is
 * ordered by descending magnetic number, m = +j, +j-1, ..., -j. Index 0 is
 * |j;+j> and the last index is |j;-j>.
 */
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "spinsbs/linalg.hpp"

namespace spinsbs {

/// Largest 2j accepted by routines that build dense (2j+1)x(2j+1) matrices.
inline constexpr int kMaxDenseTwiceJ = 40;

/**
 * An exact half-integer, stored as twice its value.
 */
class HalfInteger {
  public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(int twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }

    /**
     * Parse "3/2", "-1/2", "2", "1.5" or "-0.5". Anything that is not an
     * exact multiple of 1/2 throws std::invalid_argument.
     */
    static HalfInteger parse(std::string_view text);

    /// Nearest half-integer to x; throws if x is farther than 1e-9 from one.
    static HalfInteger from_double(double x);

    [[nodiscard]] constexpr int twice() const { return twice_; }
    [[nodiscard]] constexpr double value() const { return 0.5 * twice_; }
    [[nodiscard]] constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// Canonical text form: "1", "-3/2", "0".
    [[nodiscard]] std::string to_string() const;

    constexpr auto operator<=>(const HalfInteger &) const = default;

  private:
    int twice_ = 0;
};

/**
 * Spin quantum number j >= 0, kept exact as the integer 2j.
 */
class SpinQuantumNumber {
  public:
    constexpr SpinQuantumNumber() = default;

    /// Throws std::invalid_argument if twice_j < 0.
    explicit SpinQuantumNumber(int twice_j);

    static SpinQuantumNumber from_twice(int twice_j) {
        return SpinQuantumNumber(twice_j);
    }
    static SpinQuantumNumber parse(std::string_view text);

    [[nodiscard]] constexpr int twice() const { return twice_j_; }
    [[nodiscard]] constexpr double value() const { return 0.5 * twice_j_; }
    [[nodiscard]] constexpr int dimension() const { return twice_j_ + 1; }

    /// Magnetic numbers in basis order: +j, +j-1, ..., -j.
    [[nodiscard]] std::vector<HalfInteger> magnetic_numbers() const;

    /// True when m is one of -j, ..., +j.
    [[nodiscard]] bool admits(HalfInteger m) const;

    /// Basis index of |j;m>; throws std::invalid_argument if !admits(m).
    [[nodiscard]] int index_of(HalfInteger m) const;

    [[nodiscard]] std::string to_string() const {
        return HalfInteger::from_twice(twice_j_).to_string();
    }

    constexpr auto operator<=>(const SpinQuantumNumber &) const = default;

  private:
    int twice_j_ = 0;
};

/// Throws std::invalid_argument when 2j exceeds the dense-matrix cap.
void require_dense_dimension(SpinQuantumNumber j,
                             int max_twice_j = kMaxDenseTwiceJ);

/**
 * A (2j+1)x(2j+1) operator on a spin-j space.
 */
struct SpinOperator {
    SpinQuantumNumber j;
    Matrix matrix;
};

struct SpinOperators {
    SpinOperator x;
    SpinOperator y;
    SpinOperator z;
};

/**
 * Standard angular momentum matrices from the ladder operators,
 * S_+|j;m> = sqrt(j(j+1) - m(m+1)) |j;m+1>, with hbar = 1.
 */
SpinOperators build_spin_operators(SpinQuantumNumber j);

} // namespace spinsbs
