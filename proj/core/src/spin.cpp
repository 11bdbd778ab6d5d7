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

#include "spinsbs/spin.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace spinsbs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_int(std::string_view s, int &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto *first = s.data();
    const auto *last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !s.empty();
}

} // namespace

HalfInteger HalfInteger::parse(std::string_view text) {
    const auto s = trim(text);
    const auto bad = [&] {
        return std::invalid_argument("not a half-integer: '" +
                                     std::string(text) + "'");
    };
    if (s.empty()) {
        throw bad();
    }
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        int num = 0;
        int den = 0;
        if (!parse_int(trim(s.substr(0, slash)), num) ||
            !parse_int(trim(s.substr(slash + 1)), den)) {
            throw bad();
        }
        if (den == 1) {
            return from_twice(2 * num);
        }
        if (den == 2) {
            return from_twice(num);
        }
        throw bad();
    }
    if (int whole = 0; parse_int(s, whole)) {
        return from_twice(2 * whole);
    }
    // Decimal form; strtod needs a terminated buffer.
    const std::string buf(s);
    char *end = nullptr;
    const double x = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(x)) {
        throw bad();
    }
    return from_double(x);
}

HalfInteger HalfInteger::from_double(double x) {
    const double twice = std::round(2.0 * x);
    if (!std::isfinite(x) || std::abs(2.0 * x - twice) > 2e-9 ||
        std::abs(twice) > 1e9) {
        throw std::invalid_argument("not a half-integer: " + std::to_string(x));
    }
    return from_twice(static_cast<int>(twice));
}

std::string HalfInteger::to_string() const {
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

SpinQuantumNumber::SpinQuantumNumber(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) {
        throw std::invalid_argument("spin quantum number must be >= 0");
    }
}

SpinQuantumNumber SpinQuantumNumber::parse(std::string_view text) {
    const auto h = HalfInteger::parse(text);
    if (h.twice() < 0) {
        throw std::invalid_argument("spin quantum number must be >= 0: '" +
                                    std::string(text) + "'");
    }
    return SpinQuantumNumber(h.twice());
}

std::vector<HalfInteger> SpinQuantumNumber::magnetic_numbers() const {
    std::vector<HalfInteger> ms;
    ms.reserve(static_cast<std::size_t>(dimension()));
    for (int tm = twice_j_; tm >= -twice_j_; tm -= 2) {
        ms.push_back(HalfInteger::from_twice(tm));
    }
    return ms;
}

bool SpinQuantumNumber::admits(HalfInteger m) const {
    const int tm = m.twice();
    return tm <= twice_j_ && tm >= -twice_j_ && (twice_j_ - tm) % 2 == 0;
}

int SpinQuantumNumber::index_of(HalfInteger m) const {
    if (!admits(m)) {
        throw std::invalid_argument("m = " + m.to_string() +
                                    " is not a magnetic number of j = " +
                                    to_string());
    }
    return (twice_j_ - m.twice()) / 2;
}

void require_dense_dimension(SpinQuantumNumber j, int max_twice_j) {
    if (j.twice() > max_twice_j) {
        throw std::invalid_argument("2j = " + std::to_string(j.twice()) +
                                    " exceeds the dense-matrix cap of " +
                                    std::to_string(max_twice_j));
    }
}

SpinOperators build_spin_operators(SpinQuantumNumber j) {
    require_dense_dimension(j);
    const int n = j.dimension();
    const double jj = j.value();

    Matrix sz = Matrix::Zero(n, n);
    Matrix splus = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double m = jj - i;
        sz(i, i) = m;
        // S_+ raises index i+1 (m-1) to index i (m).
        if (i + 1 < n) {
            const double lower = m - 1.0;
            splus(i, i + 1) = std::sqrt(jj * (jj + 1.0) - lower * (lower + 1.0));
        }
    }
    const Matrix sminus = splus.adjoint();
    const Complex i_unit(0.0, 1.0);

    SpinOperators ops{{j, 0.5 * (splus + sminus)},
                      {j, (splus - sminus) / (2.0 * i_unit)},
                      {j, sz}};
    return ops;
}

} // namespace spinsbs
