// Copyright 2026 The collect Authors
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

#include "collect/two_qubit.hpp"

#include "collect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace collect::two_qubit {

namespace {

using std::numbers::pi;

void check_angle(double x, const char *name) {
    if (!(x >= 0.0 && x <= pi)) {
        throw RangeError(std::string(name) + " must lie in [0, pi]");
    }
}

// Every closed form is symmetric under psi -> pi - psi; folding keeps sin(pi) rounding out of the square roots.
double fold(double psi) { return std::min(psi, pi - psi); }

} // namespace

double collectibility(double psi, double theta) {
    check_angle(psi, "psi");
    check_angle(theta, "theta");
    psi = fold(psi);
    const double c = std::cos(psi);
    const double inside = 3.0 - 2.0 * std::cos(2 * theta) * c * c - std::cos(2 * psi);
    const double s = 2.0 * std::sin(psi) + std::sqrt(std::max(inside, 0.0));
    return s * s / 64.0;
}

std::pair<double, double> extremes(double psi) {
    check_angle(psi, "psi");
    const double s = std::sin(fold(psi));
    return {s * s / 4.0, (1.0 + s) * (1.0 + s) / 16.0};
}

double mean(double psi) {
    check_angle(psi, "psi");
    const double eps = psi - pi / 2;
    // The closed form is 0 * inf at pi/2; near it use 1/4 - eps^2/6.
    if (std::abs(eps) < 1e-7) {
        return 0.25 - eps * eps / 6.0;
    }
    return (11.0 - 7.0 * std::cos(2 * psi) + 3.0 * (pi - 2 * psi) * std::tan(psi)) / 96.0;
}

double detect_prob(double psi) {
    check_angle(psi, "psi");
    if (psi > pi / 6 && psi < 5 * pi / 6) {
        return 1.0;
    }
    psi = fold(psi);
    const double s = std::sin(psi);
    const double p = std::sqrt(std::max(2 * s - s * s, 0.0)) / std::abs(std::cos(psi));
    return std::clamp(p, 0.0, 1.0);
}

} // namespace collect::two_qubit
