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

#pragma once

#include <utility>

/// Closed forms for a two-qubit state in Schmidt form cos(psi/2)|00> +
/// sin(psi/2)|11> measured with the qubit basis of polar angle theta on
/// party B and party A maximized analytically. All functions accept
/// psi, theta in [0, pi] and throw RangeError otherwise.
namespace collect::two_qubit {

/// Y_theta(psi); independent of the azimuth.
double collectibility(double psi, double theta);

/// (min, max) over detector settings, reached at theta = 0 and theta = pi/2.
std::pair<double, double> extremes(double psi);

/// Average of Y_theta(psi) over the uniform measure on the Bloch sphere.
double mean(double psi);

/// Probability that a uniformly random detector setting gives Y > 1/16.
double detect_prob(double psi);

/// (16 Y - 1) / 3, mapping the separable bound to 0 and the maximum to 1.
constexpr double rescale(double y) { return (16.0 * y - 1.0) / 3.0; }

} // namespace collect::two_qubit
