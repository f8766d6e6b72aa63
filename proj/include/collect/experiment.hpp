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

#include "collect/basis.hpp"
#include "collect/collectibility.hpp"
#include "collect/state.hpp"

#include <array>
#include <cstdint>
#include <string_view>

/// Forward models of the two Gram-measurement schemes for a two-qubit state
/// and a qubit detector basis on party B, plus shot-noise sampling and
/// plug-in estimation of the collectibility.
///
/// Both copies of the state are identical. Party-B outcome i on copy 1 has
/// probability p1[i] = G_ii, outcome j on copy 2 has p2[j] = G_jj. The
/// heralded party-A photons then enter either
///   - a 50:50 beamsplitter (hom), whose double-click probability is
///     p_ij(+,+) = (1 - |<phi_i|phi_j>|^2) / 2 for normalized conditionals, or
///   - a swap test (swap), whose control-qubit mean is
///     <sigma_z>_ij = |<phi_i|phi_j>|^2.
/// In both cases |G_ij|^2 = p1[i] p2[j] (1 - 2 p_ij) = p1[i] p2[j] <sigma_z>_ij.
namespace collect::experiment {

enum class Scheme { Hom, Swap };
std::string_view to_string(Scheme s);
Scheme scheme_from_string(std::string_view s);

using Pair = std::array<double, 2>;
using Table = std::array<std::array<double, 2>, 2>;
using Flags = std::array<std::array<bool, 2>, 2>;

/// Conditional probability below which a party-B outcome counts as absent.
inline constexpr double kDegenerateTolerance = 1e-12;

struct SchemeProbabilities {
    Scheme scheme = Scheme::Hom;
    Pair p1{};
    Pair p2{};
    /// hom: double-click probability p_ij(+,+); swap: <sigma_z>_ij.
    Table coincidence{};
    /// false where G_ii or G_jj vanishes and the heralded pair never occurs.
    Flags present{};
    /// |G_ij|^2 from the scheme's identity.
    Table g2{};
};

SchemeProbabilities hom_forward(const StateVector &state, BlochAngles angles);
SchemeProbabilities swap_forward(const StateVector &state, BlochAngles angles);
SchemeProbabilities forward(const StateVector &state, BlochAngles angles, Scheme scheme);

/// Raw counts. Each stage (copy 1, copy 2, every present (i, j) pair) gets
/// its own `shots` trials. `hits` counts double clicks (hom) or control
/// outcome +1 (swap).
struct ShotCounts {
    Scheme scheme = Scheme::Hom;
    std::uint64_t shots = 0;
    std::array<std::uint64_t, 2> n1{};
    std::array<std::uint64_t, 2> n2{};
    std::array<std::array<std::uint64_t, 2>, 2> hits{};
    std::array<std::array<std::uint64_t, 2>, 2> trials{};
};

ShotCounts sample_experiment(const SchemeProbabilities &probs, std::uint64_t shots, Rng &rng);

struct GramEstimate {
    Table g2{};
    Table g2_stderr{};
    std::uint64_t shots = 0;
    double y_estimate = 0.0;
    double y_stderr = 0.0;
};

/// Number of bootstrap resamples behind the standard errors.
inline constexpr std::size_t kBootstrapResamples = 1000;
/// Offset added to the run seed for the bootstrap stream.
inline constexpr std::uint64_t kBootstrapStreamOffset = 1'000'000;

/// Plug-in estimate from empirical frequencies. Standard errors come from a
/// bootstrap that redraws every stage from its empirical frequency.
/// Throws EmptyCounts if shots == 0.
GramEstimate estimate_gram(const ShotCounts &counts, Rng &bootstrap_rng,
                           std::size_t resamples = kBootstrapResamples);

/// Plug-in estimate only (no bootstrap).
GramEstimate plug_in(const ShotCounts &counts);

/// Plug-in estimate evaluated at the exact probabilities (infinite shots).
GramEstimate exact_estimate(const SchemeProbabilities &probs);

struct ExperimentReport {
    Scheme scheme = Scheme::Hom;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    BlochAngles angles;
    double exact_y = 0.0;
    GramEstimate estimate;
    Verdict verdict = Verdict::Inconclusive;
    /// (y_estimate - 1/16) / y_stderr; +-inf when the bootstrap spread is 0.
    double significance = 0.0;
};

/// forward -> sample -> estimate -> verdict at 1/16. Throws ShapeError for
/// anything but a two-qubit state.
ExperimentReport run_experiment(const StateVector &state, BlochAngles angles, Scheme scheme,
                                std::uint64_t shots, std::uint64_t seed);

} // namespace collect::experiment
