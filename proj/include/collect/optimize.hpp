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
#include "collect/state.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace collect {

enum class OptimizeMode { Maximize, Minimize };

struct OptimizerConfig {
    std::size_t restarts = 32;
    std::size_t max_iterations = 2000;
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    OptimizeMode mode = OptimizeMode::Maximize;
};

/// How the objective was evaluated: Gram formula over parties B..K with
/// party A analytic, or the full projection product over all parties.
enum class SearchSpace { GramTail, FullProduct };

struct OptimumResult {
    double value = 0.0;
    std::vector<double> params;
    DetectorSet detectors;
    SearchSpace space = SearchSpace::GramTail;
    OptimizeMode mode = OptimizeMode::Maximize;
    std::size_t restarts = 0;
    std::size_t restarts_agreeing = 0;
    std::size_t restarts_converged = 0;
    bool converged = false;
};

struct LocalSearchResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Nelder-Mead simplex minimization of `f` from `start`. Stops once the
/// spread of objective values across the simplex drops below `tolerance`
/// or after `max_iterations`.
LocalSearchResult nelder_mead(const std::function<double(std::span<const double>)> &f,
                              std::vector<double> start, double step, std::size_t max_iterations,
                              double tolerance);

/// Columns of U = diag(e^{i alpha}) applied after a product of two-level
/// rotations over every pair (p, q), p < q. Layout of `params`: for each
/// pair in lexicographic order (angle, phase), then `dim` column phases;
/// dim^2 values in total. Zero params give the identity.
LocalBasis unitary_from_params(std::span<const double> params, std::size_t dim,
                               std::size_t party = 0);

/// Throws ShapeError for states whose parties B..K are not all qubits when
/// the Gram path applies; otherwise searches all K parties with the
/// general parameterization. Throws ConvergenceError if no restart converged
/// and reports converged=false if the best restart did not.
OptimumResult optimize_collectibility(const StateVector &state, const OptimizerConfig &config);

OptimumResult maximize_collectibility(const StateVector &state, OptimizerConfig config);
OptimumResult minimize_collectibility(const StateVector &state, OptimizerConfig config);

/// Default cap on the number of grid evaluations in grid_oracle.
inline constexpr std::size_t kGridBudget = 200'000'000;

/// Maximum of the Gram-formula collectibility over a uniform grid of
/// `resolution` polar angles on [0, pi] and `resolution` azimuths on
/// [0, 2 pi) per party B..K. Never exceeds the true maximum.
/// Throws ScaleError past `budget` evaluations, ShapeError for non-qubit
/// detector parties.
double grid_oracle(const StateVector &state, std::size_t resolution,
                   std::size_t budget = kGridBudget);

} // namespace collect
