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

#include "collect/optimize.hpp"

#include "collect/collectibility.hpp"
#include "collect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace collect {

namespace {

using std::numbers::pi;

constexpr double kAgreementTolerance = 1e-8;

bool uses_gram_tail(const StateVector &state) {
    const auto &dims = state.dims();
    return dims.size() >= 2 && std::all_of(dims.begin() + 1, dims.end(), [](auto d) { return d == 2; });
}

/// Folds raw search angles onto theta in [0, pi], phi in [0, 2 pi) without
/// changing the basis beyond per-vector phases.
BlochAngles canonical_angles(double theta, double phi) {
    theta = std::fmod(theta, 2 * pi);
    if (theta < 0) {
        theta += 2 * pi;
    }
    if (theta > pi) {
        theta = 2 * pi - theta;
        phi += pi;
    }
    phi = std::fmod(phi, 2 * pi);
    if (phi < 0) {
        phi += 2 * pi;
    }
    return {theta, phi};
}

struct Problem {
    std::size_t dimension = 0;
    std::function<double(std::span<const double>)> objective; // value to maximize or minimize
    std::function<DetectorSet(std::span<const double>)> decode;
    std::function<std::vector<double>(std::span<const double>)> canonicalize;
};

Problem gram_tail_problem(const StateVector &state) {
    const auto parties = state.parties();
    Problem problem;
    problem.dimension = 2 * (parties - 1);
    problem.decode = [parties](std::span<const double> x) {
        std::vector<LocalBasis> bases;
        for (std::size_t p = 1; p < parties; ++p) {
            bases.push_back(bloch_basis_unchecked(x[2 * (p - 1)], x[2 * (p - 1) + 1], p));
        }
        return DetectorSet(std::move(bases));
    };
    problem.objective = [&state, decode = problem.decode](std::span<const double> x) {
        return collectibility(state, decode(x));
    };
    problem.canonicalize = [](std::span<const double> x) {
        std::vector<double> out(x.begin(), x.end());
        for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
            const auto a = canonical_angles(out[i], out[i + 1]);
            out[i] = a.theta;
            out[i + 1] = a.phi;
        }
        return out;
    };
    return problem;
}

Problem full_product_problem(const StateVector &state) {
    const auto dims = state.dims();
    const auto n = *std::min_element(dims.begin(), dims.end());
    Problem problem;
    for (auto d : dims) {
        problem.dimension += d * d;
    }
    problem.decode = [dims, n](std::span<const double> x) {
        std::vector<LocalBasis> bases;
        std::size_t offset = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            const auto d = dims[p];
            auto basis = unitary_from_params(x.subspan(offset, d * d), d, p);
            basis.vectors.resize(n);
            bases.push_back(std::move(basis));
            offset += d * d;
        }
        return DetectorSet(std::move(bases));
    };
    problem.objective = [&state, decode = problem.decode](std::span<const double> x) {
        return projection_product(state, decode(x));
    };
    problem.canonicalize = [](std::span<const double> x) {
        std::vector<double> out(x.begin(), x.end());
        for (auto &v : out) {
            v = std::remainder(v, 4 * pi);
        }
        return out;
    };
    return problem;
}

} // namespace

LocalSearchResult nelder_mead(const std::function<double(std::span<const double>)> &f,
                              std::vector<double> start, double step, std::size_t max_iterations,
                              double tolerance) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += step;
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = f(simplex[i]);
    }
    std::vector<std::size_t> order(n + 1);

    LocalSearchResult result;
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto along = [&](std::vector<double> &out, const std::vector<double> &worst, double t) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = centroid[i] + t * (worst[i] - centroid[i]);
        }
    };

    std::size_t it = 0;
    for (; it < max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
        const auto best = order.front();
        const auto worst = order.back();
        const auto second = order[n - 1];
        if (values[worst] - values[best] < tolerance) {
            result.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[k][i] / static_cast<double>(n);
            }
        }
        along(trial, simplex[worst], -1.0);
        const double fr = f(trial);
        if (fr < values[best]) {
            along(trial2, simplex[worst], -2.0);
            const double fe = f(trial2);
            if (fe < fr) {
                simplex[worst] = trial2;
                values[worst] = fe;
            } else {
                simplex[worst] = trial;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = trial;
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        along(trial2, simplex[worst], outside ? -0.5 : 0.5);
        const double fc = f(trial2);
        if (fc < (outside ? fr : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == best) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                simplex[k][i] = simplex[best][i] + 0.5 * (simplex[k][i] - simplex[best][i]);
            }
            values[k] = f(simplex[k]);
        }
    }
    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    result.iterations = it;
    return result;
}

LocalBasis unitary_from_params(std::span<const double> params, std::size_t dim, std::size_t party) {
    if (dim < 2 || params.size() != dim * dim) {
        throw ShapeError("unitary_from_params needs dim^2 parameters");
    }
    // u is row-major; columns are the basis vectors.
    std::vector<cplx> u(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u[i * dim + i] = 1.0;
    }
    std::size_t k = 0;
    for (std::size_t p = 0; p < dim; ++p) {
        for (std::size_t q = p + 1; q < dim; ++q, k += 2) {
            const double c = std::cos(params[k] / 2);
            const double s = std::sin(params[k] / 2);
            const cplx e = std::polar(1.0, params[k + 1]);
            // u <- u * T, with T acting on columns p, q:
            //   T = [[c, -conj(e) s], [e s, c]]
            for (std::size_t r = 0; r < dim; ++r) {
                const cplx up = u[r * dim + p];
                const cplx uq = u[r * dim + q];
                u[r * dim + p] = c * up + e * s * uq;
                u[r * dim + q] = -std::conj(e) * s * up + c * uq;
            }
        }
    }
    LocalBasis basis{party, std::vector<std::vector<cplx>>(dim, std::vector<cplx>(dim))};
    for (std::size_t col = 0; col < dim; ++col) {
        const cplx phase = std::polar(1.0, params[k + col]);
        for (std::size_t r = 0; r < dim; ++r) {
            basis.vectors[col][r] = u[r * dim + col] * phase;
        }
    }
    return basis;
}

OptimumResult optimize_collectibility(const StateVector &state, const OptimizerConfig &config) {
    if (config.restarts < 1) {
        throw ParamError("restarts must be at least 1");
    }
    if (!(config.tolerance > 0.0)) {
        throw ParamError("tolerance must be positive");
    }
    if (state.parties() < 2) {
        throw ShapeError("collectibility needs at least two parties");
    }
    const bool tail = uses_gram_tail(state);
    const Problem problem = tail ? gram_tail_problem(state) : full_product_problem(state);
    const double sign = config.mode == OptimizeMode::Maximize ? -1.0 : 1.0;
    auto f = [&](std::span<const double> x) { return sign * problem.objective(x); };

    std::vector<LocalSearchResult> runs;
    runs.reserve(config.restarts);
    for (std::size_t r = 0; r < config.restarts; ++r) {
        Rng rng = derive_stream(config.seed, r);
        std::uniform_real_distribution<double> angle(0.0, 2 * pi);
        std::vector<double> start(problem.dimension);
        for (auto &x : start) {
            x = angle(rng);
        }
        auto run = nelder_mead(f, std::move(start), 0.5, config.max_iterations, config.tolerance);
        // One restart of the simplex around the incumbent guards against a
        // collapsed simplex stopping short of the optimum.
        auto polish = nelder_mead(f, run.x, 0.05, config.max_iterations, config.tolerance);
        if (polish.value <= run.value) {
            polish.iterations += run.iterations;
            polish.converged = polish.converged || run.converged;
            run = std::move(polish);
        }
        runs.push_back(std::move(run));
    }

    std::size_t best = runs.size();
    std::size_t converged = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        converged += runs[r].converged ? 1 : 0;
        if (runs[r].converged && (best == runs.size() || runs[r].value < runs[best].value)) {
            best = r;
        }
    }
    if (converged == 0) {
        throw ConvergenceError("no restart converged within " +
                               std::to_string(config.max_iterations) + " iterations");
    }
    // A non-converged restart may still hold the best point; report it as such.
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].value < runs[best].value) {
            best = r;
        }
    }

    OptimumResult result;
    result.space = tail ? SearchSpace::GramTail : SearchSpace::FullProduct;
    result.mode = config.mode;
    result.value = std::max(0.0, sign * runs[best].value);
    result.params = problem.canonicalize(runs[best].x);
    result.detectors = problem.decode(result.params);
    result.restarts = runs.size();
    result.restarts_converged = converged;
    result.converged = runs[best].converged;
    for (const auto &run : runs) {
        if (std::abs(run.value - runs[best].value) <= kAgreementTolerance) {
            ++result.restarts_agreeing;
        }
    }
    return result;
}

OptimumResult maximize_collectibility(const StateVector &state, OptimizerConfig config) {
    config.mode = OptimizeMode::Maximize;
    return optimize_collectibility(state, config);
}

OptimumResult minimize_collectibility(const StateVector &state, OptimizerConfig config) {
    config.mode = OptimizeMode::Minimize;
    return optimize_collectibility(state, config);
}

namespace {

struct GridSearch {
    const std::vector<LocalBasis> &grid;
    double best = 0.0;

    /// `phi0`, `phi1` hold the state with parties party+1..K already
    /// contracted against the j = 0 and j = 1 vectors.
    void descend(std::size_t party, const std::vector<cplx> &phi0, const std::vector<cplx> &phi1) {
        if (party == 0) {
            best = std::max(best, gram_formula(phi0, phi1));
            return;
        }
        std::vector<cplx> next0(phi0.size() / 2), next1(phi1.size() / 2);
        for (const auto &basis : grid) {
            const auto &a = basis.vectors[0];
            const auto &b = basis.vectors[1];
            for (std::size_t o = 0; o < next0.size(); ++o) {
                next0[o] = std::conj(a[0]) * phi0[2 * o] + std::conj(a[1]) * phi0[2 * o + 1];
                next1[o] = std::conj(b[0]) * phi1[2 * o] + std::conj(b[1]) * phi1[2 * o + 1];
            }
            descend(party - 1, next0, next1);
        }
    }
};

} // namespace

double grid_oracle(const StateVector &state, std::size_t resolution, std::size_t budget) {
    if (!uses_gram_tail(state)) {
        throw ShapeError("grid_oracle needs qubit parties B..K");
    }
    if (resolution < 1) {
        throw ParamError("resolution must be at least 1");
    }
    const double per_party = static_cast<double>(resolution) * static_cast<double>(resolution);
    const double evaluations = std::pow(per_party, static_cast<double>(state.parties() - 1));
    if (evaluations > static_cast<double>(budget)) {
        throw ScaleError("grid of " + std::to_string(evaluations) + " points exceeds the budget");
    }
    std::vector<LocalBasis> grid;
    grid.reserve(resolution * resolution);
    for (std::size_t t = 0; t < resolution; ++t) {
        const double theta = resolution == 1 ? 0.0 : pi * static_cast<double>(t) / static_cast<double>(resolution - 1);
        for (std::size_t f = 0; f < resolution; ++f) {
            const double phi = 2 * pi * static_cast<double>(f) / static_cast<double>(resolution);
            grid.push_back(bloch_basis_unchecked(theta, phi));
        }
    }
    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    GridSearch search{grid};
    search.descend(state.parties() - 1, amps, amps);
    return search.best;
}

} // namespace collect
