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

#include "collect/experiment.hpp"

#include "collect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace collect::experiment {

namespace {

/// Estimated collectibility must clear 1/16 by this many standard errors
/// before a simulated run reports entanglement.
constexpr double kSignificanceThreshold = 3.0;

void check_two_qubit(const StateVector &state) {
    if (state.dims() != std::vector<std::size_t>{2, 2}) {
        throw ShapeError("the measurement schemes are modelled for two-qubit states only");
    }
}

double hit_probability(Scheme scheme, double coincidence) {
    // hom counts double clicks; swap counts control outcome +1,
    // which occurs with probability (1 + <sigma_z>) / 2.
    return scheme == Scheme::Hom ? coincidence : 0.5 * (1.0 + coincidence);
}

double coincidence_from_rate(Scheme scheme, double rate) {
    return scheme == Scheme::Hom ? rate : 2.0 * rate - 1.0;
}

/// Factor multiplying p1[i] p2[j] in the |G_ij|^2 identity.
double overlap_factor(Scheme scheme, double coincidence) {
    return scheme == Scheme::Hom ? 1.0 - 2.0 * coincidence : coincidence;
}

} // namespace

std::string_view to_string(Scheme s) { return s == Scheme::Hom ? "hom" : "swap"; }

Scheme scheme_from_string(std::string_view s) {
    if (s == "hom") {
        return Scheme::Hom;
    }
    if (s == "swap") {
        return Scheme::Swap;
    }
    throw ParamError("unknown scheme '" + std::string(s) + "' (expected hom or swap)");
}

SchemeProbabilities forward(const StateVector &state, BlochAngles angles, Scheme scheme) {
    check_two_qubit(state);
    const auto gram = gram_matrix(state, bloch_detectors(state, angles));
    SchemeProbabilities probs;
    probs.scheme = scheme;
    for (std::size_t i = 0; i < 2; ++i) {
        probs.p1[i] = probs.p2[i] = gram.diag(i);
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double gi = gram.diag(i);
            const double gj = gram.diag(j);
            probs.present[i][j] = gi >= kDegenerateTolerance && gj >= kDegenerateTolerance;
            if (!probs.present[i][j]) {
                continue;
            }
            // squared overlap of the normalized conditional states
            const double overlap = i == j ? 1.0 : std::min(1.0, gram.abs2(i, j) / (gi * gj));
            probs.coincidence[i][j] = scheme == Scheme::Hom ? 0.5 * (1.0 - overlap) : overlap;
            probs.g2[i][j] = probs.p1[i] * probs.p2[j] * overlap_factor(scheme, probs.coincidence[i][j]);
            if (std::abs(probs.g2[i][j] - gram.abs2(i, j)) > 1e-12) {
                throw GramError("scheme identity for |G_ij|^2 does not hold");
            }
        }
    }
    return probs;
}

SchemeProbabilities hom_forward(const StateVector &state, BlochAngles angles) {
    return forward(state, angles, Scheme::Hom);
}

SchemeProbabilities swap_forward(const StateVector &state, BlochAngles angles) {
    return forward(state, angles, Scheme::Swap);
}

ShotCounts sample_experiment(const SchemeProbabilities &probs, std::uint64_t shots, Rng &rng) {
    ShotCounts counts;
    counts.scheme = probs.scheme;
    counts.shots = shots;
    auto draw = [&rng](std::uint64_t n, double p) {
        return std::binomial_distribution<std::uint64_t>(n, std::clamp(p, 0.0, 1.0))(rng);
    };
    counts.n1[0] = draw(shots, probs.p1[0]);
    counts.n1[1] = shots - counts.n1[0];
    counts.n2[0] = draw(shots, probs.p2[0]);
    counts.n2[1] = shots - counts.n2[0];
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!probs.present[i][j]) {
                continue;
            }
            counts.trials[i][j] = shots;
            counts.hits[i][j] = draw(shots, hit_probability(probs.scheme, probs.coincidence[i][j]));
        }
    }
    return counts;
}

namespace {

struct Frequencies {
    Scheme scheme;
    Pair p1{};
    Pair p2{};
    Table rate{};
    Flags present{};
};

GramEstimate estimate_from(const Frequencies &f) {
    GramEstimate est;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!f.present[i][j]) {
                continue;
            }
            const double factor = overlap_factor(f.scheme, coincidence_from_rate(f.scheme, f.rate[i][j]));
            est.g2[i][j] = std::max(0.0, f.p1[i] * f.p2[j] * factor);
        }
    }
    est.y_estimate = gram_formula(f.p1[0], f.p2[1], est.g2[0][1]);
    return est;
}

Frequencies frequencies(const ShotCounts &counts) {
    if (counts.shots == 0) {
        throw EmptyCounts("no shots recorded");
    }
    const auto shots = static_cast<double>(counts.shots);
    Frequencies f{counts.scheme};
    for (std::size_t i = 0; i < 2; ++i) {
        f.p1[i] = static_cast<double>(counts.n1[i]) / shots;
        f.p2[i] = static_cast<double>(counts.n2[i]) / shots;
        for (std::size_t j = 0; j < 2; ++j) {
            f.present[i][j] = counts.trials[i][j] > 0;
            if (f.present[i][j]) {
                f.rate[i][j] = static_cast<double>(counts.hits[i][j]) /
                               static_cast<double>(counts.trials[i][j]);
            }
        }
    }
    return f;
}

} // namespace

GramEstimate plug_in(const ShotCounts &counts) {
    auto est = estimate_from(frequencies(counts));
    est.shots = counts.shots;
    return est;
}

GramEstimate exact_estimate(const SchemeProbabilities &probs) {
    Frequencies f{probs.scheme, probs.p1, probs.p2, {}, probs.present};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            f.rate[i][j] = hit_probability(probs.scheme, probs.coincidence[i][j]);
        }
    }
    return estimate_from(f);
}

GramEstimate estimate_gram(const ShotCounts &counts, Rng &bootstrap_rng, std::size_t resamples) {
    const Frequencies observed = frequencies(counts);
    GramEstimate est = estimate_from(observed);
    est.shots = counts.shots;
    if (resamples < 2) {
        return est;
    }

    auto draw = [&bootstrap_rng](std::uint64_t n, double p) {
        return static_cast<double>(std::binomial_distribution<std::uint64_t>(n, p)(bootstrap_rng)) /
               static_cast<double>(n);
    };
    double y_sum = 0.0, y_sq = 0.0;
    Table g_sum{}, g_sq{};
    for (std::size_t b = 0; b < resamples; ++b) {
        Frequencies f = observed;
        f.p1[0] = draw(counts.shots, observed.p1[0]);
        f.p1[1] = 1.0 - f.p1[0];
        f.p2[0] = draw(counts.shots, observed.p2[0]);
        f.p2[1] = 1.0 - f.p2[0];
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                if (f.present[i][j]) {
                    f.rate[i][j] = draw(counts.trials[i][j], observed.rate[i][j]);
                }
            }
        }
        const auto replica = estimate_from(f);
        y_sum += replica.y_estimate;
        y_sq += replica.y_estimate * replica.y_estimate;
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                g_sum[i][j] += replica.g2[i][j];
                g_sq[i][j] += replica.g2[i][j] * replica.g2[i][j];
            }
        }
    }
    const auto r = static_cast<double>(resamples);
    auto sd = [r](double sum, double sq) { return std::sqrt(std::max(0.0, (sq - sum * sum / r) / (r - 1))); };
    est.y_stderr = sd(y_sum, y_sq);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            est.g2_stderr[i][j] = sd(g_sum[i][j], g_sq[i][j]);
        }
    }
    return est;
}

ExperimentReport run_experiment(const StateVector &state, BlochAngles angles, Scheme scheme,
                                std::uint64_t shots, std::uint64_t seed) {
    check_two_qubit(state);
    if (shots < 1) {
        throw ParamError("shots must be at least 1");
    }
    const auto probs = forward(state, angles, scheme);
    Rng rng = derive_stream(seed, 0);
    const auto counts = sample_experiment(probs, shots, rng);
    Rng boot = derive_stream(seed, kBootstrapStreamOffset);

    ExperimentReport report;
    report.scheme = scheme;
    report.shots = shots;
    report.seed = seed;
    report.angles = angles;
    report.exact_y = collectibility(state, bloch_detectors(state, angles));
    report.estimate = estimate_gram(counts, boot);

    const double threshold = discrimination_parameter(2, 2);
    const double excess = report.estimate.y_estimate - threshold;
    if (report.estimate.y_stderr > 0.0) {
        report.significance = excess / report.estimate.y_stderr;
    } else if (excess != 0.0) {
        report.significance = std::copysign(std::numeric_limits<double>::infinity(), excess);
    }
    report.verdict = excess > 0.0 && report.significance >= kSignificanceThreshold
                         ? Verdict::Entangled
                         : Verdict::Inconclusive;
    return report;
}

} // namespace collect::experiment
