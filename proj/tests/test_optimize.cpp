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

#include "collect/collectibility.hpp"
#include "collect/errors.hpp"
#include "collect/optimize.hpp"
#include "collect/two_qubit.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace collect;
using std::numbers::pi;

TEST_CASE("nelder_mead finds a quadratic minimum") {
    const auto f = [](std::span<const double> x) {
        return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2);
    };
    const auto r = nelder_mead(f, {0, 0}, 0.5, 2000, 1e-14);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-5));
}

TEST_CASE("unitary_from_params yields unitaries") {
    CHECK(unitary_from_params(std::vector<double>(4, 0.0), 2).orthonormality_defect() < 1e-15);
    const auto id = unitary_from_params(std::vector<double>(9, 0.0), 3);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::abs(id.vectors[j][i] - cplx(i == j ? 1.0 : 0.0)) < 1e-15);
        }
    }
    Rng rng(8);
    std::uniform_real_distribution<double> u(0, 2 * pi);
    for (std::size_t dim : {2, 3, 4}) {
        std::vector<double> p(dim * dim);
        for (auto &x : p) {
            x = u(rng);
        }
        CHECK(unitary_from_params(p, dim).orthonormality_defect() < 1e-12);
    }
    CHECK_THROWS_AS(unitary_from_params(std::vector<double>(3, 0.0), 2), ShapeError);
}

TEST_CASE("maximum for named three-qubit states") {
    OptimizerConfig cfg;
    cfg.seed = 1;
    const auto ghz = maximize_collectibility(named_state("ghz"), cfg);
    CHECK(ghz.value == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(ghz.converged);
    CHECK(ghz.restarts == 32);
    CHECK(ghz.restarts_agreeing >= 1);
    CHECK(ghz.detectors.n() == 2);
    CHECK(ghz.detectors.first_party() == 1);

    // reported detectors reproduce the value
    CHECK(collectibility(named_state("ghz"), ghz.detectors) == doctest::Approx(ghz.value).epsilon(1e-12));

    const auto w = maximize_collectibility(named_state("w"), cfg);
    CHECK(w.value == doctest::Approx(9.0 / 64).epsilon(1e-6));
    const auto bs = maximize_collectibility(named_state("bs"), cfg);
    CHECK(bs.value == doctest::Approx(1.0 / 16).epsilon(1e-6));
}

TEST_CASE("minimum for named three-qubit states") {
    OptimizerConfig cfg;
    cfg.seed = 3;
    for (const char *name : {"ghz", "w", "bs"}) {
        const auto r = minimize_collectibility(named_state(name), cfg);
        CHECK(r.value < 1e-6);
        CHECK(r.value >= 0.0);
    }
}

TEST_CASE("two-qubit optimum matches the closed form") {
    OptimizerConfig cfg;
    cfg.seed = 11;
    cfg.restarts = 8;
    for (double psi : {0.3, pi / 3, 1.4}) {
        const auto s = named_state("schmidt", std::vector<double>{psi});
        const auto [lo, hi] = two_qubit::extremes(psi);
        CHECK(maximize_collectibility(s, cfg).value == doctest::Approx(hi).epsilon(1e-8));
        CHECK(minimize_collectibility(s, cfg).value == doctest::Approx(lo).epsilon(1e-8));
    }
}

TEST_CASE("optimizer result is deterministic in the seed") {
    OptimizerConfig cfg;
    cfg.seed = 5;
    cfg.restarts = 4;
    const auto a = maximize_collectibility(named_state("w"), cfg);
    const auto b = maximize_collectibility(named_state("w"), cfg);
    CHECK(a.value == b.value);
    CHECK(a.params == b.params);
}

TEST_CASE("general path handles qutrit tails") {
    OptimizerConfig cfg;
    cfg.seed = 2;
    cfg.restarts = 4;
    const auto g = named_state("ghz", std::vector<double>{2, 3});
    const auto r = maximize_collectibility(g, cfg);
    CHECK(r.space == SearchSpace::FullProduct);
    CHECK(r.value == doctest::Approx(1.0 / 27).epsilon(1e-6));
    CHECK(r.value <= 1.0 / 27 + 1e-9);
}

TEST_CASE("grid oracle lower-bounds the analytic maximum over A") {
    Rng rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = haar_state({2, 2}, rng);
        const DetectorSet tail({haar_basis(2, rng, 1)});
        (void)tail;
        const double g = grid_oracle(s, 60);
        OptimizerConfig cfg;
        cfg.restarts = 4;
        CHECK(g <= maximize_collectibility(s, cfg).value + 1e-12);
    }
    CHECK_THROWS_AS(grid_oracle(named_state("w"), 1000, 1000), ScaleError);
}
