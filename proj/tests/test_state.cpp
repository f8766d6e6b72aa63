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

#include "collect/basis.hpp"
#include "collect/errors.hpp"
#include "collect/state.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace collect;
using std::numbers::pi;

TEST_CASE("make_state accepts normalized amplitudes") {
    const auto s = make_state({1, 0, 0, 0}, {2, 2});
    CHECK(s.size() == 4);
    CHECK(s[0] == cplx(1, 0));

    const double r = 1 / std::sqrt(2.0);
    const auto bell = make_state({r, 0, 0, r}, {2, 2});
    CHECK(bell == named_state("bell"));
}

TEST_CASE("make_state validates norm and shape") {
    CHECK_THROWS_AS(make_state({1, 1, 0, 0}, {2, 2}), NormError);
    CHECK_THROWS_AS(make_state({1, 0, 0}, {2, 2}), ShapeError);
    CHECK_THROWS_AS(make_state({1, 0}, {}), ShapeError);
    CHECK_THROWS_AS(make_state({1}, {1}), ShapeError);

    // rounded decimals within 1e-9 are renormalized
    const auto s = make_state({0.70710678118, 0, 0, 0.70710678118}, {2, 2});
    double n2 = 0;
    for (const auto &a : s.amplitudes()) {
        n2 += std::norm(a);
    }
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(make_state({0.7071, 0, 0, 0.7071}, {2, 2}), NormError);
}

TEST_CASE("named states") {
    const auto ghz = named_state("ghz", std::vector<double>{3, 2});
    CHECK(ghz.dims() == std::vector<std::size_t>{2, 2, 2});
    CHECK(ghz[0b000].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(ghz[0b111].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(ghz[0b010]) == 0.0);

    const auto ghz33 = named_state("ghz", std::vector<double>{3, 3});
    CHECK(ghz33.size() == 27);
    CHECK(ghz33[13].real() == doctest::Approx(1 / std::sqrt(3.0))); // |111>
    CHECK(ghz33[26].real() == doctest::Approx(1 / std::sqrt(3.0))); // |222>

    const auto w = named_state("w");
    CHECK(w[0b001].real() == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(w[0b100].real() == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(std::abs(w[0b000]) == 0.0);

    CHECK(named_state("schmidt", std::vector<double>{0.0}) == make_state({1, 0, 0, 0}, {2, 2}));
    const auto maximal = named_state("schmidt", std::vector<double>{pi / 2});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(maximal[i] - named_state("bell")[i]) < 1e-15);
    }
    CHECK(named_state("sep", std::vector<double>{3, 3}).size() == 27);
}

TEST_CASE("named state errors") {
    CHECK_THROWS_AS(named_state("nope"), UnknownName);
    CHECK_THROWS_AS(named_state("schmidt"), ParamError);
    CHECK_THROWS_AS(named_state("schmidt", std::vector<double>{4.0}), ParamError);
    CHECK_THROWS_AS(named_state("ghz", std::vector<double>{2.5}), ParamError);
    CHECK_THROWS_AS(named_state("bell", std::vector<double>{1.0}), ParamError);
}

TEST_CASE("schmidt_angle") {
    CHECK(schmidt_angle(named_state("bell")) == doctest::Approx(pi / 2).epsilon(1e-12));
    CHECK(schmidt_angle(make_state({0, 1, 0, 0}, {2, 2})) == doctest::Approx(0.0));

    // cos(pi/6)|00> + sin(pi/6)|11>: singular values cos(pi/6), sin(pi/6).
    const auto s = make_state({std::cos(pi / 6), 0, 0, std::sin(pi / 6)}, {2, 2});
    const auto [s1, s2] = oracle::singular_values_2x2(s[0], s[1], s[2], s[3]);
    CHECK(2 * std::atan2(s2, s1) == doctest::Approx(pi / 3).epsilon(1e-12));
    CHECK(schmidt_angle(s) == doctest::Approx(pi / 3).epsilon(1e-12));

    // psi in (pi/2, pi] folds onto [0, pi/2]
    const auto folded = named_state("schmidt", std::vector<double>{2 * pi / 3});
    CHECK(schmidt_angle(folded) == doctest::Approx(pi / 3).epsilon(1e-12));

    CHECK_THROWS_AS(schmidt_angle(named_state("w")), ShapeError);
}

TEST_CASE("schmidt_angle is invariant under local unitaries") {
    std::mt19937_64 rng(11);
    Rng state_rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = haar_state({2, 2}, state_rng);
        const auto before = schmidt_angle(s);
        const auto ua = oracle::random_unitary(2, rng);
        const auto ub = oracle::random_unitary(2, rng);
        const auto moved = apply_local(apply_local(s, 0, ua), 1, ub);
        CHECK(schmidt_angle(moved) == doctest::Approx(before).epsilon(1e-9));

        const auto [s1, s2] = oracle::singular_values_2x2(s[0], s[1], s[2], s[3]);
        CHECK(before == doctest::Approx(2 * std::atan2(s2, s1)).epsilon(1e-9));
    }
}

TEST_CASE("apply_local and tensor respect the row-major layout") {
    const auto zero = make_state({1, 0}, {2});
    const auto one = make_state({0, 1}, {2});
    const auto s = tensor(tensor(zero, one), zero); // |010>
    CHECK(std::abs(s[0b010]) == 1.0);

    const std::vector<cplx> x{0, 1, 1, 0};
    const auto flipped = apply_local(s, 0, x); // |110>
    CHECK(std::abs(flipped[0b110]) == doctest::Approx(1.0));
    CHECK_THROWS_AS(apply_local(s, 3, x), ShapeError);
}
