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
#include "collect/collectibility.hpp"
#include "collect/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace collect;
using std::numbers::pi;

namespace {

oracle::Vec amps(const StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

std::vector<std::vector<oracle::Vec>> vectors(const DetectorSet &d) {
    std::vector<std::vector<oracle::Vec>> out;
    for (const auto &b : d.bases()) {
        out.push_back(b.vectors);
    }
    return out;
}

} // namespace

TEST_CASE("bounds") {
    CHECK(bound_max(2) == 0.25);
    CHECK(bound_max(3) == doctest::Approx(1.0 / 27));
    CHECK(discrimination_parameter(2, 2) == 0.0625);
    CHECK(discrimination_parameter(3, 2) == doctest::Approx(1.0 / 64));
    CHECK(discrimination_parameter(2, 3) == doctest::Approx(std::pow(3.0, -6)));
}

TEST_CASE("Bell with computational detectors saturates the bound") {
    const auto bell = named_state("bell");
    const auto full = computational_detectors(bell, true);
    CHECK(projection_product(bell, full) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(collectibility(bell, computational_detectors(bell)) == doctest::Approx(0.25).epsilon(1e-15));

    const auto report = collectibility_gram(gram_matrix(bell, computational_detectors(bell)), 2);
    CHECK(report.value == doctest::Approx(0.25));
    CHECK(report.verdict == Verdict::Entangled);
    CHECK(report.bound_sep == 0.0625);
    CHECK(report.z_value == doctest::Approx(std::log(4.0)));
}

TEST_CASE("gram formula examples") {
    CHECK(gram_formula(0.5, 0.5, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(gram_formula(0.5, 0.5, 0.25) == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(gram_formula(1.0, 0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(gram_formula(0.5, 0.5, 0.26), GramError);
    // tiny negative determinants from rounding are clamped
    CHECK(gram_formula(0.5, 0.5, 0.25 + 1e-15) == doctest::Approx(0.0625));
    CHECK(gram_formula_det(0.5, 0.5, 0.25) == doctest::Approx(0.25));
}

TEST_CASE("GramMatrix validation") {
    CHECK_THROWS_AS(GramMatrix(2, {1, cplx(0, 1), cplx(0, 1), 1}), GramError);
    CHECK_THROWS_AS(GramMatrix(2, {-0.5, 0, 0, 1}), GramError);
    CHECK_THROWS_AS(GramMatrix(2, {1, 0, 0}), SizeError);
    const GramMatrix g3(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(collectibility_gram(g3, 3), SizeError);
    // Cauchy-Schwarz violation
    const GramMatrix bad(2, {0.5, 0.4, 0.4, 0.2});
    CHECK_THROWS_AS(collectibility_gram(bad, 2), GramError);
}

TEST_CASE("verdict thresholds and errors") {
    CHECK(verdict(0.0625, 2, 2).verdict == Verdict::Inconclusive);
    CHECK(verdict(std::nextafter(0.0625, 1.0), 2, 2).verdict == Verdict::Entangled);
    CHECK(verdict(0.02, 3, 2).verdict == Verdict::Entangled);
    CHECK(std::isinf(verdict(0.0, 2, 2).z_value));
    CHECK(verdict(0.25 + 1e-10, 2, 2).value > 0.25);
    CHECK_THROWS_AS(verdict(0.26, 2, 2), BoundError);
    CHECK_THROWS_AS(verdict(-0.1, 2, 2), RangeError);
    CHECK_THROWS_AS(verdict(0.1, 1, 2), RangeError);
    CHECK_THROWS_AS(verdict(0.1, 2, 1), RangeError);
    CHECK(to_string(Verdict::Entangled) == "Entangled");
    CHECK(to_string(ComputationPath::GramFormula) == "gram-formula");
}

TEST_CASE("product state with computational detectors") {
    const auto s = make_state({1, 0, 0, 0}, {2, 2});
    CHECK(projection_product(s, computational_detectors(s, true)) == 0.0);
    const auto r = collectibility_gram(gram_matrix(s, computational_detectors(s)), 2);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("rank-one Gram at the separable bound is exact") {
    const auto s = named_state("schmidt", std::vector<double>{0.0});
    const auto d = bloch_detectors(s, {1.5707963, 0});
    const auto y = collectibility(s, d);
    CHECK(y <= 0.0625);
    CHECK(y == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(verdict(y, 2, 2).verdict == Verdict::Inconclusive);
}

TEST_CASE("Gram path agrees with independent contraction") {
    Rng rng(314);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 2 + trial % 2;
        const auto s = haar_state(std::vector<std::size_t>(k, 2), rng);
        std::vector<LocalBasis> bases;
        for (std::size_t p = 1; p < k; ++p) {
            bases.push_back(haar_basis(2, rng, p));
        }
        const DetectorSet tail(bases);
        const auto v = vectors(tail);
        const auto phi1 = oracle::conditional(amps(s), 2, v, 0);
        const auto phi2 = oracle::conditional(amps(s), 2, v, 1);
        const double expected = oracle::gram_y(phi1, phi2);
        CHECK(collectibility(s, tail) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(collectibility(s, tail) <= 0.25 + 1e-12);

        // full product never exceeds the analytic maximum over A
        std::vector<LocalBasis> full{haar_basis(2, rng, 0)};
        full.insert(full.end(), bases.begin(), bases.end());
        const DetectorSet all(full);
        const double fp = projection_product(s, all);
        CHECK(fp == doctest::Approx(oracle::projection_product(amps(s), vectors(all))).epsilon(1e-12));
        CHECK(fp <= expected + 1e-12);
    }
}

TEST_CASE("qutrit GHZ with computational detectors") {
    const auto g = named_state("ghz", std::vector<double>{2, 3});
    const auto full = computational_detectors(g, true);
    CHECK(projection_product(g, full) == doctest::Approx(1.0 / 27).epsilon(1e-14));
    CHECK(verdict(projection_product(g, full), 2, 3).verdict == Verdict::Entangled);
    CHECK_THROWS_AS(collectibility(g, computational_detectors(g)), SizeError);
}

TEST_CASE("separable states never exceed the separable bound") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + trial % 2;
        const auto s = random_product_state(std::vector<std::size_t>(k, 2), rng);
        std::vector<LocalBasis> bases;
        for (std::size_t p = 1; p < k; ++p) {
            bases.push_back(haar_basis(2, rng, p));
        }
        const double y = collectibility(s, DetectorSet(bases));
        CHECK(y <= discrimination_parameter(k, 2) + 1e-12);
    }
}
