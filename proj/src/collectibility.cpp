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

#include <cmath>
#include <limits>

namespace collect {

namespace {

constexpr double kGramTolerance = 1e-12;
constexpr double kBoundTolerance = 1e-9;

cplx inner(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double lagrange_det(std::span<const cplx> a, std::span<const cplx> b) {
    double det = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = i + 1; k < a.size(); ++k) {
            det += std::norm(a[i] * b[k] - a[k] * b[i]);
        }
    }
    return det;
}

} // namespace

std::string_view to_string(Verdict v) {
    return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

std::string_view to_string(ComputationPath p) {
    switch (p) {
    case ComputationPath::GramFormula:
        return "gram-formula";
    case ComputationPath::FullProduct:
        return "full-product";
    case ComputationPath::ClosedForm:
        return "closed-form";
    case ComputationPath::Optimizer:
        return "optimizer";
    case ComputationPath::MonteCarlo:
        return "monte-carlo";
    }
    return "unknown";
}

GramMatrix::GramMatrix(std::size_t n, std::vector<cplx> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0 || entries_.size() != n_ * n_) {
        throw SizeError("Gram matrix entries do not form an n x n matrix");
    }
    for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs((*this)(j, j).imag()) > kGramTolerance || (*this)(j, j).real() < -kGramTolerance) {
            throw GramError("diagonal entries must be real and nonnegative");
        }
        for (std::size_t k = j + 1; k < n_; ++k) {
            if (std::abs((*this)(j, k) - std::conj((*this)(k, j))) > kGramTolerance) {
                throw GramError("Gram matrix is not Hermitian");
            }
        }
    }
}

double GramMatrix::determinant2() const {
    if (n_ != 2) {
        throw SizeError("determinant2 needs a 2 x 2 Gram matrix");
    }
    return det_ >= 0.0 ? det_ : diag(0) * diag(1) - abs2(0, 1);
}

double bound_max(std::size_t n) {
    return std::pow(static_cast<double>(n), -static_cast<double>(n));
}

double discrimination_parameter(std::size_t k, std::size_t n) {
    return std::pow(static_cast<double>(n), -static_cast<double>(n * k));
}

double projection_product(const StateVector &state, const DetectorSet &detectors) {
    double product = 1.0;
    for (std::size_t j = 0; j < detectors.n(); ++j) {
        product *= std::norm(separable_overlap(state, detectors, j));
    }
    return product;
}

GramMatrix gram_matrix(const StateVector &state, const DetectorSet &detectors) {
    const auto n = detectors.n();
    std::vector<std::vector<cplx>> phis;
    phis.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        phis.push_back(project_conditional(state, detectors, j));
    }
    std::vector<cplx> entries(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            const cplx g = inner(phis[j], phis[k]);
            entries[j * n + k] = g;
            entries[k * n + j] = std::conj(g);
        }
        entries[j * n + j] = entries[j * n + j].real();
    }
    GramMatrix gram(n, std::move(entries));
    if (n == 2) {
        gram.set_determinant(lagrange_det(phis[0], phis[1]));
    }
    return gram;
}

double gram_formula_det(double g11, double g22, double det) {
    const double g = std::max(g11, 0.0) * std::max(g22, 0.0);
    const double s = std::sqrt(g) + std::sqrt(std::max(det, 0.0));
    return 0.25 * s * s;
}

double gram_formula(std::span<const cplx> phi1, std::span<const cplx> phi2) {
    double g11 = 0.0, g22 = 0.0;
    for (std::size_t i = 0; i < phi1.size(); ++i) {
        g11 += std::norm(phi1[i]);
        g22 += std::norm(phi2[i]);
    }
    return gram_formula_det(g11, g22, lagrange_det(phi1, phi2));
}

double gram_formula(double g11, double g22, double g12_abs2) {
    g11 = std::max(g11, 0.0);
    g22 = std::max(g22, 0.0);
    const double g = g11 * g22;
    double rest = g - g12_abs2;
    if (rest < 0.0) {
        if (rest < -kGramTolerance) {
            throw GramError("|G12|^2 exceeds G11 G22 (Cauchy-Schwarz violated)");
        }
        rest = 0.0;
    }
    const double s = std::sqrt(g) + std::sqrt(rest);
    return 0.25 * s * s;
}

CollectibilityReport collectibility_gram(const GramMatrix &gram, std::size_t parties) {
    if (gram.n() != 2) {
        throw SizeError("the closed-form collectibility needs N = 2");
    }
    const double g = gram.diag(0) * gram.diag(1);
    if (gram.abs2(0, 1) - g > kGramTolerance) {
        throw GramError("|G12|^2 exceeds G11 G22 (Cauchy-Schwarz violated)");
    }
    const double y = gram_formula_det(gram.diag(0), gram.diag(1), gram.determinant2());
    return verdict(y, parties, 2, ComputationPath::GramFormula);
}

double collectibility(const StateVector &state, const DetectorSet &detectors) {
    if (detectors.n() != 2) {
        throw SizeError("the closed-form collectibility needs N = 2");
    }
    const auto phi1 = project_conditional(state, detectors, 0);
    const auto phi2 = project_conditional(state, detectors, 1);
    return gram_formula(phi1, phi2);
}

CollectibilityReport verdict(double y, std::size_t k, std::size_t n, ComputationPath path) {
    if (k < 2 || n < 2) {
        throw RangeError("verdict needs K >= 2 and N >= 2");
    }
    if (!(y >= 0.0)) {
        throw RangeError("collectibility must be nonnegative");
    }
    CollectibilityReport report;
    report.value = y;
    report.bound_max = bound_max(n);
    report.bound_sep = discrimination_parameter(k, n);
    report.path = path;
    if (y > report.bound_max + kBoundTolerance) {
        throw BoundError("value " + std::to_string(y) + " exceeds N^-N = " +
                         std::to_string(report.bound_max));
    }
    report.z_value = y > 0.0 ? -std::log(y) : std::numeric_limits<double>::infinity();
    report.verdict = y > report.bound_sep ? Verdict::Entangled : Verdict::Inconclusive;
    return report;
}

} // namespace collect
