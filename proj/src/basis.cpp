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

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace collect {

double LocalBasis::orthonormality_defect() const {
    double worst = 0.0;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            cplx ip{};
            for (std::size_t i = 0; i < vectors[j].size(); ++i) {
                ip += std::conj(vectors[j][i]) * vectors[k][i];
            }
            worst = std::max(worst, std::abs(ip - cplx(j == k ? 1.0 : 0.0)));
        }
    }
    return worst;
}

LocalBasis make_local_basis(std::size_t party, std::vector<std::vector<cplx>> vectors,
                            double tolerance) {
    if (vectors.empty()) {
        throw ShapeError("a basis needs at least one vector");
    }
    const auto dim = vectors.front().size();
    for (const auto &v : vectors) {
        if (v.size() != dim) {
            throw ShapeError("basis vectors differ in dimension");
        }
    }
    if (vectors.size() > dim) {
        throw ShapeError("more basis vectors than the local dimension");
    }
    LocalBasis basis{party, std::move(vectors)};
    const double defect = basis.orthonormality_defect();
    if (defect > tolerance) {
        throw NormError("basis vectors not orthonormal (defect " + std::to_string(defect) + ")");
    }
    return basis;
}

DetectorSet::DetectorSet(std::vector<LocalBasis> bases) : bases_(std::move(bases)) {
    if (bases_.empty()) {
        throw ShapeError("a detector set needs at least one basis");
    }
    n_ = bases_.front().size();
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        if (bases_[i].size() != n_) {
            throw ShapeError("all detector bases must have the same size N");
        }
        if (i > 0 && bases_[i].party != bases_[i - 1].party + 1) {
            throw ShapeError("detector parties must be consecutive and ascending");
        }
    }
}

bool DetectorSet::covers_all(std::size_t parties) const {
    return !bases_.empty() && first_party() == 0 && last_party() + 1 == parties;
}

bool DetectorSet::covers_tail(std::size_t parties) const {
    return !bases_.empty() && first_party() == 1 && last_party() + 1 == parties;
}

LocalBasis bloch_basis_unchecked(double theta, double phi, std::size_t party) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const cplx e = std::polar(1.0, phi);
    return LocalBasis{party, {{c, e * s}, {s, -e * c}}};
}

LocalBasis bloch_basis(BlochAngles angles, std::size_t party) {
    if (!(angles.theta >= 0.0 && angles.theta <= std::numbers::pi)) {
        throw RangeError("theta must lie in [0, pi]");
    }
    if (!(angles.phi >= 0.0 && angles.phi <= 2 * std::numbers::pi)) {
        throw RangeError("phi must lie in [0, 2 pi]");
    }
    return bloch_basis_unchecked(angles.theta, angles.phi, party);
}

LocalBasis haar_basis(std::size_t dim, Rng &rng, std::size_t party) {
    if (dim < 2) {
        throw ShapeError("haar_basis needs dim >= 2");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
        for (Eigen::Index r = 0; r < z.rows(); ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd &r = qr.matrixQR();
    LocalBasis basis{party, std::vector<std::vector<cplx>>(dim, std::vector<cplx>(dim))};
    for (std::size_t c = 0; c < dim; ++c) {
        const cplx rc = r(c, c);
        const cplx phase = std::abs(rc) > 0 ? rc / std::abs(rc) : cplx(1.0);
        for (std::size_t i = 0; i < dim; ++i) {
            basis.vectors[c][i] = q(i, c) * phase;
        }
    }
    return basis;
}

StateVector haar_state(std::vector<std::size_t> dims, Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(total_dim(dims));
    double norm2 = 0.0;
    for (auto &a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = cplx(re, im);
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    for (auto &a : amps) {
        a /= norm;
    }
    return StateVector(std::move(amps), std::move(dims));
}

StateVector random_product_state(const std::vector<std::size_t> &dims, Rng &rng) {
    auto state = haar_state({dims.front()}, rng);
    for (std::size_t p = 1; p < dims.size(); ++p) {
        state = tensor(state, haar_state({dims[p]}, rng));
    }
    return state;
}

LocalBasis computational_basis(std::size_t dim, std::size_t n, std::size_t party) {
    if (n > dim) {
        throw ShapeError("more basis vectors than the local dimension");
    }
    LocalBasis basis{party, std::vector<std::vector<cplx>>(n, std::vector<cplx>(dim))};
    for (std::size_t j = 0; j < n; ++j) {
        basis.vectors[j][j] = 1.0;
    }
    return basis;
}

DetectorSet computational_detectors(const StateVector &state, bool include_a) {
    const auto &dims = state.dims();
    std::size_t n = dims.front();
    for (auto d : dims) {
        n = std::min(n, d);
    }
    std::vector<LocalBasis> bases;
    for (std::size_t p = include_a ? 0 : 1; p < dims.size(); ++p) {
        bases.push_back(computational_basis(dims[p], n, p));
    }
    if (bases.empty()) {
        throw ShapeError("state has a single party; nothing to measure");
    }
    return DetectorSet(std::move(bases));
}

DetectorSet bloch_detectors(const StateVector &state, BlochAngles angles, bool include_a) {
    std::vector<LocalBasis> bases;
    for (std::size_t p = include_a ? 0 : 1; p < state.parties(); ++p) {
        if (state.dims()[p] != 2) {
            throw ShapeError("bloch detectors need qubit parties");
        }
        bases.push_back(bloch_basis(angles, p));
    }
    if (bases.empty()) {
        throw ShapeError("state has a single party; nothing to measure");
    }
    return DetectorSet(std::move(bases));
}

namespace {

/// Contracts the j-th bra of every detector party into the state, trailing
/// party first. The result is indexed by the uncovered leading parties.
std::vector<cplx> contract_tail(const StateVector &state, const DetectorSet &detectors,
                                std::size_t j) {
    std::vector<cplx> v(state.amplitudes().begin(), state.amplitudes().end());
    for (auto it = detectors.bases().rbegin(); it != detectors.bases().rend(); ++it) {
        const auto &vec = it->vectors[j];
        const auto d = vec.size();
        std::vector<cplx> next(v.size() / d);
        for (std::size_t o = 0; o < next.size(); ++o) {
            cplx acc{};
            for (std::size_t c = 0; c < d; ++c) {
                acc += std::conj(vec[c]) * v[o * d + c];
            }
            next[o] = acc;
        }
        v = std::move(next);
    }
    return v;
}

void check_party_dims(const StateVector &state, const DetectorSet &detectors) {
    for (const auto &b : detectors.bases()) {
        if (b.dim() != state.dims()[b.party]) {
            throw ShapeError("detector basis dimension does not match party " +
                             std::to_string(b.party));
        }
    }
}

} // namespace

std::vector<cplx> project_conditional(const StateVector &state, const DetectorSet &detectors,
                                      std::size_t j) {
    if (!detectors.covers_tail(state.parties())) {
        throw ShapeError("conditional projection needs detectors on exactly parties B..K");
    }
    check_party_dims(state, detectors);
    if (j >= detectors.n()) {
        throw ShapeError("detector index out of range");
    }
    return contract_tail(state, detectors, j);
}

cplx separable_overlap(const StateVector &state, const DetectorSet &detectors, std::size_t j) {
    if (!detectors.covers_all(state.parties())) {
        throw ShapeError("separable overlap needs detectors on every party");
    }
    check_party_dims(state, detectors);
    if (j >= detectors.n()) {
        throw ShapeError("detector index out of range");
    }
    return contract_tail(state, detectors, j).front();
}

} // namespace collect
