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

#include "collect/state.hpp"

#include "collect/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace collect {

std::size_t total_dim(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

StateVector::StateVector(std::vector<cplx> amplitudes, std::vector<std::size_t> dims)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (dims_.empty()) {
        throw ShapeError("dims must be nonempty");
    }
    for (auto d : dims_) {
        if (d < 2) {
            throw ShapeError("every party dimension must be at least 2");
        }
    }
    if (amplitudes_.size() != total_dim(dims_)) {
        throw ShapeError("expected " + std::to_string(total_dim(dims_)) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
    }
    double norm2 = 0.0;
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NormError("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > kInputNormTolerance) {
        throw NormError("state norm " + std::to_string(norm) + " differs from 1");
    }
    for (auto &a : amplitudes_) {
        a /= norm;
    }
}

std::size_t StateVector::stride(std::size_t party) const {
    std::size_t s = 1;
    for (std::size_t p = party + 1; p < dims_.size(); ++p) {
        s *= dims_[p];
    }
    return s;
}

StateVector make_state(std::vector<cplx> amplitudes, std::vector<std::size_t> dims) {
    return StateVector(std::move(amplitudes), std::move(dims));
}

namespace {

std::size_t integer_param(std::span<const double> params, std::size_t i, std::size_t fallback,
                          std::size_t minimum, const std::string &name) {
    if (params.size() <= i) {
        return fallback;
    }
    const double v = params[i];
    if (v != std::floor(v) || v < static_cast<double>(minimum) || v > 64.0) {
        throw ParamError(name + " must be an integer >= " + std::to_string(minimum));
    }
    return static_cast<std::size_t>(v);
}

void expect_params(const std::string &name, std::span<const double> params, std::size_t max) {
    if (params.size() > max) {
        throw ParamError(name + " takes at most " + std::to_string(max) + " parameters");
    }
}

StateVector ghz(std::size_t k, std::size_t n) {
    std::vector<std::size_t> dims(k, n);
    const auto total = total_dim(dims);
    if (total > (std::size_t{1} << 26)) {
        throw ParamError("ghz state too large");
    }
    std::vector<cplx> amps(total);
    // |i i ... i> sits at i * (1 + n + n^2 + ...).
    std::size_t diag_step = 0;
    for (std::size_t p = 0, s = 1; p < k; ++p, s *= n) {
        diag_step += s;
    }
    const double c = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        amps[i * diag_step] = c;
    }
    return StateVector(std::move(amps), std::move(dims));
}

} // namespace

StateVector named_state(const std::string &name, std::span<const double> params) {
    const double r2 = 1.0 / std::sqrt(2.0);
    if (name == "bell") {
        expect_params(name, params, 0);
        return StateVector({r2, 0, 0, r2}, {2, 2});
    }
    if (name == "ghz") {
        expect_params(name, params, 2);
        const auto k = integer_param(params, 0, 3, 2, "ghz K");
        const auto n = integer_param(params, 1, 2, 2, "ghz N");
        return ghz(k, n);
    }
    if (name == "w") {
        expect_params(name, params, 0);
        const double r3 = 1.0 / std::sqrt(3.0);
        std::vector<cplx> amps(8);
        amps[0b001] = amps[0b010] = amps[0b100] = r3;
        return StateVector(std::move(amps), {2, 2, 2});
    }
    if (name == "bs") {
        expect_params(name, params, 0);
        std::vector<cplx> amps(8);
        amps[0b000] = amps[0b011] = r2;
        return StateVector(std::move(amps), {2, 2, 2});
    }
    if (name == "schmidt") {
        if (params.size() != 1) {
            throw ParamError("schmidt needs exactly one angle psi");
        }
        const double psi = params[0];
        if (!(psi >= 0.0 && psi <= std::numbers::pi)) {
            throw ParamError("schmidt angle must lie in [0, pi]");
        }
        return StateVector({std::cos(psi / 2), 0, 0, std::sin(psi / 2)}, {2, 2});
    }
    if (name == "sep") {
        expect_params(name, params, 2);
        const auto k = integer_param(params, 0, 2, 2, "sep K");
        const auto n = integer_param(params, 1, 2, 2, "sep N");
        std::vector<std::size_t> dims(k, n);
        std::vector<cplx> amps(total_dim(dims));
        amps[0] = 1.0;
        return StateVector(std::move(amps), std::move(dims));
    }
    throw UnknownName("no named state '" + name + "'");
}

double schmidt_angle(const StateVector &state) {
    if (state.dims() != std::vector<std::size_t>{2, 2}) {
        throw ShapeError("schmidt_angle needs a two-qubit state");
    }
    Eigen::Matrix2cd m;
    m << state[0], state[1], state[2], state[3];
    const Eigen::Vector2d s = Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues();
    // s(0) >= s(1); s(1) = sin(psi/2) with psi/2 in [0, pi/4].
    const double s2 = std::clamp(s(1), 0.0, 1.0 / std::sqrt(2.0));
    const double s1 = std::clamp(s(0), 0.0, 1.0);
    return 2.0 * std::atan2(s2, s1);
}

StateVector apply_local(const StateVector &state, std::size_t party, std::span<const cplx> op) {
    if (party >= state.parties()) {
        throw ShapeError("party index out of range");
    }
    const auto d = state.dims()[party];
    if (op.size() != d * d) {
        throw ShapeError("local operator has the wrong size");
    }
    const auto inner = state.stride(party);
    const auto outer = state.size() / (inner * d);
    std::vector<cplx> out(state.size());
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                const cplx u = op[r * d + c];
                if (u == cplx{}) {
                    continue;
                }
                for (std::size_t i = 0; i < inner; ++i) {
                    out[(o * d + r) * inner + i] += u * state[(o * d + c) * inner + i];
                }
            }
        }
    }
    return StateVector(std::move(out), state.dims());
}

StateVector tensor(const StateVector &lhs, const StateVector &rhs) {
    std::vector<cplx> amps;
    amps.reserve(lhs.size() * rhs.size());
    for (const auto &a : lhs.amplitudes()) {
        for (const auto &b : rhs.amplitudes()) {
            amps.push_back(a * b);
        }
    }
    auto dims = lhs.dims();
    dims.insert(dims.end(), rhs.dims().begin(), rhs.dims().end());
    return StateVector(std::move(amps), std::move(dims));
}

} // namespace collect
