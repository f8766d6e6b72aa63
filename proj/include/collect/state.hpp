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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace collect {

using cplx = std::complex<double>;

/// Input normalization tolerance. States read from text files may carry
/// rounded decimals, so anything within this distance of unit norm is
/// renormalized and anything further away is rejected.
inline constexpr double kInputNormTolerance = 1e-9;

/// Normalized pure state of a K-party system.
///
/// Amplitudes are stored row-major with party A as the most significant
/// index: for dims (d_A, d_B, d_C) the basis state |i j k> sits at offset
/// (i * d_B + j) * d_C + k.
class StateVector {
  public:
    /// Validates shape and norm. Throws ShapeError or NormError.
    StateVector(std::vector<cplx> amplitudes, std::vector<std::size_t> dims);

    const std::vector<std::size_t> &dims() const { return dims_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::size_t parties() const { return dims_.size(); }
    std::size_t size() const { return amplitudes_.size(); }
    const cplx &operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Row-major stride of `party` (product of the dimensions after it).
    std::size_t stride(std::size_t party) const;

    bool operator==(const StateVector &) const = default;

  private:
    std::vector<std::size_t> dims_;
    std::vector<cplx> amplitudes_;
};

StateVector make_state(std::vector<cplx> amplitudes, std::vector<std::size_t> dims);

/// Canonical named states.
///
///   bell          (|00> + |11>)/sqrt2
///   ghz  [K, N]   generalized GHZ on K quNits, defaults K=3, N=2
///   w             (|001> + |010> + |100>)/sqrt3
///   bs            |0>_A (x) bell_BC, bi-separable three-qubit state
///   schmidt psi   cos(psi/2)|00> + sin(psi/2)|11>, psi in [0, pi]
///   sep  [K, N]   |0...0> over K quNits, defaults K=2, N=2
///
/// Throws UnknownName or ParamError.
StateVector named_state(const std::string &name, std::span<const double> params = {});

/// Schmidt angle of a two-qubit state, canonicalized to [0, pi/2].
double schmidt_angle(const StateVector &state);

/// Applies a local operator (dim x dim, row-major) to one party.
StateVector apply_local(const StateVector &state, std::size_t party, std::span<const cplx> op);

/// Tensor product of two states; parties of `lhs` come first.
StateVector tensor(const StateVector &lhs, const StateVector &rhs);

std::size_t total_dim(std::span<const std::size_t> dims);

} // namespace collect
