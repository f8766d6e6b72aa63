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

#include "collect/state.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace collect {

/// Seeded generator used everywhere randomness is needed.
using Rng = std::mt19937_64;

/// Independent stream `index` derived from a base seed (seed + index).
inline Rng derive_stream(std::uint64_t seed, std::uint64_t index) { return Rng(seed + index); }

/// Tolerance for bases the library builds itself.
inline constexpr double kBasisTolerance = 1e-12;

struct BlochAngles {
    double theta = 0.0; ///< polar angle, [0, pi]
    double phi = 0.0;   ///< azimuth, [0, 2 pi)
};

/// N orthonormal vectors in the local space of one party.
struct LocalBasis {
    std::size_t party = 0;
    std::vector<std::vector<cplx>> vectors;

    std::size_t size() const { return vectors.size(); }
    std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }

    /// Largest |<a_j|a_k> - delta_jk|.
    double orthonormality_defect() const;
};

/// Builds a LocalBasis after checking orthonormality to `tolerance`.
/// Throws ShapeError or NormError.
LocalBasis make_local_basis(std::size_t party, std::vector<std::vector<cplx>> vectors,
                            double tolerance = kInputNormTolerance);

/// One basis per covered party, all of the same size N. The induced
/// separable states are |a_j^P1> (x) |a_j^P2> (x) ... for j = 0..N-1.
///
/// A detector set either covers every party (full separable states) or
/// every party except A (the conditional projections behind the Gram
/// matrix).
class DetectorSet {
  public:
    /// Throws ShapeError if sizes differ or parties are not consecutive and
    /// ascending.
    DetectorSet() = default;
    explicit DetectorSet(std::vector<LocalBasis> bases);

    const std::vector<LocalBasis> &bases() const { return bases_; }
    std::size_t n() const { return n_; }
    std::size_t first_party() const { return bases_.front().party; }
    std::size_t last_party() const { return bases_.back().party; }

    /// True if the set covers parties 0..parties-1.
    bool covers_all(std::size_t parties) const;
    /// True if the set covers parties 1..parties-1.
    bool covers_tail(std::size_t parties) const;

  private:
    std::vector<LocalBasis> bases_;
    std::size_t n_ = 0;
};

/// Qubit basis |a_1> = cos(t/2)|0> + e^{i p} sin(t/2)|1>,
///             |a_2> = sin(t/2)|0> - e^{i p} cos(t/2)|1>.
/// Throws RangeError outside theta in [0, pi], phi in [0, 2 pi].
LocalBasis bloch_basis(BlochAngles angles, std::size_t party = 1);

/// Same formula without the range check, for optimizers that search over
/// unbounded angles.
LocalBasis bloch_basis_unchecked(double theta, double phi, std::size_t party = 1);

/// Haar-random orthonormal basis of C^dim (QR of a complex Ginibre matrix
/// with the phases of R's diagonal moved into Q).
LocalBasis haar_basis(std::size_t dim, Rng &rng, std::size_t party = 1);

/// Haar-random pure state with the given party dimensions.
StateVector haar_state(std::vector<std::size_t> dims, Rng &rng);

/// Tensor product of independent Haar-random local states.
StateVector random_product_state(const std::vector<std::size_t> &dims, Rng &rng);

/// Computational basis of C^dim, truncated to the first n vectors.
LocalBasis computational_basis(std::size_t dim, std::size_t n, std::size_t party);

/// Computational detectors on parties B..K with pairing (j, j, ..., j).
DetectorSet computational_detectors(const StateVector &state, bool include_a = false);

/// The same qubit basis on every party B..K (or all parties).
DetectorSet bloch_detectors(const StateVector &state, BlochAngles angles, bool include_a = false);

/// Unnormalized conditional vector [<a_j^B| (x) ... (x) <a_j^K|] |Psi> in H^A.
/// `detectors` must cover exactly parties B..K; j is zero-based.
std::vector<cplx> project_conditional(const StateVector &state, const DetectorSet &detectors,
                                      std::size_t j);

/// Overlap <chi_j|Psi> with the j-th separable state of a full detector set.
cplx separable_overlap(const StateVector &state, const DetectorSet &detectors, std::size_t j);

} // namespace collect
