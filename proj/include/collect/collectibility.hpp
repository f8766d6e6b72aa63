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

#include "collect/basis.hpp"
#include "collect/state.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace collect {

/// Overlaps G_jk = <phi_j|phi_k> of the conditional vectors.
class GramMatrix {
  public:
    /// `entries` is row-major n x n. Throws SizeError on a shape mismatch and
    /// GramError if the matrix is not Hermitian within 1e-12 or has a
    /// negative diagonal.
    GramMatrix(std::size_t n, std::vector<cplx> entries);

    /// For n = 2, attaches G11 G22 - |G12|^2 computed without cancellation.
    void set_determinant(double det) { det_ = det; }
    /// G11 G22 - |G12|^2 (n = 2), from set_determinant when available.
    double determinant2() const;

    std::size_t n() const { return n_; }
    const cplx &operator()(std::size_t j, std::size_t k) const { return entries_[j * n_ + k]; }
    double diag(std::size_t j) const { return entries_[j * n_ + j].real(); }
    double abs2(std::size_t j, std::size_t k) const { return std::norm((*this)(j, k)); }

  private:
    std::size_t n_;
    std::vector<cplx> entries_;
    double det_ = -1.0;
};

enum class Verdict { Entangled, Inconclusive };
enum class ComputationPath { GramFormula, FullProduct, ClosedForm, Optimizer, MonteCarlo };

std::string_view to_string(Verdict v);
std::string_view to_string(ComputationPath p);

struct CollectibilityReport {
    double value = 0.0;
    double z_value = 0.0;   ///< -ln(value); +inf when value == 0
    double bound_max = 0.0; ///< N^-N
    double bound_sep = 0.0; ///< N^-(N K), the discrimination parameter
    Verdict verdict = Verdict::Inconclusive;
    ComputationPath path = ComputationPath::GramFormula;
};

/// Upper bound N^-N on every projection product.
double bound_max(std::size_t n);
/// Separable bound N^-(N K).
double discrimination_parameter(std::size_t k, std::size_t n);

/// prod_j |<Psi|chi_j>|^2 for a detector set covering every party.
double projection_product(const StateVector &state, const DetectorSet &detectors);

/// Gram matrix of the conditional vectors; `detectors` covers parties B..K.
GramMatrix gram_matrix(const StateVector &state, const DetectorSet &detectors);

/// Y = 1/4 (sqrt(G11 G22) + sqrt(G11 G22 - |G12|^2))^2, the maximum over
/// party A's basis. Raw value only; see collectibility_gram for the report.
/// |G12|^2 may exceed G11 G22 by at most 1e-12 (clamped), otherwise GramError.
double gram_formula(double g11, double g22, double g12_abs2);

/// Same formula with the determinant G11 G22 - |G12|^2 supplied directly.
double gram_formula_det(double g11, double g22, double det);

/// Gram formula from two conditional vectors. The determinant is computed
/// as sum_{a<b} |phi1_a phi2_b - phi1_b phi2_a|^2, which is exactly zero for
/// parallel vectors; forming G11 G22 - |G12|^2 instead leaves rounding noise
/// that the square root amplifies to ~1e-9.
double gram_formula(std::span<const cplx> phi1, std::span<const cplx> phi2);

/// Throws SizeError unless n == 2.
CollectibilityReport collectibility_gram(const GramMatrix &gram, std::size_t parties);

/// Fast path for qubit parties B..K: the Gram formula evaluated directly.
double collectibility(const StateVector &state, const DetectorSet &detectors);

/// Threshold test `y > N^-(N K)`. Throws BoundError if y exceeds N^-N by
/// more than 1e-9 (impossible for a consistent computation) and RangeError
/// for negative y or k, n < 2.
CollectibilityReport verdict(double y, std::size_t k, std::size_t n,
                             ComputationPath path = ComputationPath::ClosedForm);

} // namespace collect
