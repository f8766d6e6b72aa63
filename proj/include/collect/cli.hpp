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
#include "collect/optimize.hpp"
#include "collect/sampling.hpp"
#include "collect/state.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace collect::cli {

inline constexpr const char *kToolVersion = "1.0.0";

/// Process exit codes shared by every command.
enum ExitCode : int {
    kEntangled = 0,
    kInputError = 1,
    kNumericalFailure = 2,
    kInconclusive = 3,
};

/// `-` reads JSON from `in`; `name[:p1,p2]` selects a named state; anything
/// else is a path to a JSON state file.
StateVector load_state(const std::string &source, std::istream &in);

/// `comp` (computational bases on B..K), `comp-all` (all parties),
/// `theta=T,phi=P` (one qubit basis on every party B..K; separate several
/// parties with ';'), or a path to a JSON detector file.
DetectorSet load_detectors(const std::string &source, const StateVector &state);

struct ScanClass {
    std::size_t draws = 0;
    double max_full_product = 0.0;
    double max_gram = 0.0;
    double min_z = 0.0;
    std::size_t violations = 0;
};

struct BoundScan {
    std::size_t parties = 0;
    std::uint64_t seed = 0;
    ScanClass random;  ///< Haar-random states (or GHZ with the override)
    ScanClass product; ///< Haar-random product states
    double ghz_computational_y = -1.0; ///< set only with the GHZ override
    std::size_t violations() const { return random.violations + product.violations; }
};

/// Draws `num` states per class with Haar-random detectors on every party,
/// checking Y <= 1/4 and Z >= 2 ln 2 for the full projection product and
/// the Gram-formula collectibility, and Y <= 2^-2K for product states.
BoundScan bound_scan(std::size_t parties, std::size_t num, std::uint64_t seed, bool ghz_override);

struct Table1Cell {
    std::string row;
    std::string state;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    double std_error = 0.0;
    bool pass = false;
};

struct Table1 {
    std::vector<Table1Cell> cells;
    bool all_pass() const;
};

/// Reproduces the GHZ / W / BS comparison: optimizer minimum and maximum,
/// Monte Carlo average and detection probability.
Table1 table1(std::size_t samples, std::uint64_t seed, const OptimizerConfig &optimizer);

/// Runs the command line. Machine output goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace collect::cli
