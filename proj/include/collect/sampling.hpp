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
#include <iosfwd>
#include <vector>

namespace collect {

struct McConfig {
    std::size_t samples = 100'000;
    std::uint64_t seed = 0;
    /// Number of generator streams; sample i belongs to shard i % shards.
    /// Part of the reproducibility contract, unlike the thread count.
    std::size_t shards = 8;
    std::size_t threads = 0; ///< 0 = hardware concurrency
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0; ///< sample sd / sqrt(samples); binomial for proportions
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Mean collectibility over independent Haar-random qubit bases on parties
/// B..K, party A maximized analytically. Throws ShapeError unless every
/// party B..K is a qubit.
McEstimate mc_average(const StateVector &state, const McConfig &config);

/// Fraction of Haar-random settings with Y strictly above N^-(N K).
McEstimate mc_detect_prob(const StateVector &state, const McConfig &config);

/// Both estimates from one pass over the same samples.
struct McStatistics {
    McEstimate average;
    McEstimate detect;
    double max_sample = 0.0;
    double min_sample = 0.0;
};
McStatistics mc_statistics(const StateVector &state, const McConfig &config);

struct SweepRow {
    double psi = 0.0;
    double r_min = 0.0;
    double r_mean = 0.0;
    double r_max = 0.0;
    double p_detect = 0.0;
};

/// `points` Schmidt angles evenly spaced on [0, pi], closed forms only.
/// Throws RangeError for points < 2.
std::vector<SweepRow> sweep_fig1(std::size_t points);

/// CSV with header "psi,r_min,r_mean,r_max,p_detect", 17 significant digits.
void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows);

} // namespace collect
