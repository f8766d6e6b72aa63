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

#include "collect/sampling.hpp"

#include "collect/basis.hpp"
#include "collect/collectibility.hpp"
#include "collect/errors.hpp"
#include "collect/json_io.hpp"
#include "collect/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

namespace collect {

namespace {

struct ShardTally {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t hits = 0;
    std::size_t count = 0;
    double max = -std::numeric_limits<double>::infinity();
    double min = std::numeric_limits<double>::infinity();
};

ShardTally run_shard(const StateVector &state, std::uint64_t seed, std::size_t shard,
                     std::size_t shards, std::size_t samples, double threshold) {
    Rng rng = derive_stream(seed, shard);
    ShardTally t;
    std::vector<LocalBasis> bases(state.parties() - 1);
    for (std::size_t i = shard; i < samples; i += shards) {
        for (std::size_t p = 1; p < state.parties(); ++p) {
            bases[p - 1] = haar_basis(2, rng, p);
        }
        const double y = collectibility(state, DetectorSet(bases));
        t.sum += y;
        t.sum_sq += y * y;
        t.hits += y > threshold ? 1 : 0;
        t.max = std::max(t.max, y);
        t.min = std::min(t.min, y);
        ++t.count;
    }
    return t;
}

} // namespace

McStatistics mc_statistics(const StateVector &state, const McConfig &config) {
    if (config.samples < 1) {
        throw ParamError("samples must be at least 1");
    }
    if (config.shards < 1) {
        throw ParamError("shards must be at least 1");
    }
    const auto &dims = state.dims();
    if (dims.size() < 2 || std::any_of(dims.begin() + 1, dims.end(), [](auto d) { return d != 2; })) {
        throw ShapeError("Monte Carlo collectibility needs qubit parties B..K");
    }
    const double threshold = discrimination_parameter(state.parties(), 2);

    std::size_t threads = config.threads != 0 ? config.threads
                                              : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, config.shards);
    std::vector<ShardTally> tallies(config.shards);
    for (std::size_t first = 0; first < config.shards; first += threads) {
        const auto last = std::min(config.shards, first + threads);
        std::vector<std::future<ShardTally>> pending;
        for (std::size_t s = first; s < last; ++s) {
            pending.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                         run_shard, std::cref(state), config.seed, s,
                                         config.shards, config.samples, threshold));
        }
        for (std::size_t s = first; s < last; ++s) {
            tallies[s] = pending[s - first].get();
        }
    }

    ShardTally total;
    for (const auto &t : tallies) {
        total.sum += t.sum;
        total.sum_sq += t.sum_sq;
        total.hits += t.hits;
        total.count += t.count;
        total.max = std::max(total.max, t.max);
        total.min = std::min(total.min, t.min);
    }
    const auto m = static_cast<double>(total.count);
    McStatistics stats;
    stats.average.samples = stats.detect.samples = total.count;
    stats.average.seed = stats.detect.seed = config.seed;
    stats.average.mean = total.sum / m;
    const double var = total.count > 1
                           ? std::max(0.0, (total.sum_sq - total.sum * total.sum / m) / (m - 1))
                           : 0.0;
    stats.average.std_error = std::sqrt(var / m);
    const double p = static_cast<double>(total.hits) / m;
    stats.detect.mean = p;
    stats.detect.std_error = std::sqrt(p * (1 - p) / m);
    stats.max_sample = total.max;
    stats.min_sample = total.min;
    return stats;
}

McEstimate mc_average(const StateVector &state, const McConfig &config) {
    return mc_statistics(state, config).average;
}

McEstimate mc_detect_prob(const StateVector &state, const McConfig &config) {
    return mc_statistics(state, config).detect;
}

std::vector<SweepRow> sweep_fig1(std::size_t points) {
    if (points < 2) {
        throw RangeError("a sweep needs at least 2 points");
    }
    std::vector<SweepRow> rows;
    rows.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        double psi = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
        psi = std::min(psi, std::numbers::pi);
        const auto [lo, hi] = two_qubit::extremes(psi);
        rows.push_back({psi, two_qubit::rescale(lo), two_qubit::rescale(two_qubit::mean(psi)),
                        two_qubit::rescale(hi), two_qubit::detect_prob(psi)});
    }
    return rows;
}

void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << "psi,r_min,r_mean,r_max,p_detect\n";
    for (const auto &r : rows) {
        os << io::format_number(r.psi) << ',' << io::format_number(r.r_min) << ','
           << io::format_number(r.r_mean) << ',' << io::format_number(r.r_max) << ','
           << io::format_number(r.p_detect) << '\n';
    }
}

} // namespace collect
