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
#include "collect/collectibility.hpp"
#include "collect/experiment.hpp"
#include "collect/optimize.hpp"
#include "collect/sampling.hpp"
#include "collect/state.hpp"

#include <json.hpp>

#include <string>

namespace collect::io {

using json = nlohmann::json;

/// Serializes `value` with every floating-point number printed to 17
/// significant digits, so identical values always give identical bytes.
/// Non-finite numbers become the strings "inf", "-inf" and "nan".
std::string dump(const json &value, int indent = 2);

/// Formats one double the same way `dump` does.
std::string format_number(double x);

/// {"dims":[...],"amplitudes":[[re,im],...]}. Throws ParseError, plus the
/// validation errors of make_state.
StateVector state_from_json(const json &j);
json to_json(const StateVector &state);

/// Either {"parties":["B",...],"n":N,"bases":[[[[re,im],...],...],...]} or
/// {"angles":[{"theta":t,"phi":p},...]} for qubit parties B, C, ... in order.
/// An object holding a "detectors" member (as emitted by the optimizer) is
/// accepted too.
DetectorSet detectors_from_json(const json &j);
json to_json(const DetectorSet &detectors);

std::string party_name(std::size_t party);
std::size_t party_index(const std::string &name);

json to_json(const CollectibilityReport &report);
json to_json(const OptimumResult &result);
json to_json(const McEstimate &estimate);
json to_json(const experiment::ExperimentReport &report);

} // namespace collect::io
