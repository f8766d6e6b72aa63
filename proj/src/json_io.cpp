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

#include "collect/json_io.hpp"

#include "collect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace collect::io {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write(std::ostream &os, const json &v, int indent, int depth) {
    const auto pad = [&](int d) {
        if (indent >= 0) {
            os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (v.type()) {
    case json::value_t::object: {
        if (v.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                os << ',';
            }
            first = false;
            pad(depth + 1);
            os << json(it.key()).dump() << (indent >= 0 ? ": " : ":");
            write(os, it.value(), indent, depth + 1);
        }
        pad(depth);
        os << '}';
        return;
    }
    case json::value_t::array: {
        if (v.empty()) {
            os << "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        const bool flat = std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); });
        os << '[';
        bool first = true;
        for (const auto &e : v) {
            if (!first) {
                os << (flat && indent >= 0 ? ", " : ",");
            }
            first = false;
            if (!flat) {
                pad(depth + 1);
            }
            write(os, e, indent, depth + 1);
        }
        if (!flat) {
            pad(depth);
        }
        os << ']';
        return;
    }
    case json::value_t::number_float: {
        const double x = v.get<double>();
        if (std::isfinite(x)) {
            os << format_number(x);
        } else {
            os << '"' << format_number(x) << '"';
        }
        return;
    }
    default:
        os << v.dump();
        return;
    }
}

json complex_vector(const std::vector<cplx> &v) {
    json out = json::array();
    for (const auto &z : v) {
        out.push_back(json::array({z.real(), z.imag()}));
    }
    return out;
}

cplx parse_complex(const json &z) {
    if (z.is_number()) {
        return {z.get<double>(), 0.0};
    }
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError("complex numbers are written as [re, im]");
    }
    return {z[0].get<double>(), z[1].get<double>()};
}

std::vector<cplx> parse_complex_vector(const json &v) {
    if (!v.is_array()) {
        throw ParseError("expected an array of [re, im] pairs");
    }
    std::vector<cplx> out;
    out.reserve(v.size());
    for (const auto &z : v) {
        out.push_back(parse_complex(z));
    }
    return out;
}

double number(const json &obj, const char *key) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw ParseError(std::string("missing numeric field '") + key + "'");
    }
    return obj[key].get<double>();
}

} // namespace

std::string dump(const json &value, int indent) {
    std::ostringstream os;
    write(os, value, indent, 0);
    return os.str();
}

std::string party_name(std::size_t party) {
    if (party < 26) {
        return std::string(1, static_cast<char>('A' + party));
    }
    return "P" + std::to_string(party);
}

std::size_t party_index(const std::string &name) {
    if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z') {
        return static_cast<std::size_t>(name[0] - 'A');
    }
    if (name.size() > 1 && name[0] == 'P') {
        try {
            return std::stoul(name.substr(1));
        } catch (const std::exception &) {
        }
    }
    throw ParseError("bad party name '" + name + "'");
}

StateVector state_from_json(const json &j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("amplitudes")) {
        throw ParseError("a state needs \"dims\" and \"amplitudes\"");
    }
    std::vector<std::size_t> dims;
    for (const auto &d : j["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 0) {
            throw ParseError("dims must be nonnegative integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    return make_state(parse_complex_vector(j["amplitudes"]), std::move(dims));
}

json to_json(const StateVector &state) {
    return json{{"dims", state.dims()},
                {"amplitudes", complex_vector({state.amplitudes().begin(), state.amplitudes().end()})}};
}

DetectorSet detectors_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("a detector set is a JSON object");
    }
    if (j.contains("detectors")) {
        return detectors_from_json(j["detectors"]);
    }
    std::vector<LocalBasis> bases;
    if (j.contains("angles")) {
        if (!j["angles"].is_array() || j["angles"].empty()) {
            throw ParseError("\"angles\" must be a nonempty array");
        }
        std::size_t party = j.contains("first_party") ? party_index(j["first_party"].get<std::string>()) : 1;
        for (const auto &a : j["angles"]) {
            bases.push_back(bloch_basis({number(a, "theta"), number(a, "phi")}, party++));
        }
        return DetectorSet(std::move(bases));
    }
    if (!j.contains("parties") || !j.contains("bases")) {
        throw ParseError("a detector set needs \"parties\" and \"bases\", or \"angles\"");
    }
    const auto &parties = j["parties"];
    const auto &raw = j["bases"];
    if (!parties.is_array() || !raw.is_array() || parties.size() != raw.size()) {
        throw ParseError("\"parties\" and \"bases\" must be arrays of equal length");
    }
    for (std::size_t p = 0; p < parties.size(); ++p) {
        std::vector<std::vector<cplx>> vectors;
        for (const auto &v : raw[p]) {
            vectors.push_back(parse_complex_vector(v));
        }
        bases.push_back(make_local_basis(party_index(parties[p].get<std::string>()), std::move(vectors)));
    }
    DetectorSet set(std::move(bases));
    if (j.contains("n") && j["n"].get<std::size_t>() != set.n()) {
        throw ParseError("\"n\" does not match the number of basis vectors");
    }
    return set;
}

json to_json(const DetectorSet &detectors) {
    json parties = json::array();
    json bases = json::array();
    for (const auto &b : detectors.bases()) {
        parties.push_back(party_name(b.party));
        json vectors = json::array();
        for (const auto &v : b.vectors) {
            vectors.push_back(complex_vector(v));
        }
        bases.push_back(std::move(vectors));
    }
    return json{{"parties", parties}, {"n", detectors.n()}, {"bases", bases}};
}

json to_json(const CollectibilityReport &r) {
    return json{{"value", r.value},          {"z", r.z_value},
                {"bound_max", r.bound_max},  {"bound_sep", r.bound_sep},
                {"verdict", to_string(r.verdict)}, {"path", to_string(r.path)}};
}

json to_json(const OptimumResult &r) {
    return json{{"mode", r.mode == OptimizeMode::Maximize ? "maximize" : "minimize"},
                {"value", r.value},
                {"search_space", r.space == SearchSpace::GramTail ? "gram-tail" : "full-product"},
                {"params", r.params},
                {"detectors", to_json(r.detectors)},
                {"restarts", r.restarts},
                {"restarts_converged", r.restarts_converged},
                {"restarts_agreeing", r.restarts_agreeing},
                {"converged", r.converged}};
}

json to_json(const McEstimate &e) {
    return json{{"mean", e.mean}, {"stderr", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

json to_json(const experiment::ExperimentReport &r) {
    json g2 = json::array();
    json g2_stderr = json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        g2.push_back(json::array({r.estimate.g2[i][0], r.estimate.g2[i][1]}));
        g2_stderr.push_back(json::array({r.estimate.g2_stderr[i][0], r.estimate.g2_stderr[i][1]}));
    }
    return json{{"scheme", experiment::to_string(r.scheme)},
                {"shots", r.shots},
                {"seed", r.seed},
                {"theta", r.angles.theta},
                {"phi", r.angles.phi},
                {"exact_y", r.exact_y},
                {"y_estimate", r.estimate.y_estimate},
                {"y_stderr", r.estimate.y_stderr},
                {"g2", g2},
                {"g2_stderr", g2_stderr},
                {"verdict", to_string(r.verdict)},
                {"significance", r.significance}};
}

} // namespace collect::io
