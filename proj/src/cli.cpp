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

#include "collect/cli.hpp"

#include "collect/collectibility.hpp"
#include "collect/errors.hpp"
#include "collect/experiment.hpp"
#include "collect/json_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

namespace collect::cli {

namespace {

using io::json;

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw ParseError("not a number: '" + s + "'");
    }
    return v;
}

json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(f);
    } catch (const json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
}

bool is_named(const std::string &name) {
    for (const char *n : {"bell", "ghz", "w", "bs", "schmidt", "sep"}) {
        if (name == n) {
            return true;
        }
    }
    return false;
}

} // namespace

StateVector load_state(const std::string &source, std::istream &in) {
    if (source == "-") {
        try {
            return io::state_from_json(json::parse(in));
        } catch (const json::exception &e) {
            throw ParseError(std::string("stdin: ") + e.what());
        }
    }
    const auto colon = source.find(':');
    const auto name = source.substr(0, colon);
    if (is_named(name)) {
        std::vector<double> params;
        if (colon != std::string::npos) {
            for (const auto &p : split(source.substr(colon + 1), ',')) {
                params.push_back(parse_double(p));
            }
        }
        return named_state(name, params);
    }
    std::ifstream probe(source);
    if (!probe) {
        throw UnknownName("'" + source + "' is neither a named state nor a readable file");
    }
    return io::state_from_json(read_json_file(source));
}

DetectorSet load_detectors(const std::string &source, const StateVector &state) {
    if (source == "comp") {
        return computational_detectors(state, false);
    }
    if (source == "comp-all") {
        return computational_detectors(state, true);
    }
    if (source.find('=') != std::string::npos) {
        auto groups = split(source, ';');
        std::vector<LocalBasis> bases;
        for (std::size_t p = 1; p < state.parties(); ++p) {
            const auto &group = groups.size() == 1 ? groups.front() : groups.at(std::min(p - 1, groups.size() - 1));
            if (groups.size() != 1 && groups.size() != state.parties() - 1) {
                throw ParseError("give one angle group or one per party B..K");
            }
            BlochAngles angles;
            bool have_theta = false;
            for (const auto &kv : split(group, ',')) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw ParseError("expected key=value in '" + kv + "'");
                }
                const auto key = kv.substr(0, eq);
                const double v = parse_double(kv.substr(eq + 1));
                if (key == "theta") {
                    angles.theta = v;
                    have_theta = true;
                } else if (key == "phi") {
                    angles.phi = v;
                } else {
                    throw ParseError("unknown detector key '" + key + "'");
                }
            }
            if (!have_theta) {
                throw ParseError("detector angles need theta");
            }
            if (state.dims()[p] != 2) {
                throw ShapeError("angle detectors need qubit parties");
            }
            bases.push_back(bloch_basis(angles, p));
        }
        return DetectorSet(std::move(bases));
    }
    return io::detectors_from_json(read_json_file(source));
}

BoundScan bound_scan(std::size_t parties, std::size_t num, std::uint64_t seed, bool ghz_override) {
    if (parties < 2 || parties > 12) {
        throw ParamError("bound-scan needs 2 <= parties <= 12");
    }
    if (num < 1) {
        throw ParamError("bound-scan needs at least one draw");
    }
    constexpr double kTolerance = 1e-9;
    const std::vector<std::size_t> dims(parties, 2);
    const double cap = bound_max(2);
    const double z_floor = 2.0 * std::log(2.0);
    const double sep_cap = discrimination_parameter(parties, 2);

    BoundScan scan;
    scan.parties = parties;
    scan.seed = seed;
    scan.random.min_z = scan.product.min_z = std::numeric_limits<double>::infinity();
    const auto ghz = named_state("ghz", std::vector<double>{static_cast<double>(parties), 2.0});

    auto record = [&](ScanClass &cls, double y_full, double y_gram, bool product) {
        ++cls.draws;
        cls.max_full_product = std::max(cls.max_full_product, y_full);
        cls.max_gram = std::max(cls.max_gram, y_gram);
        for (const double y : {y_full, y_gram}) {
            const double z = y > 0 ? -std::log(y) : std::numeric_limits<double>::infinity();
            cls.min_z = std::min(cls.min_z, z);
            const bool bad = y > cap + kTolerance || z < z_floor - kTolerance ||
                             (product && y > sep_cap + kTolerance);
            cls.violations += bad ? 1 : 0;
        }
    };

    for (std::size_t d = 0; d < num; ++d) {
        Rng rng = derive_stream(seed, d);
        for (const bool product : {false, true}) {
            const StateVector state = product          ? random_product_state(dims, rng)
                                      : ghz_override ? ghz
                                                     : haar_state(dims, rng);
            std::vector<LocalBasis> bases;
            if (ghz_override && !product && d == 0) {
                bases = computational_detectors(state, true).bases();
            } else {
                for (std::size_t p = 0; p < parties; ++p) {
                    bases.push_back(haar_basis(2, rng, p));
                }
            }
            const double y_full = projection_product(state, DetectorSet(bases));
            const double y_gram =
                collectibility(state, DetectorSet(std::vector<LocalBasis>(bases.begin() + 1, bases.end())));
            record(product ? scan.product : scan.random, y_full, y_gram, product);
            if (ghz_override && !product && d == 0) {
                scan.ghz_computational_y = y_full;
            }
        }
    }
    return scan;
}

bool Table1::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto &c) { return c.pass; });
}

Table1 table1(std::size_t samples, std::uint64_t seed, const OptimizerConfig &optimizer) {
    struct Column {
        const char *name;
        double max, mean, detect;
    };
    // Published values, rounded to three decimals.
    const Column columns[] = {{"ghz", 0.250, 0.053, 0.807}, {"w", 0.141, 0.049, 0.807}, {"bs", 0.063, 0.021, 0.500}};
    Table1 table;
    for (const auto &col : columns) {
        const auto state = named_state(col.name);
        auto cfg = optimizer;
        const auto lo = minimize_collectibility(state, cfg);
        const auto hi = maximize_collectibility(state, cfg);
        McConfig mc;
        mc.samples = samples;
        mc.seed = seed;
        const auto stats = mc_statistics(state, mc);
        auto cell = [&](const char *row, double value, double target, double tol, double se) {
            table.cells.push_back({row, col.name, value, target, tol, se, std::abs(value - target) <= tol});
        };
        cell("minimal", lo.value, 0.0, 1e-6, 0.0);
        cell("maximal", hi.value, col.max, 1e-3, 0.0);
        cell("average", stats.average.mean, col.mean, 2e-3, stats.average.std_error);
        cell("detection", stats.detect.mean, col.detect, 5e-3, stats.detect.std_error);
    }
    return table;
}

namespace {

struct Common {
    std::string manifest;
    std::string out_file;
};

void add_common(CLI::App *cmd, Common &common) {
    cmd->add_option("--manifest", common.manifest, "Write a run manifest (JSON) to this file");
    cmd->add_option("--out", common.out_file, "Write machine output to this file instead of stdout");
}

json normalized_arguments(const CLI::App *cmd) {
    json args = json::object();
    for (const auto *opt : cmd->get_options()) {
        const auto name = opt->get_single_name();
        if (name.empty() || name == "help" || name == "manifest" || name == "out") {
            continue;
        }
        if (opt->count() > 0) {
            const auto &r = opt->results();
            args[name] = r.empty() ? "true" : r.back();
        } else if (!opt->get_default_str().empty()) {
            args[name] = opt->get_default_str();
        }
    }
    return args;
}

/// Parses "3", "1e5", "100000" as a count.
std::size_t parse_count(const std::string &s, const char *what) {
    const double v = parse_double(s);
    if (!(v >= 0) || v != std::floor(v) || v > 1e15) {
        throw ParamError(std::string(what) + " must be a nonnegative integer");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Collectibility entanglement indicators for pure states", "collect"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Common common;

    std::string state_src, detector_src;
    auto *compute = app.add_subcommand("compute", "Collectibility of a state for one detector setting");
    compute->add_option("--state", state_src, "Named state (bell, ghz:K,N, w, bs, schmidt:psi, sep:K,N), JSON file, or - for stdin")->required();
    compute->add_option("--detectors", detector_src, "comp, comp-all, theta=T,phi=P[;...], or a JSON detector file")->required();

    OptimizerConfig opt_cfg;
    bool minimize = false;
    auto *optimize = app.add_subcommand("optimize", "Maximize (or minimize) collectibility over detector settings");
    optimize->add_option("--state", state_src, "State source")->required();
    optimize->add_option("--restarts", opt_cfg.restarts, "Multistart restarts")->capture_default_str();
    optimize->add_option("--max-iterations", opt_cfg.max_iterations, "Simplex iterations per restart")->capture_default_str();
    optimize->add_option("--tolerance", opt_cfg.tolerance, "Stop when the simplex value spread is below this")->capture_default_str();
    optimize->add_option("--seed", opt_cfg.seed, "Random seed")->capture_default_str();
    optimize->add_flag("--min", minimize, "Minimize instead of maximize");

    std::string points_str = "629";
    auto *sweep = app.add_subcommand("sweep", "Two-qubit curves versus the Schmidt angle as CSV");
    sweep->add_option("--points", points_str, "Number of Schmidt angles on [0, pi]")->capture_default_str();

    std::string samples_str = "1000000";
    std::uint64_t seed = 0;
    auto *t1 = app.add_subcommand("table1", "GHZ / W / bi-separable comparison");
    t1->add_option("--samples", samples_str, "Monte Carlo samples per state")->capture_default_str();
    t1->add_option("--seed", seed, "Random seed")->capture_default_str();
    t1->add_option("--restarts", opt_cfg.restarts, "Optimizer restarts")->capture_default_str();

    std::string scheme_str = "hom";
    BlochAngles angles;
    std::string shots_str = "100000";
    auto *simulate = app.add_subcommand("simulate", "Shot-noise simulation of a Gram-measurement scheme");
    simulate->add_option("--state", state_src, "Two-qubit state source")->required();
    simulate->add_option("--scheme", scheme_str, "hom or swap")->capture_default_str();
    simulate->add_option("--theta", angles.theta, "Detector polar angle")->capture_default_str();
    simulate->add_option("--phi", angles.phi, "Detector azimuth")->capture_default_str();
    simulate->add_option("--shots", shots_str, "Shots per measurement stage")->capture_default_str();
    simulate->add_option("--seed", seed, "Random seed")->capture_default_str();

    std::string num_str = "10000";
    std::size_t parties = 2;
    bool ghz_override = false;
    auto *scan = app.add_subcommand("bound-scan", "Check the collectibility bounds on random instances");
    scan->add_option("--num", num_str, "Draws per class")->capture_default_str();
    scan->add_option("--parties", parties, "Number of qubit parties K")->capture_default_str();
    scan->add_option("--seed", seed, "Random seed")->capture_default_str();
    scan->add_flag("--ghz", ghz_override, "Use the GHZ state for the random class (first draw at computational detectors)");

    for (auto *cmd : {compute, optimize, sweep, t1, simulate, scan}) {
        add_common(cmd, common);
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    CLI::App *cmd = app.get_subcommands().front();
    std::ostringstream machine;
    int code = kEntangled;
    try {
        if (cmd == compute) {
            const auto state = load_state(state_src, in);
            const auto detectors = load_detectors(detector_src, state);
            CollectibilityReport report;
            if (detectors.covers_tail(state.parties())) {
                report = collectibility_gram(gram_matrix(state, detectors), state.parties());
            } else if (detectors.covers_all(state.parties())) {
                report = verdict(projection_product(state, detectors), state.parties(), detectors.n(),
                                 ComputationPath::FullProduct);
            } else {
                throw ShapeError("detectors must cover parties B..K or every party");
            }
            machine << io::dump(io::to_json(report)) << '\n';
            code = report.verdict == Verdict::Entangled ? kEntangled : kInconclusive;
        } else if (cmd == optimize) {
            const auto state = load_state(state_src, in);
            opt_cfg.mode = minimize ? OptimizeMode::Minimize : OptimizeMode::Maximize;
            const auto result = optimize_collectibility(state, opt_cfg);
            const auto n = result.detectors.n();
            const auto report = verdict(result.value, state.parties(), n, ComputationPath::Optimizer);
            auto j = io::to_json(result);
            j["seed"] = opt_cfg.seed;
            j["bound_sep"] = report.bound_sep;
            j["verdict"] = to_string(report.verdict);
            machine << io::dump(j) << '\n';
            code = report.verdict == Verdict::Entangled ? kEntangled : kInconclusive;
        } else if (cmd == sweep) {
            write_sweep_csv(machine, sweep_fig1(parse_count(points_str, "--points")));
        } else if (cmd == t1) {
            opt_cfg.seed = seed;
            const auto table = table1(parse_count(samples_str, "--samples"), seed, opt_cfg);
            json cells = json::array();
            err << std::left << std::setw(11) << "row" << std::setw(6) << "state" << std::setw(12) << "value"
                << std::setw(9) << "target" << "result\n";
            for (const auto &c : table.cells) {
                cells.push_back({{"row", c.row}, {"state", c.state}, {"value", c.value}, {"target", c.target},
                                 {"tolerance", c.tolerance}, {"stderr", c.std_error}, {"pass", c.pass}});
                err << std::left << std::setw(11) << c.row << std::setw(6) << c.state << std::setw(12)
                    << std::fixed << std::setprecision(6) << c.value << std::setw(9) << std::setprecision(3)
                    << c.target << (c.pass ? "pass" : "FAIL") << '\n';
            }
            err.unsetf(std::ios::floatfield);
            machine << io::dump(json{{"samples", parse_count(samples_str, "--samples")},
                                     {"seed", seed},
                                     {"cells", cells},
                                     {"all_pass", table.all_pass()}})
                    << '\n';
        } else if (cmd == simulate) {
            const auto state = load_state(state_src, in);
            const auto report = experiment::run_experiment(state, angles, experiment::scheme_from_string(scheme_str),
                                                           parse_count(shots_str, "--shots"), seed);
            machine << io::dump(io::to_json(report)) << '\n';
            code = report.verdict == Verdict::Entangled ? kEntangled : kInconclusive;
        } else if (cmd == scan) {
            const auto result = bound_scan(parties, parse_count(num_str, "--num"), seed, ghz_override);
            auto cls = [](const ScanClass &c) {
                return json{{"draws", c.draws},
                            {"max_full_product", c.max_full_product},
                            {"max_gram", c.max_gram},
                            {"min_z", c.min_z},
                            {"violations", c.violations}};
            };
            json j{{"parties", result.parties},
                   {"seed", result.seed},
                   {"bound_max", bound_max(2)},
                   {"bound_sep", discrimination_parameter(parties, 2)},
                   {"random", cls(result.random)},
                   {"product", cls(result.product)},
                   {"violations", result.violations()}};
            if (ghz_override) {
                j["ghz_computational_y"] = result.ghz_computational_y;
            }
            machine << io::dump(j) << '\n';
            code = result.violations() == 0 ? kEntangled : kNumericalFailure;
            if (code != kEntangled) {
                err << "bound-scan: " << result.violations() << " bound violations\n";
            }
        }
    } catch (const InputError &e) {
        err << "collect " << cmd->get_name() << ": " << e.what() << '\n';
        return kInputError;
    } catch (const NumericalError &e) {
        err << "collect " << cmd->get_name() << ": " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::out_of_range &e) {
        err << "collect " << cmd->get_name() << ": " << e.what() << '\n';
        return kInputError;
    }

    std::vector<std::string> outputs;
    if (common.out_file.empty()) {
        out << machine.str();
    } else {
        std::ofstream f(common.out_file);
        if (!f) {
            err << "collect: cannot write '" << common.out_file << "'\n";
            return kInputError;
        }
        f << machine.str();
        outputs.push_back(common.out_file);
    }
    if (!common.manifest.empty()) {
        outputs.push_back(common.manifest);
        const auto args_json = normalized_arguments(cmd);
        json manifest{{"command", cmd->get_name()},
                      {"arguments", args_json},
                      {"seed", args_json.contains("seed") ? args_json["seed"] : json(nullptr)},
                      {"tool_version", kToolVersion},
                      {"outputs", outputs}};
        std::ofstream f(common.manifest);
        if (!f) {
            err << "collect: cannot write '" << common.manifest << "'\n";
            return kInputError;
        }
        f << io::dump(manifest) << '\n';
    }
    return code;
}

} // namespace collect::cli
