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
#include "collect/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace collect;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args, const std::string &stdin_text = "") {
    args.insert(args.begin(), "collect");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("collect_test_" + name);
}

} // namespace

TEST_CASE("compute: Bell with computational detectors") {
    const auto r = invoke({"compute", "--state", "bell", "--detectors", "theta=0,phi=0"});
    CHECK(r.code == cli::kEntangled);
    const auto j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(j["verdict"] == "Entangled");
    CHECK(j["path"] == "gram-formula");
}

TEST_CASE("compute: product state is inconclusive") {
    const auto r = invoke({"compute", "--state", "schmidt:0", "--detectors", "theta=1.5707963,phi=0"});
    CHECK(r.code == cli::kInconclusive);
    const auto j = json::parse(r.out);
    CHECK(j["value"].get<double>() <= 0.0625);
    CHECK(j["verdict"] == "Inconclusive");

    const auto zero = invoke({"compute", "--state", "schmidt:0", "--detectors", "comp"});
    CHECK(zero.code == cli::kInconclusive);
    CHECK(json::parse(zero.out)["z"] == "inf");
}

TEST_CASE("compute: full-product path and qutrits") {
    const auto r = invoke({"compute", "--state", "ghz:2,3", "--detectors", "comp-all"});
    CHECK(r.code == cli::kEntangled);
    const auto j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 27));
    CHECK(j["path"] == "full-product");
}

TEST_CASE("input errors exit with 1") {
    CHECK(invoke({"compute", "--state", "nope", "--detectors", "comp"}).code == cli::kInputError);
    CHECK(invoke({"compute", "--state", "schmidt", "--detectors", "comp"}).code == cli::kInputError);
    CHECK(invoke({"compute", "--state", "bell", "--detectors", "theta=9,phi=0"}).code == cli::kInputError);
    CHECK(invoke({"compute", "--state", "-", "--detectors", "comp"}, "{\"dims\": [2, 2], \"amplitudes\": [1, 1, 0, 0]}")
              .code == cli::kInputError);
    CHECK(invoke({"compute", "--state", "/nonexistent/file.json", "--detectors", "comp"}).code == cli::kInputError);
    CHECK(invoke({"compute", "--state", "-", "--detectors", "comp"}, "{not json").code == cli::kInputError);
    CHECK(invoke({"sweep", "--points", "1"}).code == cli::kInputError);
    CHECK(invoke({"simulate", "--state", "bell", "--shots", "0"}).code == cli::kInputError);
    CHECK(invoke({"simulate", "--state", "bell", "--scheme", "bogus"}).code == cli::kInputError);
    CHECK(invoke({"bogus"}).code == cli::kInputError);
    const auto r = invoke({"compute", "--state", "bell", "--detectors", "theta=9,phi=0"});
    CHECK(r.err.find("RangeError") != std::string::npos);
}

TEST_CASE("state from stdin with complex amplitudes") {
    const std::string text =
        R"({"dims": [2, 2], "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0, 0.7071067811865476]]})";
    const auto r = invoke({"compute", "--state", "-", "--detectors", "comp"}, text);
    CHECK(r.code == cli::kEntangled);
    CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("optimize emits detectors that round-trip through compute") {
    const auto r = invoke({"optimize", "--state", "w", "--seed", "3", "--restarts", "8"});
    CHECK(r.code == cli::kEntangled);
    const auto j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(9.0 / 64).epsilon(1e-6));
    CHECK(j["converged"] == true);

    const auto path = temp_path("detectors.json");
    {
        std::ofstream f(path);
        f << r.out;
    }
    const auto c = invoke({"compute", "--state", "w", "--detectors", path.string()});
    CHECK(c.code == cli::kEntangled);
    CHECK(json::parse(c.out)["value"].get<double>() == doctest::Approx(j["value"].get<double>()).epsilon(1e-12));
    std::filesystem::remove(path);

    const auto m = invoke({"optimize", "--state", "bs", "--min", "--restarts", "8"});
    CHECK(m.code == cli::kInconclusive);
    CHECK(json::parse(m.out)["value"].get<double>() < 1e-6);
}

TEST_CASE("runs are byte-identical for the same seed") {
    const std::vector<std::string> sim{"simulate", "--state", "bell", "--scheme", "swap", "--theta", "0.7",
                                       "--shots", "20000", "--seed", "5"};
    CHECK(invoke(sim).out == invoke(sim).out);
    const std::vector<std::string> opt{"optimize", "--state", "ghz", "--seed", "9", "--restarts", "4"};
    CHECK(invoke(opt).out == invoke(opt).out);
    const std::vector<std::string> scan{"bound-scan", "--num", "200", "--seed", "4"};
    CHECK(invoke(scan).out == invoke(scan).out);
}

TEST_CASE("simulate examples") {
    const auto e = invoke({"simulate", "--state", "bell", "--scheme", "hom", "--theta", "0.7854", "--shots",
                           "100000", "--seed", "1"});
    CHECK(e.code == cli::kEntangled);
    const auto je = json::parse(e.out);
    CHECK(je["scheme"] == "hom");
    CHECK(je["significance"].get<double>() > 3);

    const auto i = invoke({"simulate", "--state", "schmidt:0", "--scheme", "swap", "--theta", "1.5707963267948966",
                           "--shots", "100000", "--seed", "1"});
    CHECK(i.code == cli::kInconclusive);
}

TEST_CASE("sweep CSV") {
    const auto r = invoke({"sweep", "--points", "629"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "psi,r_min,r_mean,r_max,p_detect");
    CHECK(first.rfind("0,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 630);
}

TEST_CASE("bound-scan reports no violations") {
    const auto r = invoke({"bound-scan", "--num", "500", "--parties", "3", "--seed", "2"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["product"]["max_gram"].get<double>() <= 1.0 / 64 + 1e-12);

    const auto g = invoke({"bound-scan", "--num", "10", "--parties", "3", "--ghz"});
    CHECK(json::parse(g.out)["ghz_computational_y"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("manifest and --out") {
    const auto out = temp_path("out.csv");
    const auto manifest = temp_path("manifest.json");
    const auto r = invoke({"sweep", "--points", "3", "--out", out.string(), "--manifest", manifest.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream mf(manifest);
    const auto j = json::parse(mf);
    CHECK(j["command"] == "sweep");
    CHECK(j["tool_version"] == cli::kToolVersion);
    CHECK(j["outputs"].size() == 2);
    std::ifstream of(out);
    std::string header;
    std::getline(of, header);
    CHECK(header == "psi,r_min,r_mean,r_max,p_detect");
    std::filesystem::remove(out);
    std::filesystem::remove(manifest);
}

TEST_CASE("table1 runs at small sample counts") {
    const auto r = invoke({"table1", "--samples", "2000", "--restarts", "8"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["cells"].size() == 12);
    CHECK(r.err.find("row") != std::string::npos);
}
