// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks that drive the installed binary through std::system.
// QANGLE_CLI_PATH is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("qangle_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path &path) {
    std::ifstream f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void spit(const fs::path &path, const std::string &text) {
    std::ofstream f(path);
    f << text;
}

CliResult run_cli(const std::string &args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    const std::string cmd = std::string("\"") + QANGLE_CLI_PATH + "\" " + args +
                            " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// Fixture files shared by the cases below.
struct Fixtures {
    fs::path e0, plus, sz, unnorm, bad;
    Fixtures() {
        const fs::path d = work_dir();
        e0 = d / "e0.json";
        spit(e0, "[[1.0, 0.0], [0.0, 0.0]]");
        plus = d / "plus.json";
        spit(plus, "[[0.7071067811865476, 0.0], [0.7071067811865476, 0.0]]");
        sz = d / "sz.json";
        spit(sz, R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[-1,0]]})");
        unnorm = d / "unnorm.json";
        spit(unnorm, "[[1.0, 0.0], [1.0, 0.0]]");
        bad = d / "bad.json";
        spit(bad, "{not json at all");
    }
};

const Fixtures &fixtures() {
    static const Fixtures f;
    return f;
}

}  // namespace

TEST_CASE("angle reports the ray angle between two state files") {
    const auto &f = fixtures();
    const CliResult r =
        run_cli("angle --state-a " + f.e0.string() + " --state-b " + f.plus.string());
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["angle_radians"].get<double>() ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-12));
    CHECK_FALSE(doc["substantial"].get<bool>());

    const CliResult csv =
        run_cli("--format csv angle --state-a " + f.e0.string() + " --state-b " +
                f.plus.string());
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("angle_radians,substantial\n", 0) == 0);
    CHECK(csv.out.find(",0\n") != std::string::npos);
}

TEST_CASE("evolve applies the generated motion and keeps the state readable") {
    const auto &f = fixtures();
    const CliResult r = run_cli("evolve --generator " + f.sz.string() + " --state " +
                                f.e0.string() + " --delta 0.5");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    const double re = doc[0][0].get<double>();
    const double im = doc[0][1].get<double>();
    CHECK(re == doctest::Approx(std::cos(0.5)).epsilon(1e-12));
    CHECK(im == doctest::Approx(-std::sin(0.5)).epsilon(1e-12));
    const double norm =
        std::sqrt(re * re + im * im + doc[1][0].get<double>() * doc[1][0].get<double>() +
                  doc[1][1].get<double>() * doc[1][1].get<double>());
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verdict grades one shift against the certainty bound") {
    const auto &f = fixtures();
    // Spread of the generator in this state is 1, so shift 1.2 opens an
    // angle past the threshold and the bound is checked for real.
    const CliResult r = run_cli("verdict --generator " + f.sz.string() + " --state " +
                                f.plus.string() + " --delta 1.2");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["substantial"].get<bool>());
    CHECK(doc["holds"].get<bool>());
    CHECK(doc["lhs"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc["rhs"].get<double>() == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(doc["product"].get<double>() == doctest::Approx(1.2).epsilon(1e-12));

    const CliResult small = run_cli("verdict --generator " + f.sz.string() +
                                    " --state " + f.plus.string() + " --delta 0.5");
    REQUIRE(small.exit_code == 0);
    const json vac = json::parse(small.out);
    CHECK_FALSE(vac["substantial"].get<bool>());
    CHECK(vac["holds"].get<bool>());
    CHECK(vac["context"].get<std::string>().find("not applicable") != std::string::npos);
}

TEST_CASE("geodesic emits one row per node") {
    const auto &f = fixtures();
    const CliResult r = run_cli("geodesic --state-a " + f.e0.string() + " --state-b " +
                                f.plus.string() + " --segments 16");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 17);
    CHECK(doc.front()["angle_to_start"].get<double>() == 0.0);
    CHECK(doc.back()["angle_to_start"].get<double>() ==
          doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-9));

    const CliResult csv = run_cli("--format csv geodesic --state-a " + f.e0.string() +
                                  " --state-b " + f.plus.string() + " --segments 16");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("t,omega,cumulative_length,angle_to_start\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 18);
}

TEST_CASE("profile samples the angle against the arc bound") {
    const auto &f = fixtures();
    const CliResult r = run_cli("profile --generator " + f.sz.string() + " --state " +
                                f.plus.string() + " --max 2 --steps 51");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 51);
    CHECK(doc.front()["delta_s"].get<double>() == 0.0);
    CHECK(doc.front()["angle"].get<double>() < 1e-12);
    for (const auto &row : doc) {
        CHECK(row["angle"].get<double>() <= row["bound"].get<double>() + 1e-9);
    }
    CHECK(doc.back()["delta_s"].get<double>() == doctest::Approx(2.0).epsilon(1e-15));

    const CliResult bad_steps = run_cli("profile --generator " + f.sz.string() +
                                        " --state " + f.plus.string() +
                                        " --max 2 --steps 1");
    CHECK(bad_steps.exit_code == 2);
}

TEST_CASE("two-level demo finds the unit shift") {
    const CliResult r = run_cli("--seed 7 demo two-level");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["demo"] == "two-level");
    CHECK(doc["parameters"]["seed"].get<int>() == 7);
    CHECK(doc["delta_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc["std_dev"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc["product"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc["holds"].get<bool>());
    CHECK(doc["details"]["verdict"]["holds"].get<bool>());

    // Doubling hbar doubles the minimal shift but not the product.
    const CliResult scaled = run_cli("--hbar 2 demo two-level");
    REQUIRE(scaled.exit_code == 0);
    const json sdoc = json::parse(scaled.out);
    CHECK(sdoc["delta_star"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(sdoc["product"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const CliResult csv = run_cli("--format csv demo two-level");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("demo,delta_star,std_dev,product,holds\n", 0) == 0);
    CHECK(csv.out.find("\ntwo-level,") != std::string::npos);
}

TEST_CASE("circle demo distinguishes eigenstates from superpositions") {
    const CliResult eig = run_cli("demo circle --eigenstate 3");
    REQUIRE(eig.exit_code == 0);
    const json edoc = json::parse(eig.out);
    CHECK(edoc["delta_star"].is_null());
    CHECK(edoc["product"].is_null());
    CHECK(edoc["holds"].get<bool>());
    CHECK(edoc["details"]["eigenstate"].get<bool>());
    CHECK(edoc["details"]["narrative"].get<std::string>().find("eigenstate") !=
          std::string::npos);

    const CliResult two = run_cli("demo circle --mode-a 0 --mode-b 1");
    REQUIRE(two.exit_code == 0);
    const json tdoc = json::parse(two.out);
    CHECK(tdoc["delta_star"].get<double>() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(tdoc["std_dev"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(tdoc["product"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(tdoc["holds"].get<bool>());
}

TEST_CASE("lifetime demo relates decay time to energy spread") {
    const CliResult r = run_cli("demo lifetime --two-level --gamma 1");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["delta_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(doc["std_dev"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc["product"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(doc["holds"].get<bool>());
    CHECK(doc["details"]["decays"].get<bool>());
}

TEST_CASE("line demo reproduces the packet numbers") {
    const CliResult r = run_cli("demo line");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["delta_star"].get<double>() ==
          doctest::Approx(2.219236752391355).epsilon(1e-6));
    CHECK(doc["std_dev"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(doc["product"].get<double>() ==
          doctest::Approx(1.109618376195432).epsilon(1e-6));
    CHECK(doc["holds"].get<bool>());
    CHECK(doc["details"]["position_spread"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(doc["details"]["pauli_weyl"]["holds"].get<bool>());
}

TEST_CASE("multi-axis demo combines axis spreads in quadrature") {
    const CliResult r = run_cli("demo multi-axis");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["delta_star"].is_null());
    CHECK(doc["std_dev"].get<double>() ==
          doctest::Approx(2.1213202998751552).epsilon(1e-9));
    CHECK(doc["holds"].get<bool>());
    CHECK(doc["details"]["substantial"].get<bool>());
    CHECK(doc["details"]["tensor_delta_b"].is_null());
    REQUIRE(doc["details"]["axis_momentum_spread"].size() == 2);

    const CliResult mismatch = run_cli("demo multi-axis --axes 3 --displacement 1 2");
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("output redirection and profiles write the requested files") {
    const fs::path out1 = work_dir() / "rec1.json";
    const fs::path out2 = work_dir() / "rec2.json";
    const CliResult r1 = run_cli("--out " + out1.string() + " demo two-level");
    const CliResult r2 = run_cli("--out " + out2.string() + " demo two-level");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(r1.out.empty());
    const std::string rec1 = slurp(out1);
    CHECK_FALSE(rec1.empty());
    // Identical invocations produce byte-identical output.
    CHECK(rec1 == slurp(out2));

    const fs::path prof = work_dir() / "profile.csv";
    const CliResult pr = run_cli("--out " + out1.string() + " demo circle --profile-out " +
                                 prof.string());
    REQUIRE(pr.exit_code == 0);
    const std::string body = slurp(prof);
    CHECK(body.rfind("delta_s,angle,bound\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 202);
}

TEST_CASE("failure modes map to distinct exit codes") {
    const auto &f = fixtures();
    SUBCASE("missing input file") {
        const CliResult r = run_cli("angle --state-a /nonexistent/a.json --state-b " +
                                    f.plus.string());
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("cannot open file") != std::string::npos);
    }
    SUBCASE("unparseable input file") {
        const CliResult r = run_cli("angle --state-a " + f.bad.string() + " --state-b " +
                                    f.plus.string());
        CHECK(r.exit_code == 2);
    }
    SUBCASE("state too far from unit norm") {
        const CliResult r = run_cli("angle --state-a " + f.unnorm.string() +
                                    " --state-b " + f.plus.string());
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("accepted window") != std::string::npos);
    }
    SUBCASE("numerical guard") {
        const CliResult r = run_cli("demo line --sigma 0.01");
        CHECK(r.exit_code == 3);
        CHECK(r.err.find("numerical guard") != std::string::npos);
    }
    SUBCASE("unknown subcommand") {
        CHECK(run_cli("frobnicate").exit_code == 2);
    }
    SUBCASE("unknown demo name") {
        CHECK(run_cli("demo warp-drive").exit_code == 2);
    }
    SUBCASE("missing required option") {
        CHECK(run_cli("angle --state-a " + f.e0.string()).exit_code == 2);
    }
    SUBCASE("rejected flag values") {
        CHECK(run_cli("--format xml demo two-level").exit_code == 2);
        CHECK(run_cli("--hbar -1 demo two-level").exit_code == 2);
    }
    SUBCASE("help exits cleanly") {
        CHECK(run_cli("--help").exit_code == 0);
    }
}
