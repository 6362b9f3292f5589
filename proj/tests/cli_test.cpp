/*
   Copyright 2026 The halfline authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hla/json_io.hpp"

namespace {

// End-to-end checks against the installed binary (path injected by the
// build). Each run goes through real argv parsing, file IO and exit
// codes, which the in-process suites cannot cover.
struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HLA_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string temp_measure_file(const std::string& name, const hla::HalfLineMeasure& mu) {
    const std::string path = "cli_test_" + name + ".json";
    hla::write_text_file(path, hla::measure_to_json(mu).dump());
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("help exits cleanly") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("convolve") != std::string::npos);
}

TEST_CASE("bad arguments produce a JSON error and exit code 1") {
    const auto r = run_cli("convolve --a only_one.json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"error\"") != std::string::npos);
}

TEST_CASE("missing input files produce a JSON error") {
    const auto r = run_cli("norm --in does_not_exist.json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"error\"") != std::string::npos);
}

TEST_CASE("convolve and norm agree with the library") {
    const auto a = temp_measure_file("a", hla::dirac_at(0.5));
    const auto b = temp_measure_file(
        "b", hla::add(hla::dirac(), hla::scale(hla::Complex{0.0, 0.5}, hla::dirac_at(1.0))));

    auto r = run_cli("convolve --a " + a + " --b " + b);
    REQUIRE(r.exit_code == 0);
    const auto conv = hla::measure_from_json(nlohmann::json::parse(r.out));
    REQUIRE(conv.atoms().size() == 2);
    CHECK(conv.atoms()[0].loc == doctest::Approx(0.5));
    CHECK(conv.atoms()[1].loc == doctest::Approx(1.5));

    r = run_cli("norm --in " + b);
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["tv_norm"].get<double>() == doctest::Approx(1.5));

    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("deform applies the parameter from the command line") {
    const auto a = temp_measure_file("d", hla::dirac_at(1.0));
    const auto r = run_cli("deform --in " + a + " --t 0.5");
    REQUIRE(r.exit_code == 0);
    const auto mu = hla::measure_from_json(nlohmann::json::parse(r.out));
    REQUIRE(mu.atoms().size() == 1);
    CHECK(mu.atoms()[0].weight.real() == doctest::Approx(0.5));  // (1-t)^1
    std::remove(a.c_str());
}

TEST_CASE("laplace emits a CSV grid") {
    const auto a = temp_measure_file("l", hla::dirac());
    const auto r = run_cli("laplace --in " + a + " --grid 0:1:3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("s_re,s_im,val_re,val_im") == 0);
    // The transform of the unit is identically 1.
    CHECK(r.out.find("0,0,1,0") != std::string::npos);
    std::remove(a.c_str());
}

TEST_SUITE_END();
