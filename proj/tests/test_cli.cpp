// Copyright 2026 The pwlab Authors
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "pwlab/cli.hpp"
#include "pwlab/random.hpp"

using namespace pwlab;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"pwlab"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) argv.push_back(s.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// Restores PWLAB_SEED on scope exit.
struct SeedEnv {
    explicit SeedEnv(const char *value) {
        if (const char *old = std::getenv("PWLAB_SEED")) saved = old, had = true;
        if (value)
            setenv("PWLAB_SEED", value, 1);
        else
            unsetenv("PWLAB_SEED");
    }
    ~SeedEnv() {
        if (had)
            setenv("PWLAB_SEED", saved.c_str(), 1);
        else
            unsetenv("PWLAB_SEED");
    }
    std::string saved;
    bool had = false;
};

const std::vector<std::string> kCommands{"two-qubit-demo", "intertwine", "trivialize", "retarget",
                                         "windowed",       "spectra",    "records",    "suite"};

}  // namespace

TEST_CASE("every command emits the report schema") {
    SeedEnv env(nullptr);
    for (const std::string &cmd : kCommands) {
        CAPTURE(cmd);
        const Outcome o = invoke({cmd, "--trials", "2"});
        CHECK(o.code == kExitPass);
        const Json j = Json::parse(o.out);
        std::vector<std::string> keys;
        for (const auto &[k, v] : j.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"op", "seed", "params", "residuals", "spectra", "pass", "data"});
        CHECK(j.at("op") == cmd);
        CHECK(j.at("seed") == 0);
        CHECK(j.at("params").at("trials") == 2);
        CHECK(j.at("pass") == true);
        CHECK(j.at("residuals").is_object());
        CHECK(j.at("spectra").is_array());
    }
}

TEST_CASE("reports are byte-identical for equal seeds") {
    SeedEnv env(nullptr);
    for (const std::string &cmd : kCommands) {
        CAPTURE(cmd);
        const Outcome a = invoke({cmd, "--seed", "42", "--trials", "3"});
        const Outcome b = invoke({cmd, "--seed", "42", "--trials", "3"});
        CHECK(a.out == b.out);
    }
    CHECK(invoke({"intertwine", "--seed", "1"}).out != invoke({"intertwine", "--seed", "2"}).out);
}

TEST_CASE("PWLAB_SEED sets the default seed") {
    {
        SeedEnv env("5");
        CHECK(Json::parse(invoke({"intertwine", "--trials", "1"}).out).at("seed") == 5);
        CHECK(Json::parse(invoke({"intertwine", "--trials", "1", "--seed", "9"}).out).at("seed") == 9);
        CHECK(invoke({"intertwine", "--trials", "1"}).out == invoke({"intertwine", "--trials", "1", "--seed", "5"}).out);
    }
    SeedEnv bad("not-a-number");
    CHECK(invoke({"intertwine"}).code == kExitConfig);
}

TEST_CASE("configuration errors exit with 2") {
    SeedEnv env(nullptr);
    CHECK(invoke({"intertwine", "--n", "0"}).code == kExitConfig);
    CHECK(invoke({"intertwine", "--dim-r", "-3"}).code == kExitConfig);
    CHECK(invoke({"no-such-command"}).code == kExitConfig);
    CHECK(invoke({}).code == kExitConfig);
    CHECK(invoke({"spectra", "--format", "yaml"}).code == kExitConfig);
    const Outcome w = invoke({"windowed", "--n", "1"});
    CHECK(w.code == kExitConfig);
    CHECK(w.err.find("windowed") != std::string::npos);
    CHECK(invoke({"--help"}).code == kExitPass);

    RunConfig direct;
    direct.command = "intertwine";
    direct.trials = 0;
    std::ostringstream out, err;
    CHECK(run(direct, out, err) == kExitConfig);
    CHECK(out.str().empty());
}

TEST_CASE("text format flattens the report") {
    SeedEnv env(nullptr);
    const Outcome o = invoke({"two-qubit-demo", "--format", "text"});
    CHECK(o.code == kExitPass);
    CHECK(o.out.find("op: \"two-qubit-demo\"\n") != std::string::npos);
    CHECK(o.out.find("params.n: 4\n") != std::string::npos);
    CHECK(o.out.find("pass: true\n") != std::string::npos);
    CHECK(o.out.find("residuals.law: ") != std::string::npos);
    CHECK(o.out.find("spectra[0].name: \"H\"\n") != std::string::npos);

    Json small{{"a", {{"b", 1}}}, {"c", Json::array({Json{{"d", true}}})}};
    CHECK(render_text(small) == "a.b: 1\nc[0].d: true\n");
}

TEST_CASE("two-qubit demo reports a controlled NOT") {
    const Json j = Json::parse(invoke({"two-qubit-demo"}).out);
    const Matrix s = matrix_from_json(j.at("data").at("s"));
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    CHECK(max_abs(s - cnot) < 1e-12);
}

TEST_CASE("spectra for a one-tick clock is a single eigenvalue") {
    SeedEnv env(nullptr);
    const Outcome o = invoke({"spectra", "--n", "1", "--dim-r", "5"});
    CHECK(o.code == kExitPass);
    const Json expected = Json::parse(o.out).at("data").at("expected");
    REQUIRE(expected.size() == 1);
    CHECK(expected[0].at("multiplicity") == 5);
    CHECK(expected[0].at("value")[0].get<double>() == doctest::Approx(1.0));
    CHECK(expected[0].at("value")[1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("seeded intertwine residuals") {
    SeedEnv env(nullptr);
    const Outcome o = invoke({"intertwine", "--n", "4", "--dim-r", "3", "--seed", "7"});
    CHECK(o.code == kExitPass);
    const Json j = Json::parse(o.out);
    CHECK(j.at("residuals").at("law").get<double>() <= 1e-10);
    CHECK(j.at("residuals").at("history").get<double>() <= 1e-10);
    CHECK(j.at("data").at("trials").size() == 10);
}

TEST_CASE("--out writes the report to a file") {
    SeedEnv env(nullptr);
    const auto path = std::filesystem::temp_directory_path() / "pwlab_test_cli_out.json";
    std::filesystem::remove(path);
    const Outcome o = invoke({"records", "--out", path.string()});
    CHECK(o.code == kExitPass);
    CHECK(o.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body == invoke({"records"}).out);
    std::filesystem::remove(path);

    CHECK(invoke({"records", "--out", "/nonexistent-dir/x/report.json"}).code == kExitConfig);
}

TEST_CASE("JSON round trips") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + trial % 5, cols = 1 + (trial * 3) % 4;
        const Matrix m = gaussian_matrix(rows, cols, rng);
        CHECK(matrix_from_json(Json::parse(matrix_to_json(m).dump())) == m);
        const Vector v = random_unit_vector(1 + trial % 6, rng);
        CHECK(vector_from_json(Json::parse(vector_to_json(v).dump())) == v);

        History h{1 + trial % 3, {}};
        for (int tau = 0; tau < 1 + trial % 4; ++tau) h.states.push_back(random_unit_vector(h.dim_r, rng));
        const History back = history_from_json(Json::parse(history_to_json(h).dump()));
        CHECK(back.dim_r == h.dim_r);
        REQUIRE(back.states.size() == h.states.size());
        for (std::size_t i = 0; i < h.states.size(); ++i) CHECK(back.states[i] == h.states[i]);

        const Tps t(2, 1 + trial % 3, haar_unitary(2 * (1 + trial % 3), rng));
        const Tps tb = tps_from_json(Json::parse(tps_to_json(t).dump()));
        CHECK(tb.dim_c == t.dim_c);
        CHECK(tb.dim_r == t.dim_r);
        CHECK(tb.iso == t.iso);
    }
    // Row-major [re, im] layout.
    Matrix m(1, 2);
    m << Complex(1, 2), Complex(3, -4);
    CHECK(matrix_to_json(m).dump() == R"({"rows":1,"cols":2,"entries":[[1.0,2.0],[3.0,-4.0]]})");

    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[[1,0]]})")), Error);
    CHECK_THROWS_AS(history_from_json(Json::parse(R"({"n":2,"dim_r":1,"states":[[[1,0]]]})")), Error);
}
