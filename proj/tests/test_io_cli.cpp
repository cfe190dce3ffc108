// Copyright 2026 The tbvqe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the command-line tool (binary path via TBVQE_BIN)
// plus the config-file plumbing it depends on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tbvqe/io.hpp"
#include "tbvqe/tb_params.hpp"

using namespace tbvqe;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(TBVQE_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "tbvqe_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string kParams = std::string(TBVQE_DATA_DIR) + "/pbi_sp3.params";

} // namespace

TEST_CASE("ini parsing") {
    std::istringstream src("top = 1\n[alpha]\nkey = value # trailing\nnum = 2.5\n; comment\n"
                           "[beta.gamma]\nflag = yes\n");
    const IniFile ini = IniFile::parse(src);
    CHECK(ini.get("alpha", "key") == "value");
    CHECK(ini.get_double("alpha", "num") == 2.5);
    CHECK(ini.get("", "top") == "1");
    CHECK(ini.has_section("beta.gamma"));
    CHECK(ini.get_double_or("alpha", "missing", -1.0) == -1.0);
    CHECK_THROWS_AS(ini.get("alpha", "missing"), std::invalid_argument);
    CHECK_THROWS_AS(ini.get_double("alpha", "key"), std::invalid_argument);

    std::istringstream bad("no equals sign here\n");
    CHECK_THROWS_AS(IniFile::parse(bad), std::invalid_argument);
}

TEST_CASE("parameter file loads the fixture species") {
    const TBParameterSet p = load_parameter_file(kParams);
    CHECK(p.cation == "Pb");
    CHECK(p.anion == "I");
    CHECK(p.onsite.count("Pb") == 1);
    CHECK(p.slater_koster.count({"Pb", "I"}) == 1);
    CHECK(p.slater_koster.count({"I", "Pb"}) == 1);
    CHECK(p.soc_lambda.at("Pb") > 0.0);
    // The two orderings describe one physical bond.
    const auto& ab = p.slater_koster.at({"Pb", "I"});
    const auto& ba = p.slater_koster.at({"I", "Pb"});
    CHECK(ab.v_sp_sigma == ba.v_ps_sigma);
    CHECK(ab.v_ps_sigma == ba.v_sp_sigma);
}

TEST_CASE("cli build writes the advertised artifacts") {
    const fs::path dir = fresh_dir("build");
    const int rc = run_cli("--dims 1,1,2 --spin --params " + kParams + " --out " + dir.string() +
                           " build");
    REQUIRE(rc == 0);
    const std::string summary = read_file(dir / "summary.txt");
    CHECK(summary.find("dimension=64") != std::string::npos);
    CHECK(summary.find("qubits=6") != std::string::npos);
    CHECK(summary.find("qubits_with_ancilla=7") != std::string::npos);
    CHECK(read_file(dir / "supercell.txt").find("# command=build") != std::string::npos);

    std::ifstream mm(dir / "hamiltonian.mtx");
    const SparseHermitian h = read_matrix_market(mm);
    CHECK(h.dim() == 64);
}

TEST_CASE("cli build spinless 1x1x1 is 16-dimensional") {
    const fs::path dir = fresh_dir("build16");
    REQUIRE(run_cli("--dims 1,1,1 --params " + kParams + " --out " + dir.string() + " build") == 0);
    CHECK(read_file(dir / "summary.txt").find("raw_dimension=16") != std::string::npos);
}

TEST_CASE("cli rebuild is byte-identical") {
    const fs::path a = fresh_dir("rebuild_a");
    const fs::path b = fresh_dir("rebuild_b");
    const std::string common = "--dims 1,2,2 --spin --params " + kParams + " --seed 9 ";
    REQUIRE(run_cli(common + "--out " + a.string() + " build") == 0);
    REQUIRE(run_cli(common + "--out " + b.string() + " build") == 0);
    for (const char* name : {"supercell.txt", "hamiltonian.mtx", "summary.txt"})
        CHECK(read_file(a / name) == read_file(b / name));
}

TEST_CASE("cli plan emits one row per group and the allocation totals") {
    const fs::path dir = fresh_dir("plan");
    REQUIRE(run_cli("--dims 1,1,2 --spin --params " + kParams + " --epsilon 0.5 --out " +
                    dir.string() + " plan") == 0);
    const std::string csv = read_file(dir / "plan.csv");
    CHECK(csv.find("# circuit_count=51") != std::string::npos);
    CHECK(csv.find("# shot_total=") != std::string::npos);
    CHECK(csv.find("x,part,member_count,max_abs_coeff,cnot_count,shots") != std::string::npos);
}

TEST_CASE("cli plan on a diagonal-only model keeps a single row") {
    // Spinless lone-cation geometry is diagonal; route it through a params
    // file with zero couplings to keep the plan at one circuit.
    const fs::path dir = fresh_dir("plan_diag");
    const fs::path params = dir / "diag.params";
    {
        std::ofstream os(params);
        os << "[structure]\ncation = A\nanion = B\n[onsite.A]\ne_s = -1\ne_p = 2\n"
           << "[onsite.B]\ne_s = -3\ne_p = 1\n"
           << "[sk.A_B]\nv_ss_sigma = 0\nv_sp_sigma = 0\nv_ps_sigma = 0\nv_pp_sigma = 0\n"
           << "v_pp_pi = 0\n[sk.B_A]\nv_ss_sigma = 0\nv_sp_sigma = 0\nv_ps_sigma = 0\n"
           << "v_pp_sigma = 0\nv_pp_pi = 0\n";
    }
    REQUIRE(run_cli("--dims 1,1,1 --params " + params.string() + " --out " + dir.string() +
                    " plan") == 0);
    const std::string csv = read_file(dir / "plan.csv");
    CHECK(csv.find("# circuit_count=1") != std::string::npos);
}

TEST_CASE("cli vqe on the synthetic default runs the two-stage workflow") {
    const fs::path dir = fresh_dir("vqe");
    // Small spinless cell keeps this test quick.
    REQUIRE(run_cli("--dims 1,1,1 --params " + kParams + " --layers 2 --seed 4 --out " +
                    dir.string() + " --validate-ed vqe") == 0);
    const std::string result = read_file(dir / "result.txt");
    CHECK(result.find("e_vbm=") != std::string::npos);
    CHECK(result.find("e_cbm=") != std::string::npos);
    CHECK(result.find("gap=") != std::string::npos);
    const std::string trace = read_file(dir / "stage1_trace.csv");
    CHECK(trace.find("iteration,cost,gradient_norm,shots_used,ed_min_cost") != std::string::npos);
}

TEST_CASE("cli vqe exact rerun with the same seed is byte-identical") {
    const fs::path a = fresh_dir("vqe_a");
    const fs::path b = fresh_dir("vqe_b");
    const std::string common =
        "--dims 1,1,1 --params " + kParams + " --layers 2 --seed 12 --max-iters 400 ";
    REQUIRE(run_cli(common + "--out " + a.string() + " vqe") == 0);
    REQUIRE(run_cli(common + "--out " + b.string() + " vqe") == 0);
    for (const char* name : {"result.txt", "stage1_trace.csv", "stage2_trace.csv"})
        CHECK(read_file(a / name) == read_file(b / name));
}

TEST_CASE("cli sampled totals follow the inverse-square law") {
    const fs::path dir_a = fresh_dir("plan_eps_a");
    const fs::path dir_b = fresh_dir("plan_eps_b");
    REQUIRE(run_cli("--dims 1,1,2 --spin --params " + kParams + " --epsilon 0.5 --out " +
                    dir_a.string() + " plan") == 0);
    REQUIRE(run_cli("--dims 1,1,2 --spin --params " + kParams + " --epsilon 0.1 --out " +
                    dir_b.string() + " plan") == 0);
    const auto grab = [](const std::string& text, const std::string& key) {
        const auto pos = text.find(key);
        REQUIRE(pos != std::string::npos);
        return std::stod(text.substr(pos + key.size()));
    };
    const double bound_a = grab(read_file(dir_a / "plan.csv"), "# shot_bound=");
    const double bound_b = grab(read_file(dir_b / "plan.csv"), "# shot_bound=");
    CHECK(bound_b / bound_a == doctest::Approx(25.0).epsilon(1e-12));
}

TEST_CASE("cli error paths use exit code 2") {
    CHECK(run_cli("--dims 0,1,1 --params " + kParams + " build") == 2);
    CHECK(run_cli("--params /nonexistent.params build") == 2);
    CHECK(run_cli("--unknown-flag build") == 2);
    CHECK(run_cli("--mode sampled --params " + kParams + " vqe") == 2); // neither eps nor shots
    CHECK(run_cli("build plan") == 2); // one subcommand at a time
}

TEST_CASE("cli config file supplies defaults and flags win") {
    const fs::path dir = fresh_dir("config");
    const fs::path cfg = dir / "run.ini";
    {
        std::ofstream os(cfg);
        os << "dims = 1,1,2\nspin = true\nparams = " << kParams << "\nout = " << dir.string()
           << "\n";
    }
    REQUIRE(run_cli("--config " + cfg.string() + " build") == 0);
    CHECK(read_file(dir / "summary.txt").find("dimension=64") != std::string::npos);

    const fs::path dir2 = fresh_dir("config_override");
    REQUIRE(run_cli("--config " + cfg.string() + " --out " + dir2.string() + " --dims 1,1,1 build") ==
            0);
    CHECK(read_file(dir2 / "summary.txt").find("dimension=32") != std::string::npos);
}
