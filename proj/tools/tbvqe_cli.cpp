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

// Command-line front end: build | plan | vqe | bench. Exit codes:
// 0 success, 2 configuration error, 3 numerical abort, 4 benchmark cell
// censored by timeout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tbvqe/eig.hpp"
#include "tbvqe/io.hpp"
#include "tbvqe/lattice.hpp"
#include "tbvqe/parallel.hpp"
#include "tbvqe/pauli_bench.hpp"
#include "tbvqe/rng.hpp"
#include "tbvqe/sb_plan.hpp"
#include "tbvqe/tb_model.hpp"
#include "tbvqe/tb_params.hpp"
#include "tbvqe/vqe.hpp"

namespace {

using namespace tbvqe;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCensored = 4;

struct RunConfig {
    std::vector<int> dims{1, 1, 2};
    bool spin = false;
    std::string params_path = "data/pbi_sp3.params";
    std::string mode = "exact"; // exact | sampled
    double epsilon = 0.0;
    std::uint64_t shots_per_circuit = 0;
    bool sampled_full = false;
    int layers = 0; // 0 = per-size default
    std::uint64_t seed = 1;
    std::string omega = "auto"; // auto | <number>
    std::string out_dir = "out";
    bool validate_ed = false;
    int threads = 0;
    // optimizer
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    int max_iterations = 20000;
    int convergence_window = 100;
    double convergence_band = 1.5e-2;
    // bench
    std::string sizes = "1x1x2,1x2x2,2x2x2";
    std::string methods = "naive,qwc,gc,sb";
    double timeout_s = 3600.0;

    std::array<int, 3> dims3() const { return {dims[0], dims[1], dims[2]}; }

    std::optional<double> fixed_omega() const {
        if (omega == "auto") return std::nullopt;
        return std::stod(omega);
    }
};

ConfigEcho base_echo(const RunConfig& c, const std::string& command) {
    ConfigEcho e;
    e.emplace_back("command", command);
    e.emplace_back("dims", std::to_string(c.dims[0]) + "," + std::to_string(c.dims[1]) + "," +
                               std::to_string(c.dims[2]));
    e.emplace_back("spin", c.spin ? "true" : "false");
    e.emplace_back("params", c.params_path);
    e.emplace_back("lattice_constant", "1");
    e.emplace_back("mode", c.mode);
    if (c.mode == "sampled") {
        e.emplace_back("epsilon", std::to_string(c.epsilon));
        e.emplace_back("shots_per_circuit", std::to_string(c.shots_per_circuit));
        e.emplace_back("sampled_full", c.sampled_full ? "true" : "false");
    }
    e.emplace_back("omega", c.omega);
    e.emplace_back("seed", std::to_string(c.seed));
    e.emplace_back("threads", std::to_string(c.threads));
    return e;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot write " + path.string());
    return os;
}

SparseHermitian build_h(const RunConfig& c, const TBParameterSet& params, double omega_hint) {
    const Supercell cell = build_supercell(c.dims3(), c.spin, params.cation, params.anion);
    AssembleOptions opts;
    opts.omega_hint = omega_hint;
    return assemble_hamiltonian(cell, params, opts);
}

int cmd_build(const RunConfig& c) {
    const TBParameterSet params = load_parameter_file(c.params_path);
    const Supercell cell = build_supercell(c.dims3(), c.spin, params.cation, params.anion);
    const SparseHermitian h = assemble_hamiltonian(cell, params);
    const ConfigEcho echo = base_echo(c, "build");

    std::filesystem::create_directories(c.out_dir);
    const std::filesystem::path out(c.out_dir);
    {
        auto os = open_output(out / "supercell.txt");
        write_echo_header(os, echo, "#");
        write_supercell(os, cell);
    }
    {
        auto os = open_output(out / "hamiltonian.mtx");
        write_matrix_market(os, h, echo);
    }
    {
        auto os = open_output(out / "summary.txt");
        write_echo_header(os, echo, "#");
        os << "atoms=" << cell.atoms.size() << '\n'
           << "neighbor_pairs=" << cell.neighbor_pairs.size() << '\n'
           << "raw_dimension=" << raw_dimension(cell) << '\n'
           << "dimension=" << h.dim() << '\n'
           << "qubits=" << h.n_qubits() << '\n'
           << "qubits_with_ancilla=" << h.n_qubits() + 1 << '\n'
           << "stored_nonzeros=" << h.stored_nonzeros() << '\n'
           << "full_nonzeros=" << h.full_nonzeros() << '\n';
    }
    std::cout << "dim " << h.dim() << " (" << h.n_qubits() << " qubits + 1 ancilla), "
              << h.stored_nonzeros() << " stored nonzeros -> " << c.out_dir << "\n";
    return 0;
}

int cmd_plan(const RunConfig& c) {
    const TBParameterSet params = load_parameter_file(c.params_path);
    const double omega = c.fixed_omega().value_or(0.0);
    const SparseHermitian h = build_h(c, params, omega);
    const SparseHermitian folded = fold(h, omega);
    const MeasurementPlan plan = build_plan(folded);

    ShotAllocation alloc;
    if (c.epsilon > 0.0)
        alloc = allocate_shots(plan, c.epsilon);
    else if (c.shots_per_circuit > 0)
        alloc = uniform_shots(plan, c.shots_per_circuit);
    else
        alloc.per_group.assign(plan.groups.size(), 0);

    ConfigEcho echo = base_echo(c, "plan");
    echo.emplace_back("folded_dimension", std::to_string(folded.dim()));
    echo.emplace_back("folded_nonzeros", std::to_string(folded.stored_nonzeros()));
    echo.emplace_back("circuit_count", std::to_string(plan.circuit_count()));
    echo.emplace_back("real_groups", std::to_string(plan.real_group_count()));
    echo.emplace_back("imag_groups", std::to_string(plan.imag_group_count()));
    if (alloc.total > 0) {
        echo.emplace_back("shot_total", std::to_string(alloc.total));
        std::ostringstream bound;
        bound << std::setprecision(17) << alloc.bound;
        echo.emplace_back("shot_bound", bound.str());
    }

    std::filesystem::create_directories(c.out_dir);
    auto os = open_output(std::filesystem::path(c.out_dir) / "plan.csv");
    write_plan_csv(os, plan, alloc, echo);
    std::cout << plan.circuit_count() << " circuits (" << plan.real_group_count() << " real, "
              << plan.imag_group_count() << " imag)";
    if (alloc.total > 0) std::cout << ", " << alloc.total << " shots";
    std::cout << " -> " << c.out_dir << "/plan.csv\n";
    return 0;
}

void write_trace_csv(const std::filesystem::path& path, const VqeRun& run, const ConfigEcho& echo,
                     std::optional<double> ed_min_cost) {
    auto os = open_output(path);
    write_echo_header(os, echo, "#");
    os << "iteration,cost,gradient_norm,shots_used";
    if (ed_min_cost) os << ",ed_min_cost";
    os << '\n' << std::setprecision(17);
    for (const TracePoint& p : run.trace) {
        os << p.iteration << ',' << p.cost << ',' << p.gradient_norm << ',' << p.shots_used;
        if (ed_min_cost) os << ',' << *ed_min_cost;
        os << '\n';
    }
}

int cmd_vqe(const RunConfig& c) {
    const TBParameterSet params = load_parameter_file(c.params_path);
    const SparseHermitian h = build_h(c, params, 0.0);

    const int layers = c.layers > 0 ? c.layers : default_layers(c.dims3(), h.n_qubits());
    const AnsatzCircuit ansatz = AnsatzCircuit::brick_wall(h.n_qubits(), layers);

    OptimizerConfig ocfg;
    ocfg.learning_rate = c.learning_rate;
    ocfg.beta1 = c.beta1;
    ocfg.beta2 = c.beta2;
    ocfg.max_iterations = c.max_iterations;
    ocfg.convergence_window = c.convergence_window;
    ocfg.convergence_band = c.convergence_band;

    WorkflowOptions wopts;
    wopts.seed = c.seed;
    wopts.validate_ed = c.validate_ed;
    if (c.mode == "sampled") {
        wopts.mode = c.sampled_full ? EvalMode::SampledFull : EvalMode::SampledCostOnly;
        wopts.epsilon = c.epsilon;
        wopts.shots_per_circuit = c.shots_per_circuit;
    }

    ConfigEcho echo = base_echo(c, "vqe");
    echo.emplace_back("layers", std::to_string(layers));
    echo.emplace_back("learning_rate", std::to_string(ocfg.learning_rate));
    echo.emplace_back("max_iterations", std::to_string(ocfg.max_iterations));
    echo.emplace_back("convergence_window", std::to_string(ocfg.convergence_window));
    echo.emplace_back("convergence_band", std::to_string(ocfg.convergence_band));

    std::filesystem::create_directories(c.out_dir);
    const std::filesystem::path out(c.out_dir);

    if (const auto fixed = c.fixed_omega()) {
        // Single fold at a fixed reference instead of the two-stage gap run.
        FoldedObjective obj;
        if (wopts.mode == EvalMode::Exact) {
            obj = FoldedObjective::exact(h, *fixed);
        } else {
            FoldedObjective tmp = FoldedObjective::exact(h, *fixed);
            const ShotAllocation alloc = wopts.shots_per_circuit > 0
                                             ? uniform_shots(tmp.plan, wopts.shots_per_circuit)
                                             : allocate_shots(tmp.plan, wopts.epsilon);
            obj = FoldedObjective::sampled(h, *fixed, alloc, c.seed,
                                           wopts.mode == EvalMode::SampledFull);
        }
        std::mt19937_64 rng = substream(c.seed, Stream::Init, 0);
        std::uniform_real_distribution<double> angles(-std::numbers::pi, std::numbers::pi);
        std::vector<double> theta(ansatz.param_count());
        for (double& t : theta) t = angles(rng);
        const VqeRun run = run_vqe(obj, ansatz, ocfg, theta);
        const double energy = resolve_sign(obj, ansatz, run.theta_best, run.cost_best);

        std::optional<double> ed_min;
        if (c.validate_ed) {
            const EigenSystem sys = exact_diagonalize(h);
            double m = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < sys.values.size(); ++i)
                m = std::min(m, (sys.values[i] - *fixed) * (sys.values[i] - *fixed));
            ed_min = m;
        }
        write_trace_csv(out / "trace.csv", run, echo, ed_min);
        auto os = open_output(out / "result.txt");
        write_echo_header(os, echo, "#");
        os << std::setprecision(17) << "converged=" << run.converged << '\n'
           << "iterations=" << run.iterations << '\n'
           << "cost=" << run.cost_best << '\n'
           << "energy=" << energy << '\n'
           << "circuits=" << obj.plan.circuit_count() << '\n'
           << "total_shots=" << run.total_shots << '\n';
        if (ed_min) os << "ed_min_cost=" << *ed_min << '\n';
        std::cout << "energy " << energy << " eV (cost " << run.cost_best << ") -> " << c.out_dir
                  << "\n";
        return 0;
    }

    const BandGapResult r = band_gap_workflow(h, ansatz, ocfg, wopts);

    std::optional<double> ed1, ed2;
    if (c.validate_ed) {
        const EigenSystem sys = exact_diagonalize(h);
        double m1 = std::numeric_limits<double>::infinity();
        double m2 = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
            m1 = std::min(m1, sys.values[i] * sys.values[i]);
            const double d2 = sys.values[i] - r.stage2.omega;
            m2 = std::min(m2, d2 * d2);
        }
        ed1 = m1;
        ed2 = m2;
    }
    write_trace_csv(out / "stage1_trace.csv", r.stage1.run, echo, ed1);
    write_trace_csv(out / "stage2_trace.csv", r.stage2.run, echo, ed2);

    auto os = open_output(out / "result.txt");
    write_echo_header(os, echo, "#");
    os << std::setprecision(17) << "e_vbm=" << r.e_vbm << '\n'
       << "e_cbm=" << r.e_cbm << '\n'
       << "gap=" << r.gap << '\n'
       << "roles_swapped=" << r.roles_swapped << '\n'
       << "near_degenerate=" << r.near_degenerate << '\n';
    for (const auto* stage : {&r.stage1, &r.stage2}) {
        const std::string tag = stage == &r.stage1 ? "stage1" : "stage2";
        os << tag << "_omega=" << stage->omega << '\n'
           << tag << "_energy=" << stage->energy << '\n'
           << tag << "_cost=" << stage->run.cost_best << '\n'
           << tag << "_converged=" << stage->run.converged << '\n'
           << tag << "_iterations=" << stage->run.iterations << '\n'
           << tag << "_circuits=" << stage->circuit_count << '\n'
           << tag << "_shots=" << stage->run.total_shots << '\n';
    }
    if (ed1) os << "stage1_ed_min_cost=" << *ed1 << '\n';
    if (ed2) os << "stage2_ed_min_cost=" << *ed2 << '\n';
    std::cout << std::setprecision(6) << "E_VBM " << r.e_vbm << " eV, E_CBM " << r.e_cbm
              << " eV, gap " << r.gap << " eV -> " << c.out_dir << "\n";
    return 0;
}

int cmd_bench(const RunConfig& c) {
    const TBParameterSet params = load_parameter_file(c.params_path);
    BenchmarkOptions opts;
    opts.spin = c.spin;
    opts.omega = c.fixed_omega().value_or(0.0);
    opts.timeout_s = c.timeout_s;
    opts.sizes.clear();
    std::istringstream sizes(c.sizes);
    std::string token;
    while (std::getline(sizes, token, ',')) {
        std::array<int, 3> d{};
        if (std::sscanf(token.c_str(), "%dx%dx%d", &d[0], &d[1], &d[2]) != 3)
            throw std::invalid_argument("bad size token '" + token + "' (want NxNxN)");
        opts.sizes.push_back(d);
    }
    opts.methods.clear();
    std::istringstream methods(c.methods);
    while (std::getline(methods, token, ',')) {
        if (token == "naive") opts.methods.push_back(GroupingMethod::Naive);
        else if (token == "qwc") opts.methods.push_back(GroupingMethod::Qwc);
        else if (token == "gc") opts.methods.push_back(GroupingMethod::Gc);
        else if (token == "sb") opts.methods.push_back(GroupingMethod::Sb);
        else throw std::invalid_argument("unknown method '" + token + "'");
    }

    const std::vector<GroupingReport> reports = benchmark(opts, params);

    ConfigEcho echo = base_echo(c, "bench");
    echo.emplace_back("sizes", c.sizes);
    echo.emplace_back("methods", c.methods);
    echo.emplace_back("timeout_s", std::to_string(c.timeout_s));

    std::filesystem::create_directories(c.out_dir);
    auto os = open_output(std::filesystem::path(c.out_dir) / "bench.csv");
    write_reports_csv(os, reports, echo);

    bool censored = false;
    for (const GroupingReport& r : reports) {
        std::cout << method_name(r.method) << ' ' << r.dims[0] << 'x' << r.dims[1] << 'x'
                  << r.dims[2] << ": circuits=" << r.circuit_count << " time=" << r.mapping_time_s
                  << "s" << (r.censored ? " (censored)" : "") << "\n";
        censored |= r.censored;
    }
    return censored ? kExitCensored : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Band-gap solver for finite tight-binding supercells with "
                 "standard-basis measurement grouping"};
    app.set_config("--config", "", "Read options from an INI file (flags win)");

    RunConfig cfg;
    app.add_option("--dims", cfg.dims, "Supercell unit-cell counts nx,ny,nz")
        ->delimiter(',')
        ->expected(3);
    app.add_flag("--spin", cfg.spin, "Double the basis for spin-orbit coupling");
    app.add_option("--params", cfg.params_path, "Tight-binding parameter file");
    app.add_option("--mode", cfg.mode, "exact | sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    app.add_option("--epsilon", cfg.epsilon, "Target sampling error (sampled mode)");
    app.add_option("--shots-per-circuit", cfg.shots_per_circuit,
                   "Uniform shots per circuit (sampled mode)");
    app.add_flag("--sampled-full", cfg.sampled_full,
                 "Drive convergence decisions from sampled costs too");
    app.add_option("--layers", cfg.layers, "Ansatz layers (0 = per-size default)");
    app.add_option("--seed", cfg.seed, "Root seed; all substreams derive from it");
    app.add_option("--omega", cfg.omega, "auto (two-stage band gap) or a fixed reference in eV");
    app.add_option("--out", cfg.out_dir, "Output directory");
    app.add_flag("--validate-ed", cfg.validate_ed, "Add exact-diagonalization reference columns");
    app.add_option("--threads", cfg.threads, "Worker thread cap (0 = hardware)");
    app.add_option("--lr", cfg.learning_rate, "ADAM learning rate");
    app.add_option("--beta1", cfg.beta1, "ADAM beta1");
    app.add_option("--beta2", cfg.beta2, "ADAM beta2");
    app.add_option("--max-iters", cfg.max_iterations, "Iteration cap per stage");
    app.add_option("--window", cfg.convergence_window, "Convergence window length");
    app.add_option("--band", cfg.convergence_band, "Convergence band (cost units)");
    app.add_option("--sizes", cfg.sizes, "bench: comma list of NxNxN supercells");
    app.add_option("--methods", cfg.methods, "bench: comma list of naive,qwc,gc,sb");
    app.add_option("--timeout-s", cfg.timeout_s, "bench: per-cell timeout in seconds");

    app.require_subcommand(1);
    CLI::App* build = app.add_subcommand("build", "Assemble and export the Hamiltonian");
    CLI::App* plan = app.add_subcommand("plan", "Export the measurement plan and shot allocation");
    CLI::App* vqe = app.add_subcommand("vqe", "Run the folded-spectrum optimization");
    CLI::App* bench = app.add_subcommand("bench", "Compare grouping methods over a size sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitConfig;
    }

    set_max_threads(cfg.threads);
    try {
        if (cfg.mode == "sampled" && (cfg.epsilon > 0.0) == (cfg.shots_per_circuit > 0))
            throw std::invalid_argument(
                "sampled mode needs exactly one of --epsilon or --shots-per-circuit");
        if (build->parsed()) return cmd_build(cfg);
        if (plan->parsed()) return cmd_plan(cfg);
        if (vqe->parsed()) return cmd_vqe(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
