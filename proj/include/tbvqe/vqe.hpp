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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tbvqe/qsim.hpp"
#include "tbvqe/sb_plan.hpp"
#include "tbvqe/sparse.hpp"

namespace tbvqe {

/// Thrown when an optimization step produces a non-finite cost.
struct NumericalAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EvalMode {
    Exact,
    // Parameters follow the exact-gradient trajectory; sampling noise is
    // injected into the reported cost only, and convergence is decided on
    // the noise-free values.
    SampledCostOnly,
    // Convergence is also decided on the sampled costs (gradients stay
    // exact; no stochastic-gradient protocol is provided).
    SampledFull,
};

/// Interior-eigenvalue objective <psi|(H - omega I)^2|psi> evaluated
/// through the measurement plan of the folded operator; the plan of H
/// itself serves sign recovery.
struct FoldedObjective {
    double omega = 0.0;
    SparseHermitian folded;
    CsrMatrix folded_csr; // gradient / oracle path
    MeasurementPlan plan; // folded operator
    SparseHermitian h;
    MeasurementPlan h_plan;
    EvalMode mode = EvalMode::Exact;
    ShotAllocation allocation; // sampled modes
    std::uint64_t sampling_seed = 0;

    static FoldedObjective exact(const SparseHermitian& h, double omega);
    static FoldedObjective sampled(const SparseHermitian& h, double omega,
                                   const ShotAllocation& allocation, std::uint64_t sampling_seed,
                                   bool full = false);
};

struct OptimizerConfig {
    // Rate 0.05 clears the shallow saddles of folded objectives that stall
    // the textbook 0.01 default; the window is sized so slow traverses do
    // not read as plateaus.
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps_adam = 1e-8;
    int max_iterations = 20000;
    int convergence_window = 100;
    double convergence_band = 1.5e-2;
};

struct TracePoint {
    int iteration = 0;
    double cost = 0.0;
    double gradient_norm = 0.0;
    std::uint64_t shots_used = 0;
};

struct VqeRun {
    std::vector<double> theta_best;
    std::vector<double> theta_final;
    double cost_best = 0.0; // noise-free cost at theta_best
    bool converged = false;
    int iterations = 0;
    std::uint64_t total_shots = 0;
    std::vector<TracePoint> trace;
};

/// Noise-free plan cost at theta (always >= 0 up to roundoff).
double evaluate_cost(const FoldedObjective& obj, const AnsatzCircuit& ansatz,
                     std::span<const double> theta);

/// One sampled estimate of the cost; `trial` seeds the substream so
/// repeated evaluations are independent but reproducible.
double sampled_cost(const FoldedObjective& obj, const AnsatzCircuit& ansatz,
                    std::span<const double> theta, std::uint64_t trial);

/// ADAM on the adjoint gradient; stops when the last convergence_window
/// costs stay within convergence_band of each other, or at
/// max_iterations. Throws NumericalAbort on a non-finite cost.
VqeRun run_vqe(const FoldedObjective& obj, const AnsatzCircuit& ansatz,
               const OptimizerConfig& config, std::span<const double> theta_init);

/// Signed eigenvalue estimate nearest omega:
/// omega + sign(<psi|H|psi> - omega) * sqrt(cost). Negative sampled costs
/// clamp to zero.
double resolve_sign(const FoldedObjective& obj, const AnsatzCircuit& ansatz,
                    std::span<const double> theta, double cost);

struct StageResult {
    double omega = 0.0;
    double energy = 0.0;
    VqeRun run;
    std::size_t circuit_count = 0;
};

struct BandGapResult {
    double e_vbm = 0.0;
    double e_cbm = 0.0;
    double gap = 0.0;
    bool roles_swapped = false; // stage 1 landed on the conduction side
    bool near_degenerate = false; // only meaningful with ED validation
    StageResult stage1;
    StageResult stage2;
};

struct WorkflowOptions {
    EvalMode mode = EvalMode::Exact;
    double epsilon = 0.0;                 // sampled-by-epsilon when > 0
    std::uint64_t shots_per_circuit = 0;  // sampled-uniform when > 0
    std::uint64_t seed = 1;
    bool validate_ed = false;             // flags near-degenerate targets
};

/// Stage 1 folds at omega = 0 and recovers the band edge nearest zero
/// (the valence-band maximum when the spectrum is as expected); stage 2
/// folds at the mirrored energy to recover the opposite edge.
BandGapResult band_gap_workflow(const SparseHermitian& h, const AnsatzCircuit& ansatz,
                                const OptimizerConfig& config, const WorkflowOptions& opts);

/// Empirical layer-count defaults per supercell size; other sizes fall
/// back to the qubit count.
int default_layers(std::array<int, 3> dims, int n_qubits);

} // namespace tbvqe
