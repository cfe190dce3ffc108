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

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "tbvqe/sb_plan.hpp"
#include "tbvqe/sparse.hpp"

namespace tbvqe {

// Bit convention: an N-qubit basis index z reads z_1 ... z_N with qubit 1
// as the most significant bit. When a GHZ ancilla is present it is qubit
// 0, the most significant bit of the (N+1)-bit outcome index.

struct Statevector {
    int n_qubits = 0;
    std::vector<cdouble> amps;

    static Statevector zero_state(int n_qubits);
    std::size_t dim() const { return amps.size(); }
    double norm() const;
};

/// Brick-wall circuit of two-qubit blocks; each layer places blocks on
/// the even pairs (0,1),(2,3),... followed by the odd pairs
/// (1,2),(3,4),... (0-based ansatz qubit labels, qubit 0 = most
/// significant), N-1 blocks per layer. Each block consumes 15 angles.
struct AnsatzCircuit {
    struct Block {
        int top_qubit = 0;          // acts on (top_qubit, top_qubit + 1)
        std::size_t param_offset = 0;
    };

    int n_qubits = 0;
    int layers = 0;
    std::vector<Block> blocks;

    std::size_t param_count() const { return blocks.size() * 15; }

    static AnsatzCircuit brick_wall(int n_qubits, int layers);
};

/// Fully parameterized two-qubit unitary
///   U = (C (x) D) * exp(i(a XX + b YY + c ZZ)) * (A (x) B)
/// with A,B,C,D z-y-z Euler rotations (3 angles each) and (a,b,c) the
/// entangler angles, 15 parameters total. All angles zero gives the
/// identity; the map is onto SU(4) up to global phase.
/// Layout: [0..2] A, [3..5] B, [6..8] (a,b,c), [9..11] C, [12..14] D.
Eigen::Matrix4cd su4_block(std::span<const double> theta);

/// U and its 15 partial derivatives.
void su4_block_derivatives(std::span<const double> theta, Eigen::Matrix4cd& u,
                           std::array<Eigen::Matrix4cd, 15>& du);

Statevector apply_ansatz(const AnsatzCircuit& circuit, std::span<const double> theta);

/// <psi| sum of the group's standard-basis operators (+ h.c. for
/// off-diagonal groups) |psi>:
///   x == 0 :  sum_z c_z |psi_z|^2
///   Real   :  sum_z 2 c Re[conj(psi_z) psi_{z^x}]
///   Imag   :  sum_z -2 c Im[conj(psi_z) psi_{z^x}]
double exact_group_expectation(const Statevector& psi, const MeasurementGroup& group);

/// Sum over all groups, accumulated in plan (group-key) order; equals
/// <psi|H|psi> of the decomposed matrix. Groups evaluate in parallel.
double exact_plan_expectation(const Statevector& psi, const MeasurementPlan& plan);

struct GHZOutcomeTally {
    GhzDescriptor descriptor;
    int n_bits = 0;        // N+1 with ancilla, N without
    std::uint64_t shots = 0; // 0 = exact distribution
    std::map<std::uint64_t, std::uint64_t> counts;
    std::vector<double> exact_probs; // filled when shots == 0

    double outcome_fraction(std::uint64_t outcome) const;
};

/// Exact Z-basis outcome distribution of the group's measurement circuit:
/// prepare |G>(x)|psi|>, apply the CNOT fan-out and the closing ancilla
/// Hadamard, then read probabilities (the ancilla-free diagonal circuit
/// just reads |psi|^2).
std::vector<double> ghz_outcome_distribution(const Statevector& psi, const GhzDescriptor& desc);

GHZOutcomeTally sample_tally(const GhzDescriptor& desc, std::span<const double> probs,
                             std::uint64_t shots, std::mt19937_64& rng);

/// Convenience wrapper: exact distribution, then multinomial sampling with
/// a generator seeded from `seed` (shots == 0 returns the exact
/// distribution as the tally).
GHZOutcomeTally simulate_ghz_circuit(const Statevector& psi, const GhzDescriptor& desc,
                                     std::uint64_t shots, std::uint64_t seed);

/// Empirical estimate from one tally; unbiased for
/// exact_group_expectation. Every member of the group is estimated from
/// the same tally.
double sampled_group_expectation(const GHZOutcomeTally& tally, const MeasurementGroup& group);

/// d<psi(theta)|A|psi(theta)>/dtheta by reverse-mode (adjoint) propagation:
/// exact, one backward sweep, no parameter-shift evaluations.
std::vector<double> adjoint_gradient(const AnsatzCircuit& circuit, const CsrMatrix& observable,
                                     std::span<const double> theta);

} // namespace tbvqe
