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

#include "tbvqe/qsim.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "tbvqe/kernels.hpp"
#include "tbvqe/parallel.hpp"
#include "tbvqe/rng.hpp"

namespace tbvqe {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

const cdouble kI{0.0, 1.0};

Matrix2cd rz(double t) {
    Matrix2cd m = Matrix2cd::Zero();
    m(0, 0) = std::exp(-kI * (t / 2));
    m(1, 1) = std::exp(kI * (t / 2));
    return m;
}

Matrix2cd ry(double t) {
    Matrix2cd m;
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

Matrix2cd euler_zyz(double a, double b, double c) { return rz(a) * ry(b) * rz(c); }

Matrix4cd kron2(const Matrix2cd& a, const Matrix2cd& b) {
    Matrix4cd k;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return k;
}

// exp(i t P) = cos(t) I + i sin(t) P for the involutions XX, YY, ZZ.
Matrix4cd pauli_xx() {
    Matrix4cd p = Matrix4cd::Zero();
    p(0, 3) = p(1, 2) = p(2, 1) = p(3, 0) = 1.0;
    return p;
}
Matrix4cd pauli_yy() {
    Matrix4cd p = Matrix4cd::Zero();
    p(0, 3) = p(3, 0) = -1.0;
    p(1, 2) = p(2, 1) = 1.0;
    return p;
}
Matrix4cd pauli_zz() {
    Matrix4cd p = Matrix4cd::Zero();
    p(0, 0) = p(3, 3) = 1.0;
    p(1, 1) = p(2, 2) = -1.0;
    return p;
}

Matrix4cd pauli_exp(const Matrix4cd& p, double t) {
    return std::cos(t) * Matrix4cd::Identity() + kI * std::sin(t) * p;
}

struct BlockFactors {
    Matrix4cd entry;     // A (x) B
    Matrix4cd entangler; // exp(i(a XX + b YY + c ZZ))
    Matrix4cd exit;      // C (x) D
};

BlockFactors block_factors(std::span<const double> t) {
    BlockFactors f;
    f.entry = kron2(euler_zyz(t[0], t[1], t[2]), euler_zyz(t[3], t[4], t[5]));
    f.entangler = pauli_exp(pauli_xx(), t[6]) * pauli_exp(pauli_yy(), t[7]) *
                  pauli_exp(pauli_zz(), t[8]);
    f.exit = kron2(euler_zyz(t[9], t[10], t[11]), euler_zyz(t[12], t[13], t[14]));
    return f;
}

// d(euler_zyz)/d(angle k) for k in {0,1,2}.
Matrix2cd euler_zyz_deriv(double a, double b, double c, int k) {
    const Matrix2cd za = rz(a), yb = ry(b), zc = rz(c);
    Matrix2cd sz = Matrix2cd::Zero();
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    Matrix2cd sy = Matrix2cd::Zero();
    sy(0, 1) = -kI;
    sy(1, 0) = kI;
    switch (k) {
        case 0: return (-kI / 2.0) * sz * za * yb * zc;
        case 1: return za * ((-kI / 2.0) * sy * yb) * zc;
        default: return za * yb * ((-kI / 2.0) * sz * zc);
    }
}

std::array<cdouble, 16> to_array(const Matrix4cd& m) {
    std::array<cdouble, 16> a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[static_cast<std::size_t>(4 * r + c)] = m(r, c);
    return a;
}

void apply_block(Statevector& psi, const AnsatzCircuit::Block& block, const Matrix4cd& u) {
    const int n = psi.n_qubits;
    const int hi_bit = n - 1 - block.top_qubit;
    kernels::apply_two_qubit(psi.amps.data(), psi.dim(), hi_bit, hi_bit - 1, to_array(u));
}

cdouble inner(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace

Statevector Statevector::zero_state(int n_qubits) {
    Statevector psi;
    psi.n_qubits = n_qubits;
    psi.amps.assign(std::size_t{1} << n_qubits, cdouble{});
    psi.amps[0] = 1.0;
    return psi;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const cdouble& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

AnsatzCircuit AnsatzCircuit::brick_wall(int n_qubits, int layers) {
    if (n_qubits < 2) throw std::invalid_argument("brick_wall: need at least two qubits");
    if (layers < 1) throw std::invalid_argument("brick_wall: need at least one layer");
    AnsatzCircuit c;
    c.n_qubits = n_qubits;
    c.layers = layers;
    std::size_t offset = 0;
    for (int layer = 0; layer < layers; ++layer)
        for (const int parity : {0, 1})
            for (int top = parity; top + 1 < n_qubits; top += 2) {
                c.blocks.push_back({top, offset});
                offset += 15;
            }
    return c;
}

Eigen::Matrix4cd su4_block(std::span<const double> theta) {
    if (theta.size() != 15) throw std::invalid_argument("su4_block: expected 15 angles");
    const BlockFactors f = block_factors(theta);
    return f.exit * f.entangler * f.entry;
}

void su4_block_derivatives(std::span<const double> theta, Eigen::Matrix4cd& u,
                           std::array<Eigen::Matrix4cd, 15>& du) {
    if (theta.size() != 15) throw std::invalid_argument("su4_block_derivatives: expected 15 angles");
    const BlockFactors f = block_factors(theta);
    u = f.exit * f.entangler * f.entry;

    const Matrix2cd a = euler_zyz(theta[0], theta[1], theta[2]);
    const Matrix2cd b = euler_zyz(theta[3], theta[4], theta[5]);
    const Matrix2cd c = euler_zyz(theta[9], theta[10], theta[11]);
    const Matrix2cd d = euler_zyz(theta[12], theta[13], theta[14]);

    for (int k = 0; k < 3; ++k) {
        const Matrix2cd da = euler_zyz_deriv(theta[0], theta[1], theta[2], k);
        du[static_cast<std::size_t>(k)] = f.exit * f.entangler * kron2(da, b);
        const Matrix2cd db = euler_zyz_deriv(theta[3], theta[4], theta[5], k);
        du[static_cast<std::size_t>(3 + k)] = f.exit * f.entangler * kron2(a, db);
        const Matrix2cd dc = euler_zyz_deriv(theta[9], theta[10], theta[11], k);
        du[static_cast<std::size_t>(9 + k)] = kron2(dc, d) * f.entangler * f.entry;
        const Matrix2cd dd = euler_zyz_deriv(theta[12], theta[13], theta[14], k);
        du[static_cast<std::size_t>(12 + k)] = kron2(c, dd) * f.entangler * f.entry;
    }
    // The three entangler factors commute; each derivative inserts i*P.
    du[6] = f.exit * (kI * pauli_xx() * f.entangler) * f.entry;
    du[7] = f.exit * (kI * pauli_yy() * f.entangler) * f.entry;
    du[8] = f.exit * (kI * pauli_zz() * f.entangler) * f.entry;
}

Statevector apply_ansatz(const AnsatzCircuit& circuit, std::span<const double> theta) {
    if (theta.size() != circuit.param_count())
        throw std::invalid_argument("apply_ansatz: parameter count mismatch");
    Statevector psi = Statevector::zero_state(circuit.n_qubits);
    for (const AnsatzCircuit::Block& block : circuit.blocks)
        apply_block(psi, block, su4_block(theta.subspan(block.param_offset, 15)));
    return psi;
}

double exact_group_expectation(const Statevector& psi, const MeasurementGroup& group) {
    double acc = 0.0;
    if (group.x == 0) {
        for (const GroupMember& m : group.members) acc += m.coeff * std::norm(psi.amps[m.z]);
        return acc;
    }
    if (group.part == Part::Real) {
        for (const GroupMember& m : group.members)
            acc += 2.0 * m.coeff * (std::conj(psi.amps[m.z]) * psi.amps[m.z ^ group.x]).real();
    } else {
        for (const GroupMember& m : group.members)
            acc -= 2.0 * m.coeff * (std::conj(psi.amps[m.z]) * psi.amps[m.z ^ group.x]).imag();
    }
    return acc;
}

double exact_plan_expectation(const Statevector& psi, const MeasurementPlan& plan) {
    const std::size_t n = plan.groups.size();
    std::vector<double> per_group(n);
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (n > 32)
    for (std::size_t g = 0; g < n; ++g)
        per_group[g] = exact_group_expectation(psi, plan.groups[g]);
    double total = 0.0;
    for (const double v : per_group) total += v; // fixed (plan) order
    return total;
}

std::vector<double> ghz_outcome_distribution(const Statevector& psi, const GhzDescriptor& desc) {
    if (desc.n_qubits != psi.n_qubits)
        throw std::invalid_argument("ghz_outcome_distribution: qubit count mismatch");
    const std::size_t dim = psi.dim();
    if (!desc.use_ancilla) {
        std::vector<double> probs(dim);
        kernels::probabilities(psi.amps.data(), dim, probs.data());
        return probs;
    }

    // |G> (x) |psi> on N+1 qubits, ancilla = bit N.
    const int anc_bit = desc.n_qubits;
    std::vector<cdouble> joint(2 * dim);
    const cdouble g0 = 1.0 / std::sqrt(2.0);
    const cdouble g1 = desc.part == Part::Real ? g0 : kI * g0; // H|0> vs S H|0>
    for (std::size_t z = 0; z < dim; ++z) {
        joint[z] = g0 * psi.amps[z];
        joint[dim + z] = g1 * psi.amps[z];
    }
    for (const int j : desc.cnot_targets())
        kernels::apply_cnot(joint.data(), 2 * dim, anc_bit, desc.n_qubits - j);
    const double h = 1.0 / std::sqrt(2.0);
    kernels::apply_single_qubit(joint.data(), 2 * dim, anc_bit, {h, h, h, -h});

    std::vector<double> probs(2 * dim);
    kernels::probabilities(joint.data(), 2 * dim, probs.data());
    return probs;
}

double GHZOutcomeTally::outcome_fraction(std::uint64_t outcome) const {
    if (shots == 0) return exact_probs[outcome];
    const auto it = counts.find(outcome);
    if (it == counts.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(shots);
}

GHZOutcomeTally sample_tally(const GhzDescriptor& desc, std::span<const double> probs,
                             std::uint64_t shots, std::mt19937_64& rng) {
    GHZOutcomeTally tally;
    tally.descriptor = desc;
    tally.n_bits = desc.n_qubits + (desc.use_ancilla ? 1 : 0);
    tally.shots = shots;
    if (shots == 0) {
        tally.exact_probs.assign(probs.begin(), probs.end());
        return tally;
    }
    const std::vector<std::uint64_t> counts = multinomial_sample(probs, shots, rng);
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k] != 0) tally.counts[k] = counts[k];
    return tally;
}

GHZOutcomeTally simulate_ghz_circuit(const Statevector& psi, const GhzDescriptor& desc,
                                     std::uint64_t shots, std::uint64_t seed) {
    const std::vector<double> probs = ghz_outcome_distribution(psi, desc);
    std::mt19937_64 rng = substream(seed, Stream::Sampling, desc.x,
                                    static_cast<std::uint64_t>(desc.part));
    return sample_tally(desc, probs, shots, rng);
}

double sampled_group_expectation(const GHZOutcomeTally& tally, const MeasurementGroup& group) {
    const GhzDescriptor& desc = tally.descriptor;
    if (desc.x != group.x || desc.part != group.part)
        throw std::invalid_argument("sampled_group_expectation: tally does not match group");
    const std::size_t dim = std::size_t{1} << desc.n_qubits;
    double acc = 0.0;
    if (group.x == 0 && !desc.use_ancilla) {
        for (const GroupMember& m : group.members) acc += m.coeff * tally.outcome_fraction(m.z);
        return acc;
    }
    // p(0z) - p(1z) estimates Re (G = H) or -Im (G = S H) of
    // conj(psi_z) psi_{z^x}; both parts enter the total with weight 2c.
    const double factor = group.x == 0 ? 1.0 : 2.0;
    for (const GroupMember& m : group.members)
        acc += factor * m.coeff *
               (tally.outcome_fraction(m.z) - tally.outcome_fraction(dim + m.z));
    return acc;
}

std::vector<double> adjoint_gradient(const AnsatzCircuit& circuit, const CsrMatrix& observable,
                                     std::span<const double> theta) {
    if (theta.size() != circuit.param_count())
        throw std::invalid_argument("adjoint_gradient: parameter count mismatch");
    if (observable.dim != (std::size_t{1} << circuit.n_qubits))
        throw std::invalid_argument("adjoint_gradient: observable dimension mismatch");

    Statevector phi = apply_ansatz(circuit, theta);
    Statevector lam = phi;
    kernels::csr_matvec(observable, phi.amps.data(), lam.amps.data());

    std::vector<double> grad(theta.size(), 0.0);
    Statevector scratch = phi;
    for (std::size_t k = circuit.blocks.size(); k-- > 0;) {
        const AnsatzCircuit::Block& block = circuit.blocks[k];
        Matrix4cd u;
        std::array<Matrix4cd, 15> du;
        su4_block_derivatives(theta.subspan(block.param_offset, 15), u, du);
        const Matrix4cd u_dag = u.adjoint();

        // phi becomes the state before this block; lam keeps later blocks
        // unapplied, so <lam|dU|phi> is the parameter's response.
        apply_block(phi, block, u_dag);
        for (int p = 0; p < 15; ++p) {
            scratch.amps = phi.amps;
            apply_block(scratch, block, du[static_cast<std::size_t>(p)]);
            grad[block.param_offset + static_cast<std::size_t>(p)] =
                2.0 * inner(lam.amps, scratch.amps).real();
        }
        apply_block(lam, block, u_dag);
    }
    return grad;
}

} // namespace tbvqe
