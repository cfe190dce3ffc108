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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "support/oracles.hpp"
#include "tbvqe/kernels.hpp"
#include "tbvqe/qsim.hpp"
#include "tbvqe/rng.hpp"

using namespace tbvqe;

namespace {

std::vector<double> random_angles(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(-std::numbers::pi, std::numbers::pi);
    std::vector<double> t(n);
    for (double& x : t) x = a(rng);
    return t;
}

Statevector state_from(std::vector<cdouble> amps) {
    Statevector psi;
    psi.amps = std::move(amps);
    psi.n_qubits = 0;
    while ((std::size_t{1} << psi.n_qubits) < psi.amps.size()) ++psi.n_qubits;
    return psi;
}

} // namespace

TEST_CASE("su4_block basics") {
    SUBCASE("zero angles give the identity") {
        const std::vector<double> zeros(15, 0.0);
        CHECK((su4_block(zeros) - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("random angles give a unitary") {
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 50; ++trial) {
            const auto theta = random_angles(15, rng);
            const Eigen::Matrix4cd u = su4_block(theta);
            CHECK((u * u.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("su4_block parameter coverage") {
    std::mt19937_64 rng(3);
    SUBCASE("the map is maximal: rank-15 Jacobian at random points") {
        // Numerical Jacobian of vec(U) over the 15 angles; full rank means
        // no redundant parameter directions (15 = dim SU(4)).
        for (int trial = 0; trial < 3; ++trial) {
            const auto theta = random_angles(15, rng);
            Eigen::MatrixXd jac(32, 15);
            const double step = 1e-6;
            for (int p = 0; p < 15; ++p) {
                auto hi = theta, lo = theta;
                hi[static_cast<std::size_t>(p)] += step;
                lo[static_cast<std::size_t>(p)] -= step;
                const Eigen::Matrix4cd d = (su4_block(hi) - su4_block(lo)) / (2 * step);
                for (int k = 0; k < 16; ++k) {
                    jac(2 * k, p) = d(k / 4, k % 4).real();
                    jac(2 * k + 1, p) = d(k / 4, k % 4).imag();
                }
            }
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
            CHECK(svd.singularValues()(14) > 1e-6);
        }
    }
    SUBCASE("10^4 samples are pairwise-distinct and span the operator space") {
        constexpr int kSamples = 10000;
        std::vector<Eigen::Matrix4cd> sample;
        sample.reserve(64);
        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(16, 16);
        Eigen::Matrix4cd prev = Eigen::Matrix4cd::Zero();
        double min_dist = 1e300;
        for (int s = 0; s < kSamples; ++s) {
            const Eigen::Matrix4cd u = su4_block(random_angles(15, rng));
            if (s > 0) min_dist = std::min(min_dist, (u - prev).norm());
            prev = u;
            const Eigen::Map<const Eigen::VectorXcd> v(u.data(), 16);
            gram += v * v.adjoint();
        }
        CHECK(min_dist > 1e-6); // consecutive draws are Hilbert-Schmidt distinct
        // Full-rank second moment: the sampled unitaries span all of M4(C).
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram / kSamples);
        CHECK(es.eigenvalues().minCoeff() > 1e-3);
    }
}

TEST_CASE("brick-wall ansatz layout") {
    const AnsatzCircuit c = AnsatzCircuit::brick_wall(6, 4);
    CHECK(c.blocks.size() == 20); // (3 even + 2 odd) pairs x 4 layers
    CHECK(c.param_count() == 300);
    CHECK(c.blocks[0].top_qubit == 0);
    CHECK(c.blocks[1].top_qubit == 2);
    CHECK(c.blocks[2].top_qubit == 4);
    CHECK(c.blocks[3].top_qubit == 1);
    CHECK(c.blocks[4].top_qubit == 3);
    CHECK_THROWS_AS(AnsatzCircuit::brick_wall(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(AnsatzCircuit::brick_wall(4, 0), std::invalid_argument);
}

TEST_CASE("apply_ansatz") {
    SUBCASE("zero angles keep the reference state") {
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(4, 2);
        const std::vector<double> zeros(c.param_count(), 0.0);
        const Statevector psi = apply_ansatz(c, zeros);
        CHECK(std::abs(psi.amps[0] - cdouble{1.0, 0.0}) < 1e-14);
        for (std::size_t k = 1; k < psi.dim(); ++k) CHECK(std::abs(psi.amps[k]) < 1e-14);
    }
    SUBCASE("norm is preserved") {
        std::mt19937_64 rng(5);
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(5, 3);
        for (int trial = 0; trial < 10; ++trial) {
            const Statevector psi = apply_ansatz(c, random_angles(c.param_count(), rng));
            CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        }
    }
    SUBCASE("matches the dense unitary composition at N=4, L=2") {
        std::mt19937_64 rng(6);
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(4, 2);
        const auto theta = random_angles(c.param_count(), rng);
        const Statevector psi = apply_ansatz(c, theta);
        const Eigen::MatrixXcd u = oracles::dense_ansatz_unitary(c, theta);
        for (std::size_t k = 0; k < psi.dim(); ++k)
            CHECK(std::abs(psi.amps[k] - u(static_cast<Eigen::Index>(k), 0)) < 1e-12);
    }
    SUBCASE("arity mismatch is rejected") {
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(4, 2);
        const std::vector<double> wrong(c.param_count() - 1, 0.0);
        CHECK_THROWS_AS(apply_ansatz(c, wrong), std::invalid_argument);
    }
}

TEST_CASE("exact_group_expectation") {
    SUBCASE("projective expectation on a basis state") {
        Statevector psi = Statevector::zero_state(3);
        psi.amps[0] = 0.0;
        psi.amps[5] = 1.0;
        MeasurementGroup g{0, Part::Real, {{5, 0.7}, {2, 100.0}}};
        CHECK(exact_group_expectation(psi, g) == doctest::Approx(0.7));
    }
    SUBCASE("equal superposition saturates one off-diagonal term") {
        const double inv = 1.0 / std::sqrt(2.0);
        Statevector psi = state_from({inv, 0.0, 0.0, inv});
        MeasurementGroup g{0b11, Part::Real, {{0, 0.9}}};
        CHECK(exact_group_expectation(psi, g) == doctest::Approx(0.9));
    }
    SUBCASE("plan total equals the dense quadratic form") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 5; ++trial) {
            const SparseHermitian h = oracles::random_sparse_hermitian(64, 150, rng);
            const MeasurementPlan plan = build_plan(h);
            const auto amps = oracles::random_state(64, rng);
            const Statevector psi = state_from(amps);
            const double via_plan = exact_plan_expectation(psi, plan);
            const double dense = oracles::dense_quadratic_form(oracles::dense_of(h), amps);
            CHECK(via_plan == doctest::Approx(dense).epsilon(1e-10));
        }
    }
}

TEST_CASE("three-qubit GHZ measurement projects outcome 010 onto (|010>+|101>)/sqrt2") {
    // Apply the measurement transform to each basis vector and read the
    // projector column by column.
    const int n = 3;
    const std::size_t dim = 8;
    const std::uint64_t x = 0b011; // targets {2,3}, control qubit 0 of the 3
    Eigen::MatrixXcd u_ghz(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cdouble> amps(dim, cdouble{});
        amps[col] = 1.0;
        // control = bit 2 (qubit 0 = most significant of three)
        kernels::apply_cnot_serial(amps.data(), dim, 2, 1);
        kernels::apply_cnot_serial(amps.data(), dim, 2, 0);
        const double h = 1.0 / std::sqrt(2.0);
        kernels::apply_single_qubit_serial(amps.data(), dim, 2, {h, h, h, -h});
        for (std::size_t row = 0; row < dim; ++row)
            u_ghz(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[row];
    }
    // U_GHZ^dagger |010><010| U_GHZ
    Eigen::VectorXcd e010 = Eigen::VectorXcd::Zero(dim);
    e010(0b010) = 1.0;
    const Eigen::MatrixXcd proj = u_ghz.adjoint() * e010 * e010.adjoint() * u_ghz;
    Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(dim);
    plus(0b010) = 1.0;
    plus(0b101) = 1.0;
    const Eigen::MatrixXcd expected = 0.5 * plus * plus.adjoint();
    CHECK((proj - expected).cwiseAbs().maxCoeff() < 1e-12);
    (void)x;
    (void)n;
}

TEST_CASE("probability differences reproduce the amplitude products") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 5; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        const Statevector psi = state_from(oracles::random_state(dim, rng));
        for (std::uint64_t x = 0; x < dim; ++x) {
            for (const Part part : {Part::Real, Part::Imag}) {
                const GhzDescriptor desc{n, x, part, true};
                const auto probs = ghz_outcome_distribution(psi, desc);
                for (std::uint64_t z = 0; z < dim; ++z) {
                    const cdouble w = std::conj(psi.amps[z]) * psi.amps[z ^ x];
                    const double expected = part == Part::Real ? w.real() : -w.imag();
                    CHECK(std::abs(probs[z] - probs[dim + z] - expected) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("reference state gives vanishing probability differences for x != 0") {
    const int n = 4;
    const std::size_t dim = 16;
    const Statevector psi = Statevector::zero_state(n);
    for (const std::uint64_t x : {0b0001ull, 0b0110ull, 0b1111ull}) {
        const GhzDescriptor desc{n, x, Part::Real, true};
        const auto probs = ghz_outcome_distribution(psi, desc);
        for (std::uint64_t z = 0; z < dim; ++z) {
            if (z == 0 || z == x) continue;
            CHECK(probs[z] - probs[dim + z] == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("sampled_group_expectation") {
    std::mt19937_64 rng(17);
    const SparseHermitian h = oracles::random_sparse_hermitian(16, 40, rng);
    const MeasurementPlan plan = build_plan(h);
    const Statevector psi = state_from(oracles::random_state(16, rng));

    SUBCASE("exact-distribution tallies reproduce the exact expectation") {
        for (const MeasurementGroup& g : plan.groups) {
            const GhzDescriptor desc = ghz_descriptor(g, plan.n_qubits);
            const GHZOutcomeTally tally = simulate_ghz_circuit(psi, desc, 0, 99);
            CHECK(sampled_group_expectation(tally, g) ==
                  doctest::Approx(exact_group_expectation(psi, g)).epsilon(1e-12));
        }
    }
    SUBCASE("estimates are unbiased over many seeded tallies") {
        const MeasurementGroup& g = plan.groups.size() > 1 ? plan.groups[1] : plan.groups[0];
        const GhzDescriptor desc = ghz_descriptor(g, plan.n_qubits);
        const auto probs = ghz_outcome_distribution(psi, desc);
        const double exact = exact_group_expectation(psi, g);
        constexpr int kTallies = 10000;
        constexpr std::uint64_t kShots = 64;
        double mean = 0.0, m2 = 0.0;
        std::mt19937_64 sampler = substream(4242, Stream::Sampling);
        for (int t = 0; t < kTallies; ++t) {
            const GHZOutcomeTally tally = sample_tally(desc, probs, kShots, sampler);
            const double est = sampled_group_expectation(tally, g);
            const double delta = est - mean;
            mean += delta / (t + 1);
            m2 += delta * (est - mean);
        }
        const double stderr_mean = std::sqrt(m2 / (kTallies - 1) / kTallies);
        CHECK(std::abs(mean - exact) <= 3.0 * std::max(stderr_mean, 1e-12));
    }
    SUBCASE("deterministic outcome on an eigenstate of the diagonal group") {
        Statevector basis = Statevector::zero_state(4);
        basis.amps[0] = 0.0;
        basis.amps[7] = 1.0;
        MeasurementGroup g{0, Part::Real, {{7, 0.3}}};
        const GhzDescriptor desc = ghz_descriptor(g, 4);
        for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const GHZOutcomeTally tally = simulate_ghz_circuit(basis, desc, 500, seed);
            CHECK(sampled_group_expectation(tally, g) == doctest::Approx(0.3));
        }
    }
    SUBCASE("tally/group mismatch is rejected") {
        const MeasurementGroup& g = plan.groups[0];
        const GhzDescriptor desc = ghz_descriptor(g, plan.n_qubits);
        const GHZOutcomeTally tally = simulate_ghz_circuit(psi, desc, 10, 5);
        MeasurementGroup other{g.x ^ 1, Part::Real, {{0, 1.0}}};
        CHECK_THROWS_AS(sampled_group_expectation(tally, other), std::invalid_argument);
    }
}

TEST_CASE("sampled plan estimates stay inside the 2-epsilon band") {
    // Calibration of the allocation bound on a random 6-qubit operator.
    std::mt19937_64 rng(21);
    const SparseHermitian h = oracles::random_sparse_hermitian(64, 200, rng);
    const MeasurementPlan plan = build_plan(h);
    const double epsilon = 0.05 * plan.groups.front().max_abs_coeff() + 0.05;
    const ShotAllocation alloc = allocate_shots(plan, epsilon);
    const Statevector psi = state_from(oracles::random_state(64, rng));
    const double exact = exact_plan_expectation(psi, plan);

    // Distributions are fixed; only the sampling repeats per trial.
    std::vector<std::vector<double>> probs;
    std::vector<GhzDescriptor> descs;
    for (const MeasurementGroup& g : plan.groups) {
        descs.push_back(ghz_descriptor(g, plan.n_qubits));
        probs.push_back(ghz_outcome_distribution(psi, descs.back()));
    }
    constexpr int kTrials = 200;
    int inside = 0;
    for (int trial = 0; trial < kTrials; ++trial) {
        std::mt19937_64 sampler = substream(1000, Stream::Sampling, static_cast<std::uint64_t>(trial));
        double total = 0.0;
        for (std::size_t g = 0; g < plan.groups.size(); ++g) {
            const GHZOutcomeTally tally =
                sample_tally(descs[g], probs[g], alloc.per_group[g], sampler);
            total += sampled_group_expectation(tally, plan.groups[g]);
        }
        if (std::abs(total - exact) <= 2.0 * epsilon) ++inside;
    }
    CHECK(inside >= 186); // 93% of 200
}

TEST_CASE("gradients") {
    SUBCASE("constant objective has zero gradient") {
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(3, 2);
        SparseBuilder b(8);
        for (std::size_t k = 0; k < 8; ++k) b.add(k, k, 2.5);
        const CsrMatrix obs = to_full_csr(pad_to_power_of_two(b, 0.0));
        std::mt19937_64 rng(31);
        const auto theta = random_angles(c.param_count(), rng);
        for (const double g : adjoint_gradient(c, obs, theta)) CHECK(std::abs(g) < 1e-12);
    }
    SUBCASE("single-rotation response follows the closed form") {
        // theta[1] is a y rotation on the first wire; with Z (x) I the cost
        // is cos(theta) and the derivative -sin(theta).
        AnsatzCircuit c;
        c.n_qubits = 2;
        c.layers = 1;
        c.blocks.push_back({0, 0});
        SparseBuilder b(4);
        b.add(0, 0, 1.0);
        b.add(1, 1, 1.0);
        b.add(2, 2, -1.0);
        b.add(3, 3, -1.0);
        const CsrMatrix z0 = to_full_csr(pad_to_power_of_two(b, 0.0));
        for (const double angle : {-2.0, -0.4, 0.0, 0.3, 1.7}) {
            std::vector<double> theta(15, 0.0);
            theta[1] = angle;
            const auto grad = adjoint_gradient(c, z0, theta);
            CHECK(grad[1] == doctest::Approx(-std::sin(angle)).epsilon(1e-10));
        }
    }
    SUBCASE("adjoint matches central finite differences on a 6-qubit objective") {
        std::mt19937_64 rng(37);
        const SparseHermitian h = oracles::random_sparse_hermitian(64, 150, rng);
        const CsrMatrix obs = to_full_csr(h);
        const MeasurementPlan plan = build_plan(h);
        const AnsatzCircuit c = AnsatzCircuit::brick_wall(6, 2);
        const auto theta = random_angles(c.param_count(), rng);
        const auto adjoint = adjoint_gradient(c, obs, theta);
        // Finite differences run through the measurement-plan cost, so the
        // two routes share no evaluation path.
        const auto fd = oracles::finite_difference_gradient(
            [&](const std::vector<double>& t) {
                return exact_plan_expectation(apply_ansatz(c, t), plan);
            },
            theta);
        for (std::size_t i = 0; i < adjoint.size(); ++i)
            CHECK(std::abs(adjoint[i] - fd[i]) < 1e-6);
    }
}

TEST_CASE("norm drift through deep circuits stays tiny") {
    std::mt19937_64 rng(41);
    const AnsatzCircuit c = AnsatzCircuit::brick_wall(6, 8);
    const Statevector psi = apply_ansatz(c, random_angles(c.param_count(), rng));
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}
