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

// Times the serial reference implementations against their OpenMP
// counterparts and cross-checks that both produce the same numbers.
// Usage: bench_kernels [n_qubits] [repeats]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#include <omp.h>

#include "tbvqe/kernels.hpp"
#include "tbvqe/parallel.hpp"
#include "tbvqe/sparse.hpp"

using namespace tbvqe;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_best_of(F&& fn, int repeats) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

std::vector<cdouble> random_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cdouble> v(dim);
    double norm = 0.0;
    for (cdouble& a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (cdouble& a : v) a /= norm;
    return v;
}

double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void report(const std::string& name, double serial_s, double omp_s, double diff) {
    std::cout << std::left << std::setw(18) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(10) << serial_s * 1e3 << " ms" << std::setw(10)
              << omp_s * 1e3 << " ms" << std::setw(8) << std::setprecision(2) << serial_s / omp_s
              << "x   max|diff| " << std::scientific << std::setprecision(1) << diff << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const int n_qubits = argc > 1 ? std::atoi(argv[1]) : 20;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const std::size_t dim = std::size_t{1} << n_qubits;

    std::cout << "kernel benchmark: " << n_qubits << " qubits (dim " << dim << "), "
              << omp_get_max_threads() << " threads, best of " << repeats << "\n";
    std::cout << std::left << std::setw(18) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "openmp" << std::setw(9) << "speedup" << "\n";

    std::mt19937_64 rng(12345);
    const std::vector<cdouble> psi = random_state(dim, rng);

    std::array<cdouble, 16> u{};
    std::normal_distribution<double> g;
    for (cdouble& x : u) x = {g(rng), g(rng)};
    std::array<cdouble, 4> u1{};
    for (cdouble& x : u1) x = {g(rng), g(rng)};

    {
        std::vector<cdouble> a = psi, b = psi;
        const double ts = time_best_of(
            [&] { kernels::apply_two_qubit_serial(a.data(), dim, n_qubits - 1, n_qubits / 2, u); },
            repeats);
        const double tp = time_best_of(
            [&] { kernels::apply_two_qubit_omp(b.data(), dim, n_qubits - 1, n_qubits / 2, u); },
            repeats);
        report("two_qubit", ts, tp, max_abs_diff(a, b));
    }
    {
        std::vector<cdouble> a = psi, b = psi;
        const double ts = time_best_of(
            [&] { kernels::apply_single_qubit_serial(a.data(), dim, n_qubits / 2, u1); }, repeats);
        const double tp = time_best_of(
            [&] { kernels::apply_single_qubit_omp(b.data(), dim, n_qubits / 2, u1); }, repeats);
        report("single_qubit", ts, tp, max_abs_diff(a, b));
    }
    {
        std::vector<cdouble> a = psi, b = psi;
        const double ts = time_best_of(
            [&] { kernels::apply_cnot_serial(a.data(), dim, n_qubits - 1, 0); }, repeats);
        const double tp =
            time_best_of([&] { kernels::apply_cnot_omp(b.data(), dim, n_qubits - 1, 0); }, repeats);
        report("cnot", ts, tp, max_abs_diff(a, b));
    }
    {
        std::vector<double> pa(dim), pb(dim);
        const double ts =
            time_best_of([&] { kernels::probabilities_serial(psi.data(), dim, pa.data()); }, repeats);
        const double tp =
            time_best_of([&] { kernels::probabilities_omp(psi.data(), dim, pb.data()); }, repeats);
        double diff = 0.0;
        for (std::size_t i = 0; i < dim; ++i) diff = std::max(diff, std::abs(pa[i] - pb[i]));
        report("probabilities", ts, tp, diff);
    }

    // Sparse kernels run on a banded Hermitian test matrix at a smaller
    // dimension so the product stays in memory.
    const std::size_t sdim = std::size_t{1} << std::min(n_qubits, 12);
    std::vector<SparseEntry> entries;
    for (std::size_t r = 0; r < sdim; ++r) {
        entries.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r),
                           cdouble{static_cast<double>(r % 7) - 3.0, 0.0}});
        for (const std::size_t off : {1ul, 17ul, 64ul})
            if (r + off < sdim)
                entries.push_back({static_cast<std::uint32_t>(r),
                                   static_cast<std::uint32_t>(r + off), cdouble{0.5, 0.25}});
    }
    const SparseHermitian sm = SparseHermitian::from_upper(sdim, std::move(entries));
    const CsrMatrix csr = to_full_csr(sm);
    const std::vector<cdouble> x = random_state(sdim, rng);
    {
        std::vector<cdouble> ya(sdim), yb(sdim);
        const double ts =
            time_best_of([&] { kernels::csr_matvec_serial(csr, x.data(), ya.data()); }, repeats);
        const double tp =
            time_best_of([&] { kernels::csr_matvec_omp(csr, x.data(), yb.data()); }, repeats);
        report("csr_matvec", ts, tp, max_abs_diff(ya, yb));
    }
    {
        CsrMatrix ca, cb;
        const double ts = time_best_of([&] { ca = kernels::csr_square_serial(csr); }, repeats);
        const double tp = time_best_of([&] { cb = kernels::csr_square_omp(csr); }, repeats);
        double diff = ca.cols == cb.cols && ca.row_ptr == cb.row_ptr ? max_abs_diff(ca.vals, cb.vals)
                                                                     : std::nan("");
        report("csr_square", ts, tp, diff);
    }
    return 0;
}
