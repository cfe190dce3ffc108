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

#include "tbvqe/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>

#include <omp.h>

#include "tbvqe/parallel.hpp"

namespace tbvqe::kernels {

namespace {

// Index of the k-th basis state whose `bit` is 0: insert a 0 at `bit`.
inline std::size_t insert_zero_bit(std::size_t k, int bit) {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

inline void single_qubit_pair(cdouble* amps, std::size_t i0, std::size_t i1,
                              const std::array<cdouble, 4>& u) {
    const cdouble a0 = amps[i0];
    const cdouble a1 = amps[i1];
    amps[i0] = u[0] * a0 + u[1] * a1;
    amps[i1] = u[2] * a0 + u[3] * a1;
}

inline void two_qubit_quad(cdouble* amps, std::size_t base, std::size_t hi, std::size_t lo,
                           const std::array<cdouble, 16>& u) {
    const std::size_t i00 = base;
    const std::size_t i01 = base | lo;
    const std::size_t i10 = base | hi;
    const std::size_t i11 = base | hi | lo;
    const cdouble a00 = amps[i00];
    const cdouble a01 = amps[i01];
    const cdouble a10 = amps[i10];
    const cdouble a11 = amps[i11];
    amps[i00] = u[0] * a00 + u[1] * a01 + u[2] * a10 + u[3] * a11;
    amps[i01] = u[4] * a00 + u[5] * a01 + u[6] * a10 + u[7] * a11;
    amps[i10] = u[8] * a00 + u[9] * a01 + u[10] * a10 + u[11] * a11;
    amps[i11] = u[12] * a00 + u[13] * a01 + u[14] * a10 + u[15] * a11;
}

// Base index of the k-th amplitude quadruple for bit positions hi > lo:
// distribute the bits of k around two zero slots.
inline std::size_t quad_base(std::size_t k, int hi_bit, int lo_bit) {
    return insert_zero_bit(insert_zero_bit(k, lo_bit), hi_bit);
}

} // namespace

void apply_single_qubit_serial(cdouble* amps, std::size_t dim, int bit,
                               const std::array<cdouble, 4>& u) {
    const std::size_t half = dim >> 1;
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, bit);
        single_qubit_pair(amps, i0, i0 | mask, u);
    }
}

void apply_single_qubit_omp(cdouble* amps, std::size_t dim, int bit,
                            const std::array<cdouble, 4>& u) {
    const std::size_t half = dim >> 1;
    const std::size_t mask = std::size_t{1} << bit;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, bit);
        single_qubit_pair(amps, i0, i0 | mask, u);
    }
}

void apply_single_qubit(cdouble* amps, std::size_t dim, int bit,
                        const std::array<cdouble, 4>& u) {
    if (use_parallel(dim >> 1))
        apply_single_qubit_omp(amps, dim, bit, u);
    else
        apply_single_qubit_serial(amps, dim, bit, u);
}

void apply_two_qubit_serial(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                            const std::array<cdouble, 16>& u) {
    assert(hi_bit > lo_bit);
    const std::size_t quads = dim >> 2;
    const std::size_t hi = std::size_t{1} << hi_bit;
    const std::size_t lo = std::size_t{1} << lo_bit;
    for (std::size_t k = 0; k < quads; ++k)
        two_qubit_quad(amps, quad_base(k, hi_bit, lo_bit), hi, lo, u);
}

void apply_two_qubit_omp(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                         const std::array<cdouble, 16>& u) {
    assert(hi_bit > lo_bit);
    const std::size_t quads = dim >> 2;
    const std::size_t hi = std::size_t{1} << hi_bit;
    const std::size_t lo = std::size_t{1} << lo_bit;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::size_t k = 0; k < quads; ++k)
        two_qubit_quad(amps, quad_base(k, hi_bit, lo_bit), hi, lo, u);
}

void apply_two_qubit(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                     const std::array<cdouble, 16>& u) {
    if (use_parallel(dim >> 2))
        apply_two_qubit_omp(amps, dim, hi_bit, lo_bit, u);
    else
        apply_two_qubit_serial(amps, dim, hi_bit, lo_bit, u);
}

void apply_cnot_serial(cdouble* amps, std::size_t dim, int control_bit, int target_bit) {
    const std::size_t cmask = std::size_t{1} << control_bit;
    const std::size_t tmask = std::size_t{1} << target_bit;
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
}

void apply_cnot_omp(cdouble* amps, std::size_t dim, int control_bit, int target_bit) {
    const std::size_t cmask = std::size_t{1} << control_bit;
    const std::size_t tmask = std::size_t{1} << target_bit;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
}

void apply_cnot(cdouble* amps, std::size_t dim, int control_bit, int target_bit) {
    if (use_parallel(dim))
        apply_cnot_omp(amps, dim, control_bit, target_bit);
    else
        apply_cnot_serial(amps, dim, control_bit, target_bit);
}

void probabilities_serial(const cdouble* amps, std::size_t dim, double* out) {
    for (std::size_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

void probabilities_omp(const cdouble* amps, std::size_t dim, double* out) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::size_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

void probabilities(const cdouble* amps, std::size_t dim, double* out) {
    if (use_parallel(dim))
        probabilities_omp(amps, dim, out);
    else
        probabilities_serial(amps, dim, out);
}

void csr_matvec_serial(const CsrMatrix& a, const cdouble* x, cdouble* y) {
    for (std::size_t r = 0; r < a.dim; ++r) {
        cdouble acc{};
        for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
            acc += a.vals[k] * x[a.cols[k]];
        y[r] = acc;
    }
}

void csr_matvec_omp(const CsrMatrix& a, const cdouble* x, cdouble* y) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::size_t r = 0; r < a.dim; ++r) {
        cdouble acc{};
        for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
            acc += a.vals[k] * x[a.cols[k]];
        y[r] = acc;
    }
}

void csr_matvec(const CsrMatrix& a, const cdouble* x, cdouble* y) {
    if (use_parallel(a.cols.size()))
        csr_matvec_omp(a, x, y);
    else
        csr_matvec_serial(a, x, y);
}

namespace {

// One Gustavson row: accumulate A[r,:] * A into the dense scratch, then
// harvest touched columns in ascending order so output is schedule-free.
void square_row(const CsrMatrix& a, std::size_t r, std::vector<cdouble>& scratch,
                std::vector<std::uint32_t>& touched, std::vector<std::uint32_t>& cols,
                std::vector<cdouble>& vals) {
    touched.clear();
    for (std::size_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
        const cdouble arv = a.vals[k];
        const std::uint32_t mid = a.cols[k];
        for (std::size_t j = a.row_ptr[mid]; j < a.row_ptr[mid + 1]; ++j) {
            const std::uint32_t c = a.cols[j];
            if (scratch[c] == cdouble{}) touched.push_back(c);
            scratch[c] += arv * a.vals[j];
        }
    }
    std::sort(touched.begin(), touched.end());
    for (const std::uint32_t c : touched) {
        if (scratch[c] != cdouble{}) {
            cols.push_back(c);
            vals.push_back(scratch[c]);
        }
        scratch[c] = cdouble{};
    }
}

} // namespace

CsrMatrix csr_square_serial(const CsrMatrix& a) {
    CsrMatrix c;
    c.dim = a.dim;
    c.row_ptr.assign(a.dim + 1, 0);
    std::vector<cdouble> scratch(a.dim, cdouble{});
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < a.dim; ++r) {
        square_row(a, r, scratch, touched, c.cols, c.vals);
        c.row_ptr[r + 1] = c.cols.size();
    }
    return c;
}

CsrMatrix csr_square_omp(const CsrMatrix& a) {
    CsrMatrix c;
    c.dim = a.dim;
    c.row_ptr.assign(a.dim + 1, 0);
    std::vector<std::vector<std::uint32_t>> row_cols(a.dim);
    std::vector<std::vector<cdouble>> row_vals(a.dim);
#pragma omp parallel num_threads(max_threads())
    {
        std::vector<cdouble> scratch(a.dim, cdouble{});
        std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 16)
        for (std::size_t r = 0; r < a.dim; ++r)
            square_row(a, r, scratch, touched, row_cols[r], row_vals[r]);
    }
    for (std::size_t r = 0; r < a.dim; ++r) {
        c.row_ptr[r + 1] = c.row_ptr[r] + row_cols[r].size();
        c.cols.insert(c.cols.end(), row_cols[r].begin(), row_cols[r].end());
        c.vals.insert(c.vals.end(), row_vals[r].begin(), row_vals[r].end());
    }
    return c;
}

CsrMatrix csr_square(const CsrMatrix& a) {
    if (max_threads() > 1 && a.cols.size() >= (1u << 12)) return csr_square_omp(a);
    return csr_square_serial(a);
}

double quadratic_form(const CsrMatrix& a, const std::vector<cdouble>& x) {
    std::vector<cdouble> y(a.dim);
    csr_matvec(a, x.data(), y.data());
    cdouble acc{};
    for (std::size_t i = 0; i < a.dim; ++i) acc += std::conj(x[i]) * y[i];
    return acc.real();
}

} // namespace tbvqe::kernels
