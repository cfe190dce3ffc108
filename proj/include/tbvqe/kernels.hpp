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
#include <complex>
#include <cstddef>
#include <vector>

#include "tbvqe/sparse.hpp"

// Data-parallel inner loops. Every kernel comes in a serial reference
// version and an OpenMP version with identical results (the parallel
// variants keep each output element's summation order fixed); the
// unsuffixed entry point dispatches on problem size and the configured
// thread cap. bench_kernels compares the two implementations.
namespace tbvqe::kernels {

// 2x2 matrix in row-major order acting on qubit bit position `bit`
// (bit 0 = least significant address bit).
void apply_single_qubit_serial(cdouble* amps, std::size_t dim, int bit,
                               const std::array<cdouble, 4>& u);
void apply_single_qubit_omp(cdouble* amps, std::size_t dim, int bit,
                            const std::array<cdouble, 4>& u);
void apply_single_qubit(cdouble* amps, std::size_t dim, int bit,
                        const std::array<cdouble, 4>& u);

// 4x4 matrix in row-major order on bit positions (hi, lo); basis order of
// the block is |hi lo> in {00,01,10,11}. The matrix need not be unitary
// (gradient propagation applies non-unitary generators).
void apply_two_qubit_serial(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                            const std::array<cdouble, 16>& u);
void apply_two_qubit_omp(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                         const std::array<cdouble, 16>& u);
void apply_two_qubit(cdouble* amps, std::size_t dim, int hi_bit, int lo_bit,
                     const std::array<cdouble, 16>& u);

// CNOT with control/target given as bit positions.
void apply_cnot_serial(cdouble* amps, std::size_t dim, int control_bit, int target_bit);
void apply_cnot_omp(cdouble* amps, std::size_t dim, int control_bit, int target_bit);
void apply_cnot(cdouble* amps, std::size_t dim, int control_bit, int target_bit);

// out[i] = |amps[i]|^2
void probabilities_serial(const cdouble* amps, std::size_t dim, double* out);
void probabilities_omp(const cdouble* amps, std::size_t dim, double* out);
void probabilities(const cdouble* amps, std::size_t dim, double* out);

// y = A x for the full CSR view. Row-parallel; each row accumulates in
// column order, so results do not depend on the thread count.
void csr_matvec_serial(const CsrMatrix& a, const cdouble* x, cdouble* y);
void csr_matvec_omp(const CsrMatrix& a, const cdouble* x, cdouble* y);
void csr_matvec(const CsrMatrix& a, const cdouble* x, cdouble* y);

// C = A * A (Gustavson, dense per-row accumulator). Row-parallel with a
// fixed per-row accumulation order.
CsrMatrix csr_square_serial(const CsrMatrix& a);
CsrMatrix csr_square_omp(const CsrMatrix& a);
CsrMatrix csr_square(const CsrMatrix& a);

// <x|A|x>, real for Hermitian A.
double quadratic_form(const CsrMatrix& a, const std::vector<cdouble>& x);

} // namespace tbvqe::kernels
