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

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace tbvqe {

using cdouble = std::complex<double>;

struct SparseEntry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    cdouble value{};
};

/// Hermitian matrix of dimension 2^N stored as its upper triangle
/// (row <= col, sorted by (row, col), no zeros, no duplicates, real
/// diagonal). The implied full matrix is the stored triangle plus the
/// conjugate transpose of its strict part, so Hermiticity is structural.
class SparseHermitian {
  public:
    SparseHermitian() = default;

    /// Validates and takes ownership of upper-triangle entries for a
    /// power-of-two dimension. Throws std::invalid_argument on any
    /// violated storage invariant.
    static SparseHermitian from_upper(std::size_t dim, std::vector<SparseEntry> entries);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }
    const std::vector<SparseEntry>& entries() const { return entries_; }

    std::size_t stored_nonzeros() const { return entries_.size(); }
    /// Nonzero count of the implied full matrix (strict upper counted twice).
    std::size_t full_nonzeros() const;

  private:
    int n_qubits_ = 0;
    std::size_t dim_ = 1;
    std::vector<SparseEntry> entries_;
};

/// Order-preserving accumulator for matrix assembly. Entries may arrive in
/// any order and are merged per coordinate; the dimension is arbitrary
/// (padding to a power of two happens later).
class SparseBuilder {
  public:
    explicit SparseBuilder(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }

    /// Accumulates into (row, col). Only upper-triangle coordinates are
    /// accepted; the conjugate mirror is implied.
    void add(std::size_t row, std::size_t col, cdouble value);

    /// Sorted upper-triangle entries with exact zeros dropped and diagonal
    /// imaginary parts (which cancel by construction) cleared.
    std::vector<SparseEntry> finish() const;

  private:
    std::size_t dim_;
    std::map<std::uint64_t, cdouble> accum_;
};

/// Full (both triangles) compressed-sparse-row view used by the matvec
/// and product kernels.
struct CsrMatrix {
    std::size_t dim = 0;
    std::vector<std::size_t> row_ptr;
    std::vector<std::uint32_t> cols;
    std::vector<cdouble> vals;
};

CsrMatrix to_full_csr(const SparseHermitian& m);

} // namespace tbvqe
