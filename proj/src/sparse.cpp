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

#include "tbvqe/sparse.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tbvqe {

SparseHermitian SparseHermitian::from_upper(std::size_t dim, std::vector<SparseEntry> entries) {
    if (dim == 0 || !std::has_single_bit(dim))
        throw std::invalid_argument("SparseHermitian: dimension must be a power of two");
    std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const SparseEntry& e = entries[i];
        if (e.row > e.col)
            throw std::invalid_argument("SparseHermitian: entry below the diagonal");
        if (e.col >= dim)
            throw std::invalid_argument("SparseHermitian: entry out of range");
        if (e.value == cdouble{})
            throw std::invalid_argument("SparseHermitian: explicit zero entry");
        if (e.row == e.col && e.value.imag() != 0.0)
            throw std::invalid_argument("SparseHermitian: complex diagonal entry");
        if (i > 0 && entries[i - 1].row == e.row && entries[i - 1].col == e.col)
            throw std::invalid_argument("SparseHermitian: duplicate entry");
    }
    SparseHermitian m;
    m.dim_ = dim;
    m.n_qubits_ = std::countr_zero(dim);
    m.entries_ = std::move(entries);
    return m;
}

std::size_t SparseHermitian::full_nonzeros() const {
    std::size_t n = 0;
    for (const SparseEntry& e : entries_) n += (e.row == e.col) ? 1 : 2;
    return n;
}

void SparseBuilder::add(std::size_t row, std::size_t col, cdouble value) {
    if (row > col) throw std::invalid_argument("SparseBuilder: entry below the diagonal");
    if (col >= dim_) throw std::invalid_argument("SparseBuilder: entry out of range");
    accum_[(static_cast<std::uint64_t>(row) << 32) | col] += value;
}

std::vector<SparseEntry> SparseBuilder::finish() const {
    std::vector<SparseEntry> out;
    out.reserve(accum_.size());
    for (const auto& [key, value] : accum_) {
        const auto row = static_cast<std::uint32_t>(key >> 32);
        const auto col = static_cast<std::uint32_t>(key & 0xffffffffu);
        cdouble v = value;
        if (row == col) v = cdouble{v.real(), 0.0};
        if (v == cdouble{}) continue;
        out.push_back({row, col, v});
    }
    return out;
}

CsrMatrix to_full_csr(const SparseHermitian& m) {
    const std::size_t dim = m.dim();
    std::vector<SparseEntry> full;
    full.reserve(2 * m.entries().size());
    for (const SparseEntry& e : m.entries()) {
        full.push_back(e);
        if (e.row != e.col) full.push_back({e.col, e.row, std::conj(e.value)});
    }
    std::sort(full.begin(), full.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    CsrMatrix a;
    a.dim = dim;
    a.row_ptr.assign(dim + 1, 0);
    a.cols.reserve(full.size());
    a.vals.reserve(full.size());
    for (const SparseEntry& e : full) {
        ++a.row_ptr[e.row + 1];
        a.cols.push_back(e.col);
        a.vals.push_back(e.value);
    }
    for (std::size_t r = 0; r < dim; ++r) a.row_ptr[r + 1] += a.row_ptr[r];
    return a;
}

} // namespace tbvqe
