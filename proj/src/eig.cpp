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

#include "tbvqe/eig.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace tbvqe {

Eigen::MatrixXcd to_dense(const SparseHermitian& m) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.dim()),
                                                static_cast<Eigen::Index>(m.dim()));
    for (const SparseEntry& e : m.entries()) {
        d(e.row, e.col) = e.value;
        if (e.row != e.col) d(e.col, e.row) = std::conj(e.value);
    }
    return d;
}

EigenSystem exact_diagonalize(const SparseHermitian& m, bool with_vectors) {
    if (m.dim() > (std::size_t{1} << 14))
        throw std::invalid_argument("exact_diagonalize: dimension above 2^14");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        to_dense(m), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("exact_diagonalize: solver failed to converge");
    EigenSystem sys;
    sys.values = solver.eigenvalues();
    if (with_vectors) sys.vectors = solver.eigenvectors();
    return sys;
}

} // namespace tbvqe
