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

#include <Eigen/Core>

#include "tbvqe/sparse.hpp"

namespace tbvqe {

Eigen::MatrixXcd to_dense(const SparseHermitian& m);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXcd vectors; // column k pairs with values[k]; empty unless requested
};

/// Full Hermitian eigendecomposition; the reference oracle for every
/// spectral check in the repo. Dense memory: keep dim <= 2^14.
EigenSystem exact_diagonalize(const SparseHermitian& m, bool with_vectors = false);

} // namespace tbvqe
