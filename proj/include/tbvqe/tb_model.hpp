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
#include <string>

#include <Eigen/Core>

#include "tbvqe/lattice.hpp"
#include "tbvqe/sparse.hpp"
#include "tbvqe/tb_params.hpp"

namespace tbvqe {

/// Two-center sp3 coupling block in orbital order (s, px, py, pz) for the
/// unit direction d pointing from the bra atom to the ket atom:
///   <s|s>      = v_ss_sigma
///   <s|p_a>    = d_a * v_sp_sigma
///   <p_a|s>    = -d_a * v_ps_sigma
///   <p_a|p_b>  = d_a d_b v_pp_sigma + (delta_ab - d_a d_b) v_pp_pi
/// Throws on an unknown species pair or a non-unit direction.
Eigen::Matrix4cd slater_koster_block(const TBParameterSet& params, const std::string& bra_species,
                                     const std::string& ket_species,
                                     const std::array<double, 3>& d);

/// On-site L.S coupling on the p manifold, basis (spin-major)
/// (px^0, py^0, pz^0, px^1, py^1, pz^1), with S = sigma/2 so entries have
/// magnitude lambda/2. All entries are off-diagonal and some imaginary.
Eigen::Matrix<std::complex<double>, 6, 6> soc_block(double lambda);

struct AssembleOptions {
    int max_qubits = 14;
    double omega_hint = 0.0; // padding diagonal reference, eV
};

/// Sparse sp3 Hamiltonian of the supercell: on-site energies (+ SOC when
/// the cell carries spin and the species lambda is nonzero) on the
/// diagonal blocks, Slater-Koster blocks on nearest-neighbor pairs,
/// padded to the next power of two.
SparseHermitian assemble_hamiltonian(const Supercell& cell, const TBParameterSet& params,
                                     const AssembleOptions& opts = {});

/// Embeds a raw matrix in the top-left of the next power-of-two dimension.
/// Padding diagonals sit at omega_hint + 1e3 eV so they stay far outside
/// any folded-spectrum window of interest.
SparseHermitian pad_to_power_of_two(const SparseBuilder& raw, double omega_hint);

/// (H - omega I)^2 as an exact sparse product, upper-triangle storage.
SparseHermitian fold(const SparseHermitian& h, double omega);

} // namespace tbvqe
