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

#include "tbvqe/tb_model.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tbvqe/kernels.hpp"

namespace tbvqe {

namespace {

constexpr double kPaddingOffset = 1.0e3; // eV above omega_hint
constexpr double kUnitTolerance = 1.0e-9;

const SlaterKosterSet& lookup_sk(const TBParameterSet& params, const std::string& bra,
                                 const std::string& ket) {
    const auto it = params.slater_koster.find({bra, ket});
    if (it == params.slater_koster.end())
        throw std::invalid_argument("no Slater-Koster parameters for pair (" + bra + ", " + ket +
                                    ")");
    return it->second;
}

} // namespace

Eigen::Matrix4cd slater_koster_block(const TBParameterSet& params, const std::string& bra_species,
                                     const std::string& ket_species,
                                     const std::array<double, 3>& d) {
    const double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (std::abs(norm - 1.0) > kUnitTolerance)
        throw std::invalid_argument("slater_koster_block: direction cosines must be unit length");
    const SlaterKosterSet& sk = lookup_sk(params, bra_species, ket_species);

    Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
    b(0, 0) = sk.v_ss_sigma;
    for (int a = 0; a < 3; ++a) {
        b(0, a + 1) = d[static_cast<std::size_t>(a)] * sk.v_sp_sigma;
        b(a + 1, 0) = -d[static_cast<std::size_t>(a)] * sk.v_ps_sigma;
        for (int c = 0; c < 3; ++c) {
            const double da = d[static_cast<std::size_t>(a)];
            const double dc = d[static_cast<std::size_t>(c)];
            b(a + 1, c + 1) = da * dc * sk.v_pp_sigma + ((a == c ? 1.0 : 0.0) - da * dc) * sk.v_pp_pi;
        }
    }
    return b;
}

Eigen::Matrix<std::complex<double>, 6, 6> soc_block(double lambda) {
    using C = std::complex<double>;
    const C i{0.0, 1.0};
    // l = 1 angular momentum matrices in the real-orbital basis (px, py, pz).
    Eigen::Matrix3cd lx = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd ly = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd lz = Eigen::Matrix3cd::Zero();
    lx(1, 2) = -i; lx(2, 1) = i;
    ly(0, 2) = i;  ly(2, 0) = -i;
    lz(0, 1) = -i; lz(1, 0) = i;
    // Pauli matrices over the spin channels (0, 1).
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;

    Eigen::Matrix<C, 6, 6> h = Eigen::Matrix<C, 6, 6>::Zero();
    const auto accumulate = [&h](const Eigen::Matrix2cd& s, const Eigen::Matrix3cd& l) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n) h(3 * a + m, 3 * b + n) += s(a, b) * l(m, n);
    };
    accumulate(sx, lx);
    accumulate(sy, ly);
    accumulate(sz, lz);
    return (lambda / 2.0) * h; // lambda * L.S with S = sigma/2
}

SparseHermitian pad_to_power_of_two(const SparseBuilder& raw, double omega_hint) {
    const std::size_t dim = std::bit_ceil(raw.dim());
    SparseBuilder padded(dim);
    for (const SparseEntry& e : raw.finish()) padded.add(e.row, e.col, e.value);
    for (std::size_t k = raw.dim(); k < dim; ++k) padded.add(k, k, omega_hint + kPaddingOffset);
    return SparseHermitian::from_upper(dim, padded.finish());
}

SparseHermitian assemble_hamiltonian(const Supercell& cell, const TBParameterSet& params,
                                     const AssembleOptions& opts) {
    const bool spin = cell.spin;
    const int n_spin = spin ? 2 : 1;
    const std::size_t d_raw = raw_dimension(cell);
    const std::size_t dim = std::bit_ceil(d_raw);
    if (dim > (std::size_t{1} << opts.max_qubits))
        throw std::invalid_argument("assemble_hamiltonian: dimension " + std::to_string(dim) +
                                    " exceeds the qubit budget of " +
                                    std::to_string(opts.max_qubits));

    SparseBuilder b(d_raw);
    for (const AtomSite& atom : cell.atoms) {
        const auto onsite_it = params.onsite.find(atom.species.name);
        if (onsite_it == params.onsite.end())
            throw std::invalid_argument("no on-site energies for species " + atom.species.name);
        const OnsiteEnergies& on = onsite_it->second;
        for (int s = 0; s < n_spin; ++s) {
            b.add(basis_index(atom.site_index, 0, s, spin), basis_index(atom.site_index, 0, s, spin),
                  on.e_s);
            for (int orb = 1; orb < 4; ++orb) {
                const std::size_t k = basis_index(atom.site_index, orb, s, spin);
                b.add(k, k, on.e_p);
            }
        }
        if (spin) {
            const auto soc_it = params.soc_lambda.find(atom.species.name);
            const double lambda = soc_it == params.soc_lambda.end() ? 0.0 : soc_it->second;
            if (lambda != 0.0) {
                const auto soc = soc_block(lambda);
                for (int r = 0; r < 6; ++r)
                    for (int c = 0; c < 6; ++c) {
                        if (soc(r, c) == cdouble{}) continue;
                        const std::size_t row =
                            basis_index(atom.site_index, 1 + r % 3, r / 3, spin);
                        const std::size_t col =
                            basis_index(atom.site_index, 1 + c % 3, c / 3, spin);
                        if (row <= col) b.add(row, col, soc(r, c));
                    }
            }
        }
    }

    // Coupling blocks are spin-diagonal; only the (a < b) direction of each
    // pair is stored, the mirror is implied by Hermitian storage.
    for (const NeighborPair& pair : cell.neighbor_pairs) {
        if (pair.site_a >= pair.site_b) continue;
        const AtomSite& bra = cell.atoms[static_cast<std::size_t>(pair.site_a)];
        const AtomSite& ket = cell.atoms[static_cast<std::size_t>(pair.site_b)];
        const Eigen::Matrix4cd block =
            slater_koster_block(params, bra.species.name, ket.species.name, pair.direction);
        for (int s = 0; s < n_spin; ++s)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    if (block(r, c) == cdouble{}) continue;
                    b.add(basis_index(pair.site_a, r, s, spin),
                          basis_index(pair.site_b, c, s, spin), block(r, c));
                }
    }
    return pad_to_power_of_two(b, opts.omega_hint);
}

SparseHermitian fold(const SparseHermitian& h, double omega) {
    // Shift the diagonal, square in full CSR form, keep the upper triangle.
    SparseBuilder shifted(h.dim());
    for (const SparseEntry& e : h.entries()) shifted.add(e.row, e.col, e.value);
    for (std::size_t k = 0; k < h.dim(); ++k) shifted.add(k, k, -omega);
    const SparseHermitian a = SparseHermitian::from_upper(h.dim(), shifted.finish());

    const CsrMatrix squared = kernels::csr_square(to_full_csr(a));
    std::vector<SparseEntry> upper;
    for (std::size_t r = 0; r < squared.dim; ++r)
        for (std::size_t k = squared.row_ptr[r]; k < squared.row_ptr[r + 1]; ++k) {
            const std::uint32_t c = squared.cols[k];
            if (c < r) continue;
            cdouble v = squared.vals[k];
            if (c == r) v = cdouble{v.real(), 0.0};
            if (v == cdouble{}) continue;
            upper.push_back({static_cast<std::uint32_t>(r), c, v});
        }
    return SparseHermitian::from_upper(h.dim(), std::move(upper));
}

} // namespace tbvqe
