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

#include "tbvqe/lattice.hpp"

#include <ostream>
#include <stdexcept>

namespace tbvqe {

namespace {

int cell_index(const std::array<int, 3>& dims, int cx, int cy, int cz) {
    return (cx * dims[1] + cy) * dims[2] + cz;
}

} // namespace

Supercell build_supercell(std::array<int, 3> dims, bool spin,
                          const std::string& cation_name, const std::string& anion_name) {
    if (dims[0] < 1 || dims[1] < 1 || dims[2] < 1)
        throw std::invalid_argument("build_supercell: all dimensions must be >= 1");

    const int orbitals = spin ? 8 : 4;
    Supercell cell;
    cell.dims = dims;
    cell.spin = spin;
    cell.cation = {cation_name, AtomKind::Cation, orbitals};
    cell.anion = {anion_name, AtomKind::Anion, orbitals};

    const int n_cells = dims[0] * dims[1] * dims[2];
    cell.atoms.reserve(static_cast<std::size_t>(4 * n_cells));
    for (int cx = 0; cx < dims[0]; ++cx)
        for (int cy = 0; cy < dims[1]; ++cy)
            for (int cz = 0; cz < dims[2]; ++cz) {
                const double x = static_cast<double>(cx);
                const double y = static_cast<double>(cy);
                const double z = static_cast<double>(cz);
                const int base = 4 * cell_index(dims, cx, cy, cz);
                cell.atoms.push_back({cell.cation, {x, y, z}, base});
                cell.atoms.push_back({cell.anion, {x + 0.5, y, z}, base + 1});
                cell.atoms.push_back({cell.anion, {x, y + 0.5, z}, base + 2});
                cell.atoms.push_back({cell.anion, {x, y, z + 0.5}, base + 3});
            }

    // Each B couples to the anion half a lattice constant away along every
    // axis direction that stays inside the block: +a is the own-cell anion,
    // -a the anion of the previous cell along that axis.
    auto add_pair = [&cell](int b_site, int x_site, int axis, double sign) {
        std::array<double, 3> d{};
        d[static_cast<std::size_t>(axis)] = sign;
        cell.neighbor_pairs.push_back({b_site, x_site, d});
        d[static_cast<std::size_t>(axis)] = -sign;
        cell.neighbor_pairs.push_back({x_site, b_site, d});
    };
    for (int cx = 0; cx < dims[0]; ++cx)
        for (int cy = 0; cy < dims[1]; ++cy)
            for (int cz = 0; cz < dims[2]; ++cz) {
                const int b = 4 * cell_index(dims, cx, cy, cz);
                add_pair(b, b + 1, 0, 1.0);
                add_pair(b, b + 2, 1, 1.0);
                add_pair(b, b + 3, 2, 1.0);
                if (cx > 0) add_pair(b, 4 * cell_index(dims, cx - 1, cy, cz) + 1, 0, -1.0);
                if (cy > 0) add_pair(b, 4 * cell_index(dims, cx, cy - 1, cz) + 2, 1, -1.0);
                if (cz > 0) add_pair(b, 4 * cell_index(dims, cx, cy, cz - 1) + 3, 2, -1.0);
            }
    return cell;
}

std::size_t basis_index(int site_index, int orbital, int spin_channel, bool spin) {
    if (orbital < 0 || orbital > 3)
        throw std::invalid_argument("basis_index: orbital out of range");
    const int n_spin = spin ? 2 : 1;
    if (spin_channel < 0 || spin_channel >= n_spin)
        throw std::invalid_argument("basis_index: spin channel out of range");
    return static_cast<std::size_t>(site_index) * static_cast<std::size_t>(4 * n_spin) +
           static_cast<std::size_t>(spin_channel) * 4 + static_cast<std::size_t>(orbital);
}

BasisCoords basis_coords(std::size_t index, bool spin) {
    const int n_spin = spin ? 2 : 1;
    const std::size_t per_site = static_cast<std::size_t>(4 * n_spin);
    return {static_cast<int>(index / per_site), static_cast<int>(index % 4),
            static_cast<int>((index % per_site) / 4)};
}

std::size_t raw_dimension(const Supercell& cell) {
    return static_cast<std::size_t>(cell.spin ? 8 : 4) * cell.atoms.size();
}

void write_supercell(std::ostream& os, const Supercell& cell) {
    for (const AtomSite& a : cell.atoms)
        os << a.site_index << ' ' << a.species.name << ' ' << a.position[0] << ' '
           << a.position[1] << ' ' << a.position[2] << '\n';
}

} // namespace tbvqe
