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
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tbvqe {

// Positions are in units of the cubic lattice constant, which cancels out
// of all direction cosines; it is fixed to 1 and only echoed in outputs.
inline constexpr double kLatticeConstant = 1.0;

enum class AtomKind { Cation, Anion };

struct AtomSpecies {
    std::string name;
    AtomKind kind = AtomKind::Cation;
    int orbital_count = 4; // 4 spinless (s, px, py, pz), 8 with spin
};

struct AtomSite {
    AtomSpecies species;
    std::array<double, 3> position{};
    int site_index = 0;
};

/// Directed nearest-neighbor link; `direction` is the unit vector from
/// site_a to site_b. Links are stored in both directions.
struct NeighborPair {
    int site_a = 0;
    int site_b = 0;
    std::array<double, 3> direction{};
};

/// Finite nx x ny x nz block of BX3 unit cells with closed boundaries:
/// B at each cell origin, anions at the three half-edge positions. Four
/// atoms per cell; no link wraps around the block.
struct Supercell {
    std::array<int, 3> dims{};
    bool spin = false;
    AtomSpecies cation;
    AtomSpecies anion;
    std::vector<AtomSite> atoms;
    std::vector<NeighborPair> neighbor_pairs;
};

Supercell build_supercell(std::array<int, 3> dims, bool spin,
                          const std::string& cation_name = "Pb",
                          const std::string& anion_name = "I");

/// Orbital/spin basis layout: site-major, then spin channel, then orbital
/// (s=0, px=1, py=2, pz=3). Spinless models have a single spin channel.
std::size_t basis_index(int site_index, int orbital, int spin_channel, bool spin);

struct BasisCoords {
    int site_index;
    int orbital;
    int spin_channel;
};
BasisCoords basis_coords(std::size_t index, bool spin);

/// Basis size before padding: 4 * n_spin * atom_count.
std::size_t raw_dimension(const Supercell& cell);

/// One atom per line: `site_index species x y z`.
void write_supercell(std::ostream& os, const Supercell& cell);

} // namespace tbvqe
