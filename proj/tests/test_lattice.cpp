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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "tbvqe/lattice.hpp"

using namespace tbvqe;

TEST_CASE("supercell 1x1x2 with spin matches the 64-state model") {
    const Supercell cell = build_supercell({1, 1, 2}, true);
    CHECK(cell.atoms.size() == 8);
    CHECK(raw_dimension(cell) == 64);
}

TEST_CASE("single closed cell") {
    const Supercell cell = build_supercell({1, 1, 1}, false);
    CHECK(cell.atoms.size() == 4);
    CHECK(raw_dimension(cell) == 16);
    // Closed boundaries cut the three negative-direction anion neighbors.
    int b_neighbors = 0;
    for (const NeighborPair& p : cell.neighbor_pairs)
        if (p.site_a == 0) ++b_neighbors;
    CHECK(b_neighbors == 3);
}

TEST_CASE("2x2x2 neighbor pairs match the all-pairs distance scan") {
    const Supercell cell = build_supercell({2, 2, 2}, true);
    CHECK(cell.atoms.size() == 32);
    CHECK(raw_dimension(cell) == 256);

    const auto scanned = oracles::neighbor_pairs_by_scan(cell);
    std::vector<std::pair<int, int>> built;
    for (const NeighborPair& p : cell.neighbor_pairs) built.emplace_back(p.site_a, p.site_b);
    std::sort(built.begin(), built.end());
    CHECK(built == scanned);
    CHECK(built.size() == 72); // frozen from the scan: 8 B * 3 + 12 interior links, both directions
}

TEST_CASE("neighbor lists are symmetric with mirrored directions") {
    const Supercell cell = build_supercell({2, 1, 3}, false);
    std::set<std::tuple<int, int, double, double, double>> links;
    for (const NeighborPair& p : cell.neighbor_pairs)
        links.insert({p.site_a, p.site_b, p.direction[0], p.direction[1], p.direction[2]});
    for (const NeighborPair& p : cell.neighbor_pairs)
        CHECK(links.count({p.site_b, p.site_a, -p.direction[0], -p.direction[1], -p.direction[2]}) ==
              1);
}

TEST_CASE("coordination bounds") {
    for (const std::array<int, 3> dims : {std::array<int, 3>{1, 1, 1}, {3, 1, 2}, {2, 2, 2}}) {
        const Supercell cell = build_supercell(dims, false);
        CHECK(cell.atoms.size() == static_cast<std::size_t>(4 * dims[0] * dims[1] * dims[2]));
        std::vector<int> degree(cell.atoms.size(), 0);
        for (const NeighborPair& p : cell.neighbor_pairs) ++degree[static_cast<std::size_t>(p.site_a)];
        for (const AtomSite& a : cell.atoms) {
            const int d = degree[static_cast<std::size_t>(a.site_index)];
            if (a.species.kind == AtomKind::Cation)
                CHECK(d <= 6);
            else
                CHECK(d <= 2);
        }
    }
}

TEST_CASE("basis_index layout and round trip") {
    CHECK(basis_index(0, 0, 0, true) == 0);
    CHECK(basis_index(1, 3, 1, true) == 15); // site 1, p_z, spin 1 in the spin model

    const Supercell cell = build_supercell({1, 1, 2}, true);
    std::set<std::size_t> seen;
    for (const AtomSite& a : cell.atoms)
        for (int s = 0; s < 2; ++s)
            for (int orb = 0; orb < 4; ++orb) {
                const std::size_t k = basis_index(a.site_index, orb, s, true);
                CHECK(k < raw_dimension(cell));
                CHECK(seen.insert(k).second); // injective
                const BasisCoords back = basis_coords(k, true);
                CHECK(back.site_index == a.site_index);
                CHECK(back.orbital == orb);
                CHECK(back.spin_channel == s);
            }
    CHECK(seen.size() == raw_dimension(cell)); // onto
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(build_supercell({0, 1, 1}, false), std::invalid_argument);
    CHECK_THROWS_AS(build_supercell({1, 0, 1}, false), std::invalid_argument);
    CHECK_THROWS_AS(basis_index(0, 4, 0, true), std::invalid_argument);
    CHECK_THROWS_AS(basis_index(0, 0, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(basis_index(0, 0, 2, true), std::invalid_argument);
}
