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

#include <map>
#include <string>
#include <utility>

namespace tbvqe {

struct OnsiteEnergies {
    double e_s = 0.0; // eV
    double e_p = 0.0; // eV
};

/// Two-center overlap energies in eV for an ordered species pair (bra
/// species, ket species). v_sp_sigma couples s on the bra atom to p on the
/// ket atom; v_ps_sigma the reverse. For the assembled matrix to be
/// independent of site ordering, v_sp_sigma(A,B) must equal
/// v_ps_sigma(B,A); the matrix is Hermitian by storage either way.
struct SlaterKosterSet {
    double v_ss_sigma = 0.0;
    double v_sp_sigma = 0.0;
    double v_ps_sigma = 0.0;
    double v_pp_sigma = 0.0;
    double v_pp_pi = 0.0;
};

/// Empirical sp3 parameter set. These are inputs, not results: the repo's
/// data/ file carries plausible magnitudes for a lead-iodide lattice and
/// is labeled a fixture.
struct TBParameterSet {
    std::map<std::string, OnsiteEnergies> onsite;
    std::map<std::pair<std::string, std::string>, SlaterKosterSet> slater_koster;
    std::map<std::string, double> soc_lambda; // eV, on-site p-manifold L.S strength
    std::string cation = "Pb";
    std::string anion = "I";
};

/// Reads sections [structure], [onsite.<species>], [sk.<A>_<B>], [soc].
TBParameterSet load_parameter_file(const std::string& path);

} // namespace tbvqe
