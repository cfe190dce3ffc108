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

#include "tbvqe/tb_params.hpp"

#include <stdexcept>

#include "tbvqe/io.hpp"

namespace tbvqe {

TBParameterSet load_parameter_file(const std::string& path) {
    const IniFile ini = IniFile::parse_file(path);
    TBParameterSet p;
    p.cation = ini.get_or("structure", "cation", "Pb");
    p.anion = ini.get_or("structure", "anion", "I");

    for (const std::string& name : ini.section_names()) {
        if (name.rfind("onsite.", 0) == 0) {
            const std::string species = name.substr(7);
            p.onsite[species] = {ini.get_double(name, "e_s"), ini.get_double(name, "e_p")};
        } else if (name.rfind("sk.", 0) == 0) {
            const std::string pair = name.substr(3);
            const auto sep = pair.find('_');
            if (sep == std::string::npos)
                throw std::invalid_argument(path + ": section [" + name +
                                            "] must be named sk.<A>_<B>");
            SlaterKosterSet sk;
            sk.v_ss_sigma = ini.get_double(name, "v_ss_sigma");
            sk.v_sp_sigma = ini.get_double(name, "v_sp_sigma");
            sk.v_ps_sigma = ini.get_double(name, "v_ps_sigma");
            sk.v_pp_sigma = ini.get_double(name, "v_pp_sigma");
            sk.v_pp_pi = ini.get_double(name, "v_pp_pi");
            p.slater_koster[{pair.substr(0, sep), pair.substr(sep + 1)}] = sk;
        }
    }
    if (ini.has_section("soc"))
        for (const auto& [species, value] : ini.section("soc"))
            p.soc_lambda[species] = ini.get_double("soc", species);

    for (const std::string& s : {p.cation, p.anion})
        if (p.onsite.find(s) == p.onsite.end())
            throw std::invalid_argument(path + ": missing [onsite." + s + "]");
    if (p.slater_koster.find({p.cation, p.anion}) == p.slater_koster.end() ||
        p.slater_koster.find({p.anion, p.cation}) == p.slater_koster.end())
        throw std::invalid_argument(path + ": need [sk." + p.cation + "_" + p.anion + "] and [sk." +
                                    p.anion + "_" + p.cation + "]");
    return p;
}

} // namespace tbvqe
