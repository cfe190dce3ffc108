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

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tbvqe/sparse.hpp"

namespace tbvqe {

/// Minimal `[section] key = value` file with `#`/`;` comments.
class IniFile {
  public:
    static IniFile parse_file(const std::string& path);
    static IniFile parse(std::istream& is, const std::string& origin = "<stream>");

    bool has_section(const std::string& section) const;
    std::vector<std::string> section_names() const;

    const std::string& get(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key, double fallback) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    const std::map<std::string, std::string>& section(const std::string& name) const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::string origin_;
};

/// Ordered key=value pairs echoed at the top of every output file so a
/// run can be reproduced from any artifact it wrote.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

void write_echo_header(std::ostream& os, const ConfigEcho& echo, const std::string& comment_prefix);

/// MatrixMarket coordinate/complex/hermitian, 1-based, upper triangle.
void write_matrix_market(std::ostream& os, const SparseHermitian& m, const ConfigEcho& echo);
SparseHermitian read_matrix_market(std::istream& is);

} // namespace tbvqe
