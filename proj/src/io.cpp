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

#include "tbvqe/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tbvqe {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

IniFile IniFile::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open '" + path + "'");
    return parse(is, path);
}

IniFile IniFile::parse(std::istream& is, const std::string& origin) {
    IniFile f;
    f.origin_ = origin;
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            f.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        f.sections_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return f;
}

bool IniFile::has_section(const std::string& section) const {
    return sections_.count(section) != 0;
}

std::vector<std::string> IniFile::section_names() const {
    std::vector<std::string> names;
    names.reserve(sections_.size());
    for (const auto& [name, kv] : sections_) names.push_back(name);
    return names;
}

const std::string& IniFile::get(const std::string& section, const std::string& key) const {
    const auto sit = sections_.find(section);
    if (sit == sections_.end())
        throw std::invalid_argument(origin_ + ": missing section [" + section + "]");
    const auto kit = sit->second.find(key);
    if (kit == sit->second.end())
        throw std::invalid_argument(origin_ + ": missing key '" + key + "' in [" + section + "]");
    return kit->second;
}

double IniFile::get_double(const std::string& section, const std::string& key) const {
    const std::string& raw = get(section, key);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(raw, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != raw.size())
        throw std::invalid_argument(origin_ + ": value of '" + key + "' in [" + section +
                                    "] is not a number: " + raw);
    return v;
}

double IniFile::get_double_or(const std::string& section, const std::string& key,
                              double fallback) const {
    const auto sit = sections_.find(section);
    if (sit == sections_.end() || sit->second.find(key) == sit->second.end()) return fallback;
    return get_double(section, key);
}

std::string IniFile::get_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
    const auto sit = sections_.find(section);
    if (sit == sections_.end()) return fallback;
    const auto kit = sit->second.find(key);
    return kit == sit->second.end() ? fallback : kit->second;
}

const std::map<std::string, std::string>& IniFile::section(const std::string& name) const {
    const auto sit = sections_.find(name);
    if (sit == sections_.end())
        throw std::invalid_argument(origin_ + ": missing section [" + name + "]");
    return sit->second;
}

void write_echo_header(std::ostream& os, const ConfigEcho& echo, const std::string& comment_prefix) {
    for (const auto& [key, value] : echo) os << comment_prefix << ' ' << key << '=' << value << '\n';
}

void write_matrix_market(std::ostream& os, const SparseHermitian& m, const ConfigEcho& echo) {
    os << "%%MatrixMarket matrix coordinate complex hermitian\n";
    os << "% upper triangle, 1-based\n";
    write_echo_header(os, echo, "%");
    os << m.dim() << ' ' << m.dim() << ' ' << m.stored_nonzeros() << '\n';
    os << std::setprecision(17);
    for (const SparseEntry& e : m.entries())
        os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.real() << ' ' << e.value.imag()
           << '\n';
}

SparseHermitian read_matrix_market(std::istream& is) {
    std::string line;
    std::size_t rows = 0, cols = 0, nnz = 0;
    bool have_sizes = false;
    std::vector<SparseEntry> entries;
    while (std::getline(is, line)) {
        const std::string t = line.empty() ? line : line.substr(0, line.find_first_of("\r"));
        if (t.empty() || t.front() == '%') continue;
        std::istringstream ls(t);
        if (!have_sizes) {
            if (!(ls >> rows >> cols >> nnz) || rows != cols)
                throw std::invalid_argument("MatrixMarket: bad size line");
            have_sizes = true;
            entries.reserve(nnz);
            continue;
        }
        std::size_t r = 0, c = 0;
        double re = 0.0, im = 0.0;
        if (!(ls >> r >> c >> re >> im)) throw std::invalid_argument("MatrixMarket: bad entry");
        entries.push_back({static_cast<std::uint32_t>(r - 1), static_cast<std::uint32_t>(c - 1),
                           cdouble{re, im}});
    }
    if (!have_sizes || entries.size() != nnz)
        throw std::invalid_argument("MatrixMarket: truncated file");
    return SparseHermitian::from_upper(rows, std::move(entries));
}

} // namespace tbvqe
