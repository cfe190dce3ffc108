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

#include "tbvqe/sb_plan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace tbvqe {

SBTerm make_sb_term(std::uint64_t z, std::uint64_t z_prime, cdouble coeff) {
    if (z > z_prime) return {z_prime, z, std::conj(coeff)};
    return {z, z_prime, coeff};
}

std::vector<SBTerm> decompose(const SparseHermitian& h) {
    std::vector<SBTerm> terms;
    terms.reserve(h.entries().size());
    for (const SparseEntry& e : h.entries()) terms.push_back({e.row, e.col, e.value});
    return terms;
}

double MeasurementGroup::max_abs_coeff() const {
    double m = 0.0;
    for (const GroupMember& member : members) m = std::max(m, std::abs(member.coeff));
    return m;
}

std::size_t MeasurementPlan::real_group_count() const {
    return static_cast<std::size_t>(
        std::count_if(groups.begin(), groups.end(),
                      [](const MeasurementGroup& g) { return g.part == Part::Real; }));
}

std::size_t MeasurementPlan::imag_group_count() const {
    return groups.size() - real_group_count();
}

MeasurementPlan group_terms(int n_qubits, const std::vector<SBTerm>& terms) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(2 * terms.size());
    std::vector<MeasurementGroup> groups;

    const auto bucket = [&index, &groups](std::uint64_t x, Part part) -> MeasurementGroup& {
        const std::uint64_t key = (x << 1) | static_cast<std::uint64_t>(part);
        const auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) groups.push_back({x, part, {}});
        return groups[it->second];
    };

    for (const SBTerm& t : terms) {
        const std::uint64_t x = t.z ^ t.z_prime;
        if (t.coeff.real() != 0.0) bucket(x, Part::Real).members.push_back({t.z, t.coeff.real()});
        if (t.coeff.imag() != 0.0) bucket(x, Part::Imag).members.push_back({t.z, t.coeff.imag()});
    }

    std::sort(groups.begin(), groups.end(), [](const MeasurementGroup& a, const MeasurementGroup& b) {
        return a.x != b.x ? a.x < b.x : a.part < b.part;
    });
    return {n_qubits, std::move(groups)};
}

MeasurementPlan build_plan(const SparseHermitian& h) {
    return group_terms(h.n_qubits(), decompose(h));
}

int GhzDescriptor::cnot_count() const { return use_ancilla ? std::popcount(x) : 0; }

std::vector<int> GhzDescriptor::cnot_targets() const {
    std::vector<int> targets;
    if (!use_ancilla) return targets;
    for (int j = 1; j <= n_qubits; ++j)
        if ((x >> (n_qubits - j)) & 1u) targets.push_back(j);
    return targets;
}

GhzDescriptor ghz_descriptor(const MeasurementGroup& group, int n_qubits) {
    return {n_qubits, group.x, group.part, group.x != 0};
}

ShotAllocation allocate_shots(const MeasurementPlan& plan, double epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("allocate_shots: epsilon must be positive");
    if (plan.groups.empty()) throw std::invalid_argument("allocate_shots: empty plan");

    std::vector<double> sigma;
    sigma.reserve(plan.groups.size());
    double sum = 0.0;
    for (const MeasurementGroup& g : plan.groups) {
        sigma.push_back(g.max_abs_coeff());
        sum += sigma.back();
    }

    ShotAllocation alloc;
    alloc.epsilon = epsilon;
    alloc.bound = (sum / epsilon) * (sum / epsilon);
    alloc.per_group.reserve(sigma.size());
    const double eps_sq = epsilon * epsilon;
    for (const double s : sigma) {
        const auto m = static_cast<std::uint64_t>(std::ceil(s * sum / eps_sq));
        alloc.per_group.push_back(std::max<std::uint64_t>(m, 1));
        alloc.total += alloc.per_group.back();
    }
    return alloc;
}

ShotAllocation uniform_shots(const MeasurementPlan& plan, std::uint64_t shots_per_circuit) {
    if (shots_per_circuit < 1)
        throw std::invalid_argument("uniform_shots: need at least one shot per circuit");
    ShotAllocation alloc;
    alloc.per_group.assign(plan.groups.size(), shots_per_circuit);
    alloc.total = shots_per_circuit * plan.groups.size();
    return alloc;
}

void write_plan_csv(std::ostream& os, const MeasurementPlan& plan, const ShotAllocation& alloc,
                    const ConfigEcho& echo) {
    write_echo_header(os, echo, "#");
    os << "x,part,member_count,max_abs_coeff,cnot_count,shots\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < plan.groups.size(); ++i) {
        const MeasurementGroup& g = plan.groups[i];
        const GhzDescriptor desc = ghz_descriptor(g, plan.n_qubits);
        os << std::hex << g.x << std::dec << ',' << (g.part == Part::Real ? "Re" : "Im") << ','
           << g.members.size() << ',' << g.max_abs_coeff() << ',' << desc.cnot_count() << ','
           << (i < alloc.per_group.size() ? alloc.per_group[i] : 0) << '\n';
    }
}

} // namespace tbvqe
