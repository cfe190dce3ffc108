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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tbvqe/io.hpp"
#include "tbvqe/sparse.hpp"

namespace tbvqe {

/// One standard-basis operator |z><z'| with its coefficient. Hermitian
/// conjugate pairs are stored once with z <= z'; the diagonal (z == z')
/// carries a real coefficient.
struct SBTerm {
    std::uint64_t z = 0;
    std::uint64_t z_prime = 0;
    cdouble coeff{};
};

/// Normalizes (z, z', o) so that z <= z', conjugating the coefficient when
/// the pair is swapped.
SBTerm make_sb_term(std::uint64_t z, std::uint64_t z_prime, cdouble coeff);

/// One term per stored nonzero: z/z' are the row/col bit strings.
std::vector<SBTerm> decompose(const SparseHermitian& h);

enum class Part : std::uint8_t { Real = 0, Imag = 1 };

struct GroupMember {
    std::uint64_t z = 0;
    double coeff = 0.0; // Re[o] for Part::Real, Im[o] for Part::Imag
};

/// All standard-basis operators sharing one displacement string
/// x = z XOR z' and one coefficient part; measurable with a single
/// circuit.
struct MeasurementGroup {
    std::uint64_t x = 0;
    Part part = Part::Real;
    std::vector<GroupMember> members;

    double max_abs_coeff() const;
};

struct MeasurementPlan {
    int n_qubits = 0;
    std::vector<MeasurementGroup> groups; // ascending x, Real before Imag

    std::size_t circuit_count() const { return groups.size(); }
    std::size_t real_group_count() const;
    std::size_t imag_group_count() const;
};

/// Buckets terms by (z XOR z', part). A term whose coefficient has both a
/// real and an imaginary part joins both buckets, so the group sums
/// rebuild the observable exactly. Cost is one hash insertion per part
/// per term; groups are sorted once at the end.
MeasurementPlan group_terms(int n_qubits, const std::vector<SBTerm>& terms);

MeasurementPlan build_plan(const SparseHermitian& h);

/// Measurement circuit recipe for one group. With an ancilla
/// (off-diagonal groups): ancilla prepared by G (Hadamard for Real,
/// Hadamard then S for Imag), one CNOT from the ancilla onto every qubit j
/// with x_j = 1, a closing ancilla Hadamard, Z-basis readout of all N+1
/// qubits. The diagonal group is read out directly with no ancilla.
struct GhzDescriptor {
    int n_qubits = 0;
    std::uint64_t x = 0;
    Part part = Part::Real;
    bool use_ancilla = false;

    int cnot_count() const;
    /// 1-based qubit labels targeted by CNOTs (qubit 1 = most significant
    /// bit of the basis index).
    std::vector<int> cnot_targets() const;
};

GhzDescriptor ghz_descriptor(const MeasurementGroup& group, int n_qubits);

struct ShotAllocation {
    double epsilon = 0.0; // 0 for uniform allocations
    // Aligned with the plan's group order.
    std::vector<std::uint64_t> per_group;
    std::uint64_t total = 0;
    // Closed-form optimum bound (sum_x max|Re| + sum_{x!=0} max|Im|)^2 / eps^2;
    // the integer total exceeds it only through per-group ceilings.
    double bound = 0.0;
};

/// Proportional allocation m_i = ceil(sigma_i * S / eps^2) with
/// sigma_i = max_z |c| of group i and S their sum; minimizes the total
/// shot count under the per-group variance bound.
ShotAllocation allocate_shots(const MeasurementPlan& plan, double epsilon);

ShotAllocation uniform_shots(const MeasurementPlan& plan, std::uint64_t shots_per_circuit);

/// Columns: x(hex), part, member_count, max_abs_coeff, cnot_count, shots.
void write_plan_csv(std::ostream& os, const MeasurementPlan& plan, const ShotAllocation& alloc,
                    const ConfigEcho& echo);

} // namespace tbvqe
