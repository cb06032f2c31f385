#pragma once

#include <string>
#include <vector>

#include "superfock/mackey.hpp"

namespace superfock::presets {

// Named generator lists: pauli1, pauli2, bell16, clifford1.
std::vector<ComplexMatrix> group_generators(const std::string& name);
std::vector<std::string> known_groups();

// Named (group, subgroup-with-character) pairs ready for induction:
//   pauli2 / bell    iI, X(x)X, Z(x)Z with sigma(iI) = i     (order 64 / 16)
//   pauli2 / center  iI with sigma(iI) = i                   (order 64 / 4)
//   pauli1 / xphase  iI, X with sigma(iI) = i                (order 16 / 8)
//   clifford1 / sgate  S with sigma(S) = i                   (order 192 / 4)
struct InductionPreset {
    std::string group_name, subgroup_name;
    mackey::FiniteMatrixGroup group;
    mackey::SubgroupRep rep;
};
InductionPreset induction_preset(const std::string& group, const std::string& subgroup);
std::vector<std::string> known_subgroups(const std::string& group);

// Named states: zero, one, plus, minus (1 qubit); phi-plus, phi-minus,
// psi-plus, psi-minus (2 qubits).
ComplexVector state_preset(const std::string& name);
std::vector<std::string> known_states();

}  // namespace superfock::presets
