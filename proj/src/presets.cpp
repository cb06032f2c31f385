#include "superfock/presets.hpp"

#include <cmath>

#include "superfock/errors.hpp"
#include "superfock/qubit.hpp"

namespace superfock::presets {

namespace {

ComplexMatrix word(const std::string& s) { return qubit::pauli_matrix(qubit::pauli_from_string(s)); }

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

}  // namespace

std::vector<std::string> known_groups() { return {"pauli1", "pauli2", "bell16", "clifford1"}; }

std::vector<ComplexMatrix> group_generators(const std::string& name) {
    const cplx i(0, 1);
    if (name == "pauli1") return {i * ComplexMatrix::Identity(2, 2), word("+X"), word("+Z")};
    if (name == "pauli2")
        return {i * ComplexMatrix::Identity(4, 4), word("+XI"), word("+IX"), word("+ZI"),
                word("+IZ")};
    if (name == "bell16")
        return {i * ComplexMatrix::Identity(4, 4), word("+XX"), word("+ZZ")};
    if (name == "clifford1") return qubit::clifford_generators(1);
    throw usage_error("unknown group '" + name + "'; known: " + joined(known_groups()));
}

std::vector<std::string> known_subgroups(const std::string& group) {
    if (group == "pauli2") return {"bell", "center"};
    if (group == "pauli1") return {"xphase"};
    if (group == "clifford1") return {"sgate"};
    return {};
}

InductionPreset induction_preset(const std::string& group, const std::string& subgroup) {
    InductionPreset p;
    p.group_name = group;
    p.subgroup_name = subgroup;
    p.group = mackey::generate_group(group_generators(group));

    auto need = [&](const ComplexMatrix& m, const char* what) {
        const int idx = mackey::find_element(p.group, m);
        if (idx < 0) throw std::logic_error(std::string("preset element missing: ") + what);
        return idx;
    };

    const cplx i(0, 1);
    std::vector<int> gen_idx;
    std::vector<cplx> gen_val;
    if (group == "pauli2" && subgroup == "bell") {
        gen_idx = {need(i * ComplexMatrix::Identity(4, 4), "iI"), need(word("+XX"), "XX"),
                   need(word("+ZZ"), "ZZ")};
        gen_val = {i, 1.0, 1.0};
    } else if (group == "pauli2" && subgroup == "center") {
        gen_idx = {need(i * ComplexMatrix::Identity(4, 4), "iI")};
        gen_val = {i};
    } else if (group == "pauli1" && subgroup == "xphase") {
        gen_idx = {need(i * ComplexMatrix::Identity(2, 2), "iI"), need(word("+X"), "X")};
        gen_val = {i, 1.0};
    } else if (group == "clifford1" && subgroup == "sgate") {
        ComplexMatrix s(2, 2);
        s << 1, 0, 0, i;
        gen_idx = {need(s, "S")};
        gen_val = {i};
    } else {
        throw usage_error("unknown subgroup '" + subgroup + "' for group '" + group +
                          "'; known: " + joined(known_subgroups(group)));
    }
    p.rep = mackey::make_character(p.group, gen_idx, gen_val);
    return p;
}

std::vector<std::string> known_states() {
    return {"zero", "one", "plus", "minus", "phi-plus", "phi-minus", "psi-plus", "psi-minus"};
}

ComplexVector state_preset(const std::string& name) {
    const double s = 1.0 / std::sqrt(2.0);
    auto vec = [](std::initializer_list<cplx> vals) {
        ComplexVector v(static_cast<Eigen::Index>(vals.size()));
        Eigen::Index k = 0;
        for (const cplx& c : vals) v[k++] = c;
        return v;
    };
    if (name == "zero") return vec({1, 0});
    if (name == "one") return vec({0, 1});
    if (name == "plus") return vec({s, s});
    if (name == "minus") return vec({s, -s});
    if (name == "phi-plus") return vec({s, 0, 0, s});
    if (name == "phi-minus") return vec({s, 0, 0, -s});
    if (name == "psi-plus") return vec({0, s, s, 0});
    if (name == "psi-minus") return vec({0, s, -s, 0});
    throw usage_error("unknown state '" + name + "'; known: " + joined(known_states()));
}

}  // namespace superfock::presets
