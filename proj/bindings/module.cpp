#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "superfock/fock.hpp"
#include "superfock/mackey.hpp"
#include "superfock/osp.hpp"
#include "superfock/presets.hpp"
#include "superfock/qubit.hpp"
#include "superfock/report.hpp"
#include "superfock/susy.hpp"

namespace py = pybind11;
using namespace superfock;

namespace {

susy::TowerGrading grading_from(const std::string& s) {
    if (s == "fermion_parity") return susy::TowerGrading::fermion_parity;
    if (s == "boson_klein") return susy::TowerGrading::boson_klein;
    throw usage_error("unknown grading '" + s + "'");
}

py::dict spectrum_dict(const susy::SpectrumReport& sp) {
    py::dict d;
    d["eigenvalues"] = sp.eigenvalues;
    d["degeneracies"] = sp.degeneracies;
    d["sectors"] = sp.sectors;
    d["ground_energy"] = sp.ground_energy;
    d["breaking"] = susy::to_string(sp.breaking);
    return d;
}

report::Json to_json(const py::handle& v) {
    if (py::isinstance<py::bool_>(v)) return v.cast<bool>();
    if (py::isinstance<py::int_>(v)) return v.cast<long long>();
    if (py::isinstance<py::float_>(v)) return v.cast<double>();
    if (py::isinstance<py::str>(v)) return v.cast<std::string>();
    throw usage_error("config values must be bool, int, float, or str");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "truncated Fock space operator algebra toolkit";

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    // deformed oscillator
    m.def("deformed_level", &fock::deformed_level, py::arg("n"), py::arg("nu"),
          "[n]_nu: n for even n, n + nu for odd n");
    m.def(
        "annihilator",
        [](int cutoff, double nu) { return fock::build_annihilator(fock::FockSpec{cutoff, nu}).mat; },
        py::arg("cutoff"), py::arg("nu") = 0.0);
    m.def(
        "creator",
        [](int cutoff, double nu) { return fock::build_creator(fock::FockSpec{cutoff, nu}).mat; },
        py::arg("cutoff"), py::arg("nu") = 0.0);
    m.def(
        "klein",
        [](int cutoff, double nu) { return fock::build_klein(fock::FockSpec{cutoff, nu}).mat; },
        py::arg("cutoff"), py::arg("nu") = 0.0);
    m.def(
        "number_operator",
        [](int cutoff, double nu) { return fock::build_number(fock::FockSpec{cutoff, nu}).mat; },
        py::arg("cutoff"), py::arg("nu") = 0.0);
    m.def(
        "audit_relations",
        [](int cutoff, double nu) { return fock::audit_relations(fock::FockSpec{cutoff, nu}); },
        py::arg("cutoff"), py::arg("nu") = 0.0,
        "Frobenius residuals of the defining relations, keyed by relation name");
    m.def(
        "klein_fermion_audit",
        [](int cutoff, double nu) { return fock::klein_fermion_audit(fock::FockSpec{cutoff, nu}); },
        py::arg("cutoff"), py::arg("nu") = 0.0);

    // supersymmetric pair and tower
    m.def(
        "supercharge",
        [](int cutoff, double nu, double g0, const std::string& grading) {
            const auto pair =
                susy::build_supercharge_1d(susy::ModelParams{cutoff, nu, g0, 0.0},
                                           grading_from(grading));
            py::dict d;
            d["Q"] = pair.Q;
            d["H"] = pair.H;
            d["klein"] = pair.klein;
            d["parity_residual"] = pair.parity_residual;
            return d;
        },
        py::arg("cutoff"), py::arg("nu") = 0.0, py::arg("g0") = 0.0,
        py::arg("grading") = "fermion_parity");
    m.def(
        "spectrum",
        [](int cutoff, double nu, double g0, const std::string& grading) {
            const auto pair =
                susy::build_supercharge_1d(susy::ModelParams{cutoff, nu, g0, 0.0},
                                           grading_from(grading));
            return spectrum_dict(susy::spectrum_1d(pair));
        },
        py::arg("cutoff"), py::arg("nu") = 0.0, py::arg("g0") = 0.0,
        py::arg("grading") = "fermion_parity");
    m.def(
        "tower",
        [](int cutoff, double nu, double g0, const std::vector<int>& signs,
           const std::string& grading) {
            const auto pair =
                susy::build_supercharge_1d(susy::ModelParams{cutoff, nu, g0, 0.0},
                                           grading_from(grading));
            py::list out;
            for (const auto& lvl : susy::build_tower(pair, signs)) {
                py::dict d;
                d["depth"] = lvl.depth;
                d["sign"] = lvl.sign;
                d["nilpotency_residual"] = lvl.nilpotency_residual;
                d["identity_residual"] = lvl.identity_residual;
                d["spectrum"] = spectrum_dict(lvl.spectrum);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("cutoff"), py::arg("nu") = 0.0, py::arg("g0") = 0.0,
        py::arg("signs") = std::vector<int>{+1}, py::arg("grading") = "fermion_parity");
    m.def(
        "pairing_check",
        [](int cutoff, double nu, double g0, int levels, double tol) {
            const auto pair =
                susy::build_supercharge_1d(susy::ModelParams{cutoff, nu, g0, 0.0});
            const auto rep = susy::partner_pairing_check(pair, levels, tol);
            py::dict d;
            d["pairs"] = rep.pairs;
            d["max_abs_diff"] = rep.max_abs_diff;
            d["pass"] = rep.pass;
            return d;
        },
        py::arg("cutoff"), py::arg("nu") = 0.0, py::arg("g0") = 0.0, py::arg("levels") = 8,
        py::arg("tol") = 1e-6);
    m.def(
        "wzqm_hamiltonian",
        [](int cutoff, double g0, double h0, int max_dim) {
            return susy::build_wzqm_hamiltonian(susy::ModelParams{cutoff, 0.0, g0, h0}, max_dim);
        },
        py::arg("cutoff"), py::arg("g0") = 0.0, py::arg("h0") = 0.0,
        py::arg("max_dim") = kDefaultMaxDim);

    // osp(2|2) closure
    m.def(
        "osp_closure",
        [](int cutoff, double nu, int epsilon, double tol) {
            const auto gs = osp::build_generators(fock::FockSpec{cutoff, nu}, epsilon);
            const auto rep = osp::closure_report(gs, tol);
            py::dict d;
            d["max_residual"] = rep.max_residual;
            d["max_parity_leak"] = rep.max_parity_leak;
            d["entries"] = static_cast<int>(rep.entries.size());
            d["pass"] = rep.pass;
            return d;
        },
        py::arg("cutoff") = 40, py::arg("nu") = 0.0, py::arg("epsilon") = 1,
        py::arg("tol") = 1e-10);

    // qubit layer
    m.def(
        "pauli_mul",
        [](const std::string& a, const std::string& b) {
            return qubit::to_string(
                qubit::pauli_mul(qubit::pauli_from_string(a), qubit::pauli_from_string(b)));
        },
        py::arg("a"), py::arg("b"), "signed word product, e.g. ('+X','+Z') -> '-iY'");
    m.def(
        "pauli_matrix",
        [](const std::string& w) { return qubit::pauli_matrix(qubit::pauli_from_string(w)); },
        py::arg("word"));
    m.def("clifford_membership", &qubit::clifford_membership, py::arg("u"), py::arg("n"),
          py::arg("tol") = 1e-9);
    m.def("jordan_wigner", &qubit::jordan_wigner, py::arg("n"), py::arg("j"));
    m.def(
        "stabilizer_states",
        [](const std::vector<std::string>& words) {
            std::vector<qubit::PauliWord> gens;
            gens.reserve(words.size());
            for (const auto& w : words) gens.push_back(qubit::pauli_from_string(w));
            return qubit::stabilizer_states(gens);
        },
        py::arg("generators"), "orthonormal basis (columns) of the joint +1 eigenspace");
    m.def(
        "projective_orbit",
        [](const ComplexVector& state, const std::vector<ComplexMatrix>& gens, int max_size) {
            return qubit::projective_orbit(state, gens, max_size);
        },
        py::arg("state"), py::arg("generators"), py::arg("max_size") = kDefaultMaxDim);
    m.def("canonical_phase", &qubit::canonical_phase, py::arg("v"), py::arg("threshold") = 1e-9);

    // finite group induction presets
    m.def("group_generators", &presets::group_generators, py::arg("name"));
    m.def("state_preset", &presets::state_preset, py::arg("name"));
    m.def(
        "induce",
        [](const std::string& group, const std::string& subgroup, bool check_irreducible) {
            const auto pre = presets::induction_preset(group, subgroup);
            const auto ind = mackey::induce(pre.group, pre.rep);
            py::dict d;
            d["group_order"] = pre.group.order();
            d["subgroup_order"] = static_cast<int>(pre.rep.subgroup.size());
            d["induced_dim"] = ind.dim;
            d["si_residual"] = mackey::check_imprimitivity(pre.group, ind);
            if (check_irreducible)
                d["commutant_dimension"] =
                    mackey::commutant_dimension(pre.group, ind.unitaries);
            d["character_equivalent_defining"] =
                ind.dim == pre.group.elements.front().rows()
                    ? py::object(py::bool_(mackey::character_equivalent(
                          pre.group, ind.unitaries, pre.group.elements)))
                    : py::object(py::none());
            return d;
        },
        py::arg("group"), py::arg("subgroup"), py::arg("check_irreducible") = false);

    // graded carriers
    m.def(
        "graded_carrier",
        [](int n) {
            const auto c = mackey::graded_carrier(n);
            py::dict d;
            d["dim"] = c.dim;
            d["even_dim"] = c.even_dim;
            d["odd_dim"] = c.odd_dim;
            d["grading"] = c.grading;
            d["form"] = c.form;
            return d;
        },
        py::arg("n") = 2);
    m.def(
        "bebe_fock",
        [](int n) {
            const auto c = mackey::bebe_fock(n);
            py::dict d;
            d["dim"] = c.dim;
            d["even_dim"] = c.even_dim;
            d["odd_dim"] = c.odd_dim;
            d["grading"] = c.grading;
            return d;
        },
        py::arg("n"));

    // report layer: same machinery as the command line tool
    m.def(
        "run_report",
        [](const std::string& command, const py::kwargs& kwargs) {
            report::RunConfig cfg;
            cfg.command = command;
            for (const auto& [key, value] : kwargs)
                report::apply_config_value(cfg, key.cast<std::string>(), to_json(value));
            const auto rr = report::run_command(cfg);
            py::dict d;
            d["json"] = report::dump_json(rr.report);
            d["pass"] = rr.pass;
            d["csv"] = rr.csv;
            return d;
        },
        py::arg("command"),
        "run spectrum/verify/tower/induce/orbit and return the serialized report");
}
