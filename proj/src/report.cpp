#include "superfock/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "superfock/fock.hpp"
#include "superfock/mackey.hpp"
#include "superfock/osp.hpp"
#include "superfock/presets.hpp"
#include "superfock/qubit.hpp"
#include "superfock/susy.hpp"

namespace superfock::report {

namespace {

// Echoed in every report; also seeds the sampled checks (superform suite).
constexpr std::uint64_t kSeed = 1234567;

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::logic_error("report: non-finite value");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc()) throw std::logic_error("report: float formatting failed");
    return std::string(buf, ptr);
}

void dump_rec(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (const auto& [key, val] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + Json(key).dump() + ": ";
                dump_rec(val, out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& val : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_rec(val, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();  // strings (escaped), ints, bools, null
            return;
    }
}

struct CheckSet {
    Json checks = Json::object();
    bool all_pass = true;

    void add(const std::string& name, double value, double expected, double tolerance) {
        const bool ok = std::abs(value - expected) <= tolerance;
        Json c = Json::object();
        c["pass"] = ok;
        c["value"] = value;
        c["expected"] = expected;
        c["tolerance"] = tolerance;
        checks[name] = std::move(c);
        all_pass = all_pass && ok;
    }
};

susy::TowerGrading parse_grading(const std::string& s) {
    if (s == "fermion_parity") return susy::TowerGrading::fermion_parity;
    if (s == "boson_klein") return susy::TowerGrading::boson_klein;
    throw usage_error("unknown grading '" + s + "'; use fermion_parity or boson_klein");
}

std::vector<int> parse_signs(const std::string& s) {
    if (s.empty()) throw usage_error("signs must be a nonempty string of + and -");
    std::vector<int> out;
    for (char c : s) {
        if (c == '+') out.push_back(+1);
        else if (c == '-') out.push_back(-1);
        else throw usage_error(std::string("signs: bad character '") + c + "'");
    }
    return out;
}

Json real_vector(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json int_vector(std::span<const int> v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

Json spectrum_block(const susy::SpectrumReport& sp) {
    Json r = Json::object();
    r["eigenvalues"] = real_vector(sp.eigenvalues);
    r["degeneracies"] = int_vector(sp.degeneracies);
    r["sectors"] = int_vector(sp.sectors);
    r["ground_energy"] = sp.ground_energy;
    r["breaking"] = susy::to_string(sp.breaking);
    r["e_tol_applied"] = sp.e_tol;
    r["gap_tol_applied"] = sp.gap_tol;
    return r;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// ---------------------------------------------------------------- suites

// Every dense allocation goes through this; max_dim comes from the flag,
// the config file, or SUPERFOCK_MAX_DIM.
void require_dense_dim(long dim, int max_dim) {
    if (dim > max_dim)
        throw resource_error("dense dimension " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(max_dim));
}

void suite_fock(const RunConfig& cfg, CheckSet& cs, Json&) {
    require_dense_dim(cfg.cutoff, cfg.max_dim);
    const fock::FockSpec fs{cfg.cutoff, cfg.nu};
    for (const auto& [name, value] : fock::audit_relations(fs)) cs.add(name, value, 0.0, 1e-12);
}

void suite_klein_fermion(const RunConfig& cfg, CheckSet& cs, Json& residuals) {
    require_dense_dim(cfg.cutoff, cfg.max_dim);
    const fock::FockSpec fs{cfg.cutoff, cfg.nu};
    const auto audit = fock::klein_fermion_audit(fs);
    // Only the projected squares vanish identically; the rest is reported as-is.
    cs.add("psi_plus_sq", audit.at("psi_plus_sq"), 0.0, 1e-12);
    cs.add("psi_minus_sq", audit.at("psi_minus_sq"), 0.0, 1e-12);
    for (const char* key : {"psi_literal_sq", "psi_literal_car", "psi_plus_car", "psi_minus_car"})
        residuals[key] = audit.at(key);
}

void suite_susy(const RunConfig& cfg, CheckSet& cs, Json&) {
    require_dense_dim(2L * cfg.cutoff, cfg.max_dim);
    const susy::ModelParams mp{cfg.cutoff, cfg.nu, cfg.g0, cfg.h0};
    const auto pair = susy::build_supercharge_1d(mp, parse_grading(cfg.grading));
    cs.add("q_squared", (pair.Q * pair.Q).norm(), 0.0, 1e-12);
    cs.add("h_hermitian", (pair.H - pair.H.adjoint()).norm(), 0.0, 1e-12);
    cs.add("parity_residual", pair.parity_residual, 0.0, 1e-10);
}

void suite_pairing(const RunConfig& cfg, CheckSet& cs, Json& residuals) {
    require_dense_dim(2L * cfg.cutoff, cfg.max_dim);
    const susy::ModelParams mp{cfg.cutoff, cfg.nu, cfg.g0, cfg.h0};
    const auto pair = susy::build_supercharge_1d(mp, parse_grading(cfg.grading));
    const int k = cfg.levels > 0 ? cfg.levels : std::min(8, cfg.cutoff / 4);
    const auto rep = susy::partner_pairing_check(pair, k, 1e-6);
    cs.add("pairing_max_diff", rep.max_abs_diff, 0.0, 1e-6);
    Json pairs = Json::array();
    for (const auto& [up, dn] : rep.pairs) pairs.push_back(Json::array({up, dn}));
    residuals["pairing_levels"] = k;
    residuals["pairing_pairs"] = std::move(pairs);
}

void suite_osp(const RunConfig& cfg, CheckSet& cs, Json& residuals) {
    const int eps = static_cast<int>(cfg.epsilon);
    if ((eps != 1 && eps != -1) || static_cast<double>(eps) != cfg.epsilon)
        throw usage_error("epsilon must be +1 or -1");
    require_dense_dim(cfg.cutoff, cfg.max_dim);
    const fock::FockSpec fs{cfg.cutoff, cfg.nu};
    const auto gs = osp::build_generators(fs, eps);
    const auto rep = osp::closure_report(gs, 1e-10);
    cs.add("closure_residual", rep.max_residual, 0.0, 1e-10);
    cs.add("parity_leak", rep.max_parity_leak, 0.0, 1e-10);

    auto gen = [&](const char* name) -> const ComplexMatrix& {
        for (size_t i = 0; i < gs.names.size(); ++i)
            if (gs.names[i] == std::string(name)) return gs.gens[i].mat;
        throw std::logic_error("osp suite: unknown generator name");
    };
    const double adj = (gen("T+") - gen("T-").adjoint()).norm() +
                       (gen("Q+") - gen("Q-").adjoint()).norm() +
                       (gen("S+") - gen("S-").adjoint()).norm();
    cs.add("adjoint_pairs", adj, 0.0, 1e-14);
    residuals["closure_entries"] = static_cast<int>(rep.entries.size());
}

void suite_jw(const RunConfig&, CheckSet& cs, Json&) {
    const int n = 3;
    const auto c = qubit::jordan_wigner_all(n);
    const Eigen::Index dim = Eigen::Index(1) << n;
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    double car_cc = 0, car_mixed = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
            car_cc = std::max(car_cc, (c[si] * c[sj] + c[sj] * c[si]).norm());
            const ComplexMatrix mixed =
                c[si] * c[sj].adjoint() + c[sj].adjoint() * c[si] - (i == j ? 1.0 : 0.0) * id;
            car_mixed = std::max(car_mixed, mixed.norm());
        }
    cs.add("jw_car_commutators", car_cc, 0.0, 1e-14);
    cs.add("jw_car_mixed", car_mixed, 0.0, 1e-14);

    const ComplexMatrix parity = qubit::pauli_matrix(qubit::pauli_from_string("+ZZZ"));
    double odd = 0;
    for (const auto& cj : c) odd = std::max(odd, (parity * cj + cj * parity).norm());
    cs.add("jw_parity_odd", odd, 0.0, 1e-14);
}

void suite_clifford(const RunConfig&, CheckSet& cs, Json&) {
    const auto gens = qubit::clifford_generators(1);
    const auto group = mackey::generate_group(gens, 512);
    cs.add("clifford_order", group.order(), 192, 0.0);
    cs.add("contains_h", qubit::clifford_membership(gens[0], 1) ? 1.0 : 0.0, 1.0, 0.0);
    cs.add("contains_s", qubit::clifford_membership(gens[1], 1) ? 1.0 : 0.0, 1.0, 0.0);
    ComplexMatrix t = ComplexMatrix::Identity(2, 2);
    t(1, 1) = std::exp(cplx(0, std::atan(1.0)));  // pi/4 phase
    cs.add("excludes_t", qubit::clifford_membership(t, 1) ? 1.0 : 0.0, 0.0, 0.0);
}

void suite_superform(const RunConfig&, CheckSet& cs, Json&) {
    const auto carrier = mackey::graded_carrier(2);
    const Eigen::Index d = carrier.dim;
    cs.add("grading_squares",
           (carrier.grading * carrier.grading - ComplexMatrix::Identity(d, d)).norm(), 0.0, 1e-14);
    cs.add("projectors_orthogonal", (carrier.p_even * carrier.p_odd).norm(), 0.0, 1e-14);

    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> dist;
    auto rand_vec = [&] {
        ComplexVector v(d);
        for (Eigen::Index i = 0; i < d; ++i) v[i] = cplx(dist(rng), dist(rng));
        return v;
    };
    auto rand_mat = [&] {
        ComplexMatrix m(d, d);
        for (Eigen::Index c = 0; c < d; ++c) m.col(c) = rand_vec();
        return m;
    };

    double even_res = 0, odd_res = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix r = rand_mat();
        const ComplexMatrix t_even =
            carrier.p_even * r * carrier.p_even + carrier.p_odd * r * carrier.p_odd;
        const ComplexMatrix t_odd =
            carrier.p_even * r * carrier.p_odd + carrier.p_odd * r * carrier.p_even;
        const ComplexMatrix te_adj = mackey::super_adjoint(t_even, carrier, Parity::even);
        const ComplexMatrix to_adj = mackey::super_adjoint(t_odd, carrier, Parity::odd);

        const ComplexVector x = rand_vec(), y = rand_vec();
        even_res = std::max(even_res,
                            std::abs(mackey::super_form(carrier, t_even * x, y) -
                                     mackey::super_form(carrier, x, te_adj * y)));
        // odd T: sign (-1)^{p(x)} with homogeneous x
        const ComplexVector xe = carrier.p_even * x, xo = carrier.p_odd * x;
        odd_res = std::max(odd_res, std::abs(mackey::super_form(carrier, t_odd * xe, y) -
                                             mackey::super_form(carrier, xe, to_adj * y)));
        odd_res = std::max(odd_res, std::abs(mackey::super_form(carrier, t_odd * xo, y) +
                                             mackey::super_form(carrier, xo, to_adj * y)));
    }
    cs.add("even_adjoint_relation", even_res, 0.0, 1e-11);
    cs.add("odd_adjoint_relation", odd_res, 0.0, 1e-11);

    const auto bebe = mackey::bebe_fock(2);
    cs.add("bebe_dim_two", bebe.dim, 5.0, 0.0);
    const auto bebe4 = mackey::bebe_fock(4);
    cs.add("bebe_grading_squares",
           (bebe4.grading * bebe4.grading -
            ComplexMatrix::Identity(bebe4.dim, bebe4.dim)).norm(), 0.0, 1e-14);
}

using SuiteFn = void (*)(const RunConfig&, CheckSet&, Json&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"fock", suite_fock},           {"klein-fermion", suite_klein_fermion},
        {"susy", suite_susy},           {"pairing", suite_pairing},
        {"osp", suite_osp},             {"jw", suite_jw},
        {"clifford", suite_clifford},   {"superform", suite_superform},
    };
    return table;
}

// ---------------------------------------------------------------- commands

Json base_report(const std::string& command) {
    Json rep = Json::object();
    rep["schema_version"] = "1";
    rep["command"] = command;
    return rep;
}

RunResult cmd_verify(const RunConfig& cfg) {
    CheckSet cs;
    Json residuals = Json::object();
    bool found = false;
    for (const auto& [name, fn] : suite_table()) {
        if (cfg.suite == name || cfg.suite == "all") {
            fn(cfg, cs, residuals);
            found = true;
        }
    }
    if (!found) {
        std::string known = "all";
        for (const auto& [name, fn] : suite_table()) known += ", " + name;
        throw usage_error("unknown suite '" + cfg.suite + "'; known: " + known);
    }

    RunResult rr;
    rr.pass = cs.all_pass;
    rr.report = base_report("verify");
    rr.report["pass"] = rr.pass;
    Json params = Json::object();
    params["suite"] = cfg.suite;
    params["cutoff"] = cfg.cutoff;
    params["nu"] = cfg.nu;
    params["g0"] = cfg.g0;
    params["epsilon"] = cfg.epsilon;
    params["levels"] = cfg.levels;
    params["grading"] = cfg.grading;
    rr.report["params"] = std::move(params);
    Json results = Json::object();
    results["residuals"] = std::move(residuals);
    results["checks"] = std::move(cs.checks);
    rr.report["results"] = std::move(results);
    return rr;
}

RunResult cmd_spectrum(const RunConfig& cfg) {
    susy::SpectrumReport sp;
    if (cfg.model == "oscillator") {
        require_dense_dim(cfg.cutoff, cfg.max_dim);
        const fock::FockSpec fs{cfg.cutoff, cfg.nu};
        const Eigen::Index d = cfg.cutoff;
        const ComplexMatrix h = fock::build_number(fs).mat.topLeftCorner(d - 2, d - 2);
        const ComplexMatrix k = fock::build_klein(fs).mat.topLeftCorner(d - 2, d - 2);
        sp = susy::analyze_spectrum(h, k, cfg.levels > 0 ? cfg.levels : cfg.cutoff / 4,
                                    cfg.e_tol, cfg.gap_tol);
    } else if (cfg.model == "harmonic-susy" || cfg.model == "susy1d") {
        require_dense_dim(2L * cfg.cutoff, cfg.max_dim);
        const susy::ModelParams mp{cfg.cutoff, cfg.nu, cfg.g0, cfg.h0};
        const auto pair = susy::build_supercharge_1d(mp, parse_grading(cfg.grading));
        sp = susy::analyze_spectrum(susy::compress_interior_1d(pair.H, cfg.cutoff),
                                    susy::compress_interior_1d(pair.klein, cfg.cutoff),
                                    cfg.levels > 0 ? cfg.levels : cfg.cutoff / 4,
                                    cfg.e_tol, cfg.gap_tol);
    } else if (cfg.model == "wzqm") {
        const susy::ModelParams mp{cfg.cutoff, cfg.nu, cfg.g0, cfg.h0};
        const ComplexMatrix h = susy::build_wzqm_hamiltonian(mp, cfg.max_dim);
        ComplexMatrix z2 = ComplexMatrix::Identity(2, 2);
        z2(1, 1) = -1.0;
        const ComplexMatrix k =
            kron(ComplexMatrix::Identity(cfg.cutoff * cfg.cutoff, cfg.cutoff * cfg.cutoff),
                 kron(z2, z2));
        sp = susy::analyze_spectrum(susy::compress_interior_2mode(h, cfg.cutoff),
                                    susy::compress_interior_2mode(k, cfg.cutoff),
                                    cfg.levels > 0 ? cfg.levels : cfg.cutoff / 4,
                                    cfg.e_tol, cfg.gap_tol);
    } else {
        throw usage_error("unknown model '" + cfg.model +
                          "'; known: oscillator, harmonic-susy, wzqm");
    }

    RunResult rr;
    rr.pass = true;
    rr.report = base_report("spectrum");
    rr.report["pass"] = true;
    Json params = Json::object();
    params["model"] = cfg.model;
    params["cutoff"] = cfg.cutoff;
    params["nu"] = cfg.nu;
    params["g0"] = cfg.g0;
    params["h0"] = cfg.h0;
    params["levels"] = cfg.levels;
    params["grading"] = cfg.grading;
    params["max_dim"] = cfg.max_dim;
    rr.report["params"] = std::move(params);
    Json results = spectrum_block(sp);
    results["checks"] = Json::object();
    rr.report["results"] = std::move(results);
    rr.csv = render_csv(rr.report["results"]);
    return rr;
}

RunResult cmd_tower(const RunConfig& cfg) {
    std::vector<int> signs = parse_signs(cfg.signs);
    if (cfg.depth > 0) {
        if (cfg.signs == "+" && cfg.depth != 1)
            signs.assign(static_cast<size_t>(cfg.depth), +1);
        else if (cfg.depth != static_cast<int>(signs.size()))
            throw usage_error("depth disagrees with the length of signs");
    }
    std::string effective_signs;
    for (int s : signs) effective_signs += (s > 0 ? '+' : '-');
    require_dense_dim(2L * cfg.cutoff, cfg.max_dim);
    const susy::ModelParams mp{cfg.cutoff, cfg.nu, cfg.g0, cfg.h0};
    const auto pair = susy::build_supercharge_1d(mp, parse_grading(cfg.grading));
    const auto tower = susy::build_tower(pair, signs, cfg.e_tol, cfg.gap_tol);

    CheckSet cs;
    Json levels = Json::array();
    for (const auto& lvl : tower) {
        Json l = Json::object();
        l["depth"] = lvl.depth;
        l["sign"] = lvl.sign;
        l["nilpotency_residual"] = lvl.nilpotency_residual;
        l["identity_residual"] = lvl.identity_residual;
        l["spectrum"] = spectrum_block(lvl.spectrum);
        levels.push_back(std::move(l));
        const std::string suffix = "_level_" + std::to_string(lvl.depth);
        cs.add("nilpotency" + suffix, lvl.nilpotency_residual, 0.0, 1e-12);
        cs.add("identity" + suffix, lvl.identity_residual, 0.0, 1e-10);
    }

    RunResult rr;
    rr.pass = cs.all_pass;
    rr.report = base_report("tower");
    rr.report["pass"] = rr.pass;
    Json params = Json::object();
    params["cutoff"] = cfg.cutoff;
    params["nu"] = cfg.nu;
    params["g0"] = cfg.g0;
    params["signs"] = effective_signs;
    params["grading"] = cfg.grading;
    rr.report["params"] = std::move(params);
    Json results = Json::object();
    results["levels"] = std::move(levels);
    results["checks"] = std::move(cs.checks);
    rr.report["results"] = std::move(results);
    return rr;
}

RunResult cmd_induce(const RunConfig& cfg) {
    const auto preset = presets::induction_preset(cfg.group, cfg.subgroup);
    const auto& group = preset.group;
    const auto ind = mackey::induce(group, preset.rep);
    const int order = group.order();
    const int sub_order = static_cast<int>(preset.rep.subgroup.size());

    double unitarity = 0;
    const ComplexMatrix id = ComplexMatrix::Identity(ind.dim, ind.dim);
    for (const auto& u : ind.unitaries)
        unitarity = std::max(unitarity, (u.adjoint() * u - id).norm());

    // All pairs at stabilizer scale; generator pairs above that.
    double homomorphism = 0;
    if (order <= 64) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                const int ab = group.table[static_cast<size_t>(a)][static_cast<size_t>(b)];
                homomorphism = std::max(
                    homomorphism, (ind.unitaries[static_cast<size_t>(ab)] -
                                   ind.unitaries[static_cast<size_t>(a)] *
                                       ind.unitaries[static_cast<size_t>(b)]).norm());
            }
    } else {
        for (int a : group.generator_indices)
            for (int b = 0; b < order; ++b) {
                const int ab = group.table[static_cast<size_t>(a)][static_cast<size_t>(b)];
                homomorphism = std::max(
                    homomorphism, (ind.unitaries[static_cast<size_t>(ab)] -
                                   ind.unitaries[static_cast<size_t>(a)] *
                                       ind.unitaries[static_cast<size_t>(b)]).norm());
            }
    }

    const double si = mackey::check_imprimitivity(group, ind);

    std::string char_bytes;
    for (const auto& u : ind.unitaries) {
        const cplx tr = u.trace();
        char_bytes += format_double(tr.real()) + "," + format_double(tr.imag()) + ";";
    }
    const std::string char_hash = hex64(fnv1a(char_bytes));

    Json char_equiv = nullptr;
    const Eigen::Index def_dim = group.elements.front().rows();
    if (ind.dim == def_dim)
        char_equiv = mackey::character_equivalent(group, ind.unitaries, group.elements, 1e-9);

    CheckSet cs;
    cs.add("frobenius_dimension", ind.dim,
           static_cast<double>(order / sub_order * preset.rep.dim), 0.0);
    cs.add("unitarity_residual", unitarity, 0.0, 1e-12);
    cs.add("homomorphism_residual", homomorphism, 0.0, 1e-11);
    if (cfg.check_si) cs.add("si_residual", si, 0.0, 1e-12);

    Json commutant = nullptr;
    if (cfg.check_irreducible) {
        if (ind.dim > 32)
            throw resource_error("commutant solve above desk scale (dim " +
                                 std::to_string(ind.dim) + " > 32)");
        const int cd = mackey::commutant_dimension(group, ind.unitaries);
        commutant = cd;
        cs.add("commutant_dimension", cd, 1.0, 0.0);
    }

    RunResult rr;
    rr.pass = cs.all_pass;
    rr.report = base_report("induce");
    rr.report["pass"] = rr.pass;
    Json params = Json::object();
    params["group"] = cfg.group;
    params["subgroup"] = cfg.subgroup;
    params["check_si"] = cfg.check_si;
    params["check_irreducible"] = cfg.check_irreducible;
    rr.report["params"] = std::move(params);

    Json results = Json::object();
    results["group_order"] = order;
    results["subgroup_order"] = sub_order;
    results["index"] = order / sub_order;
    results["block_dim"] = ind.block_dim;
    results["induced_dim"] = ind.dim;
    results["transversal"] = int_vector(ind.cosets.transversal);
    Json residuals = Json::object();
    residuals["unitarity"] = unitarity;
    residuals["homomorphism"] = homomorphism;
    residuals["si_residual"] = si;
    results["residuals"] = std::move(residuals);
    results["character_hash"] = char_hash;
    results["character_equivalent_defining"] = std::move(char_equiv);
    results["commutant_dimension"] = std::move(commutant);
    results["checks"] = std::move(cs.checks);
    rr.report["results"] = std::move(results);
    return rr;
}

RunResult cmd_orbit(const RunConfig& cfg) {
    const auto gens = presets::group_generators(cfg.group);
    const ComplexVector state = presets::state_preset(cfg.state);
    if (gens.front().rows() != state.size())
        throw usage_error("state dimension does not match the group '" + cfg.group + "'");
    const auto orbit = qubit::projective_orbit(state, gens, cfg.max_dim);

    Json states = Json::array();
    for (const auto& v : orbit) {
        Json comps = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            comps.push_back(Json::array({v[i].real(), v[i].imag()}));
        states.push_back(std::move(comps));
    }

    RunResult rr;
    rr.pass = true;
    rr.report = base_report("orbit");
    rr.report["pass"] = true;
    Json params = Json::object();
    params["group"] = cfg.group;
    params["state"] = cfg.state;
    params["max_dim"] = cfg.max_dim;
    rr.report["params"] = std::move(params);
    Json results = Json::object();
    results["orbit_size"] = static_cast<int>(orbit.size());
    results["dim"] = static_cast<int>(state.size());
    results["states"] = std::move(states);
    results["checks"] = Json::object();
    rr.report["results"] = std::move(results);
    return rr;
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "csv")
        throw usage_error("format must be json or csv");
    if (cfg.format == "csv" && cfg.command != "spectrum")
        throw usage_error("csv output is only available for the spectrum command");

    const auto start = std::chrono::steady_clock::now();
    RunResult rr;
    if (cfg.command == "spectrum") rr = cmd_spectrum(cfg);
    else if (cfg.command == "verify") rr = cmd_verify(cfg);
    else if (cfg.command == "tower") rr = cmd_tower(cfg);
    else if (cfg.command == "induce") rr = cmd_induce(cfg);
    else if (cfg.command == "orbit") rr = cmd_orbit(cfg);
    else
        throw usage_error("unknown command '" + cfg.command +
                          "'; known: spectrum, verify, tower, induce, orbit");

    if (cfg.timings) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
        Json t = Json::object();
        t["total"] = ms;
        rr.report["timings_ms"] = std::move(t);
    } else {
        rr.report["timings_ms"] = nullptr;
    }
    rr.report["seed"] = kSeed;
    return rr;
}

std::string dump_json(const Json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

std::string render_csv(const Json& results) {
    const auto& ev = results.at("eigenvalues");
    const auto& deg = results.at("degeneracies");
    const auto& sec = results.at("sectors");
    std::string out = "index,eigenvalue,degeneracy,sector\n";
    for (size_t i = 0; i < ev.size(); ++i) {
        out += std::to_string(i) + "," + format_double(ev[i].get<double>()) + "," +
               std::to_string(deg[i].get<int>()) + "," + std::to_string(sec[i].get<int>()) + "\n";
    }
    return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw usage_error("cannot open output path '" + path + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw usage_error("short write to '" + path + "'");
    }
    fs::rename(tmp, target);
}

std::vector<std::string> config_keys(const std::string&) {
    return {"model",  "suite",  "group",   "subgroup", "state",   "grading",
            "signs",  "cutoff", "nu",      "g0",       "h0",      "epsilon",
            "levels", "depth",  "e_tol",   "gap_tol",  "max_dim", "check_si",
            "check_irreducible", "timings", "format",  "output"};
}

void apply_config_value(RunConfig& cfg, const std::string& raw_key, const Json& value) {
    // Accept the CLI spelling too: --gap-tol and gap_tol name the same knob.
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '-', '_');
    auto as_str = [&](std::string& dst) {
        if (!value.is_string()) throw usage_error("config key '" + key + "' must be a string");
        dst = value.get<std::string>();
    };
    auto as_int = [&](int& dst) {
        if (!value.is_number_integer())
            throw usage_error("config key '" + key + "' must be an integer");
        dst = value.get<int>();
    };
    auto as_double = [&](double& dst) {
        if (!value.is_number())
            throw usage_error("config key '" + key + "' must be a number");
        dst = value.get<double>();
    };
    auto as_bool = [&](bool& dst) {
        if (!value.is_boolean()) throw usage_error("config key '" + key + "' must be a boolean");
        dst = value.get<bool>();
    };

    if (key == "model") as_str(cfg.model);
    else if (key == "suite") as_str(cfg.suite);
    else if (key == "group") as_str(cfg.group);
    else if (key == "subgroup") as_str(cfg.subgroup);
    else if (key == "state") as_str(cfg.state);
    else if (key == "grading") as_str(cfg.grading);
    else if (key == "signs") as_str(cfg.signs);
    else if (key == "cutoff") as_int(cfg.cutoff);
    else if (key == "nu") as_double(cfg.nu);
    else if (key == "g0") as_double(cfg.g0);
    else if (key == "h0") as_double(cfg.h0);
    else if (key == "epsilon") as_double(cfg.epsilon);
    else if (key == "levels") as_int(cfg.levels);
    else if (key == "depth") as_int(cfg.depth);
    else if (key == "e_tol") as_double(cfg.e_tol);
    else if (key == "gap_tol") as_double(cfg.gap_tol);
    else if (key == "max_dim") as_int(cfg.max_dim);
    else if (key == "check_si") as_bool(cfg.check_si);
    else if (key == "check_irreducible") as_bool(cfg.check_irreducible);
    else if (key == "timings") as_bool(cfg.timings);
    else if (key == "format") as_str(cfg.format);
    else if (key == "output") as_str(cfg.output);
    else throw usage_error("unknown config key '" + key + "'");
}

int env_max_dim() {
    const char* env = std::getenv("SUPERFOCK_MAX_DIM");
    if (env == nullptr || *env == '\0') return kDefaultMaxDim;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0 || v > 1000000)
        throw usage_error("SUPERFOCK_MAX_DIM must be a positive integer");
    return static_cast<int>(v);
}

}  // namespace superfock::report
