#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "superfock/report.hpp"

namespace {

using superfock::report::RunConfig;

// File values fill in whatever the command line leaves unset; explicit flags
// win because they are applied by CLI11 after this runs.
void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw superfock::usage_error("cannot read config file '" + path + "'");
    superfock::report::Json doc;
    try {
        doc = superfock::report::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw superfock::usage_error("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        throw superfock::usage_error("config file '" + path + "' must hold a JSON object");
    for (const auto& [key, value] : doc.items())
        superfock::report::apply_config_value(cfg, key, value);
}

std::string find_config_arg(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& config_path) {
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv (csv: spectrum only)");
    sub->add_flag("--timings", cfg.timings, "include wall-clock timings in the report");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;

    try {
        cfg.max_dim = superfock::report::env_max_dim();
        config_path = find_config_arg(argc, argv);
        if (!config_path.empty()) apply_config_file(cfg, config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"truncated Fock space operator algebra toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "superfock 1.0.0");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table of a model Hamiltonian");
    spectrum->add_option("--model", cfg.model, "oscillator | harmonic-susy | wzqm");
    spectrum->add_option("--cutoff", cfg.cutoff, "Fock levels per mode");
    spectrum->add_option("--nu", cfg.nu, "deformation parameter, nu > -1");
    spectrum->add_option("--g0", cfg.g0, "superpotential coupling");
    spectrum->add_option("--h0", cfg.h0, "Yukawa strength (wzqm)");
    spectrum->add_option("--levels", cfg.levels, "eigenvalues to keep (default cutoff/4)");
    spectrum->add_option("--grading", cfg.grading, "fermion_parity | boson_klein");
    spectrum->add_option("--e-tol", cfg.e_tol, "ground energy tolerance (default auto)");
    spectrum->add_option("--gap-tol", cfg.gap_tol, "degeneracy clustering tolerance");
    spectrum->add_option("--max-dim", cfg.max_dim, "dense dimension cap");
    add_common(spectrum, cfg, config_path);

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify->add_option("--suite", cfg.suite,
                       "fock | klein-fermion | susy | pairing | osp | jw | clifford | "
                       "superform | all");
    verify->add_option("--cutoff", cfg.cutoff, "Fock levels");
    verify->add_option("--nu", cfg.nu, "deformation parameter, nu > -1");
    verify->add_option("--g0", cfg.g0, "superpotential coupling");
    verify->add_option("--epsilon", cfg.epsilon, "+1 or -1 (osp suite)");
    verify->add_option("--levels", cfg.levels, "paired levels to compare (pairing suite)");
    verify->add_option("--grading", cfg.grading, "fermion_parity | boson_klein");
    add_common(verify, cfg, config_path);

    auto* tower = app.add_subcommand("tower", "iterated projected supercharges");
    tower->add_option("--cutoff", cfg.cutoff, "Fock levels");
    tower->add_option("--nu", cfg.nu, "deformation parameter, nu > -1");
    tower->add_option("--g0", cfg.g0, "superpotential coupling");
    tower->add_option("--signs", cfg.signs, "projector signs per level, e.g. +-+");
    tower->add_option("--depth", cfg.depth, "tower depth (all + signs when set alone)");
    tower->add_option("--grading", cfg.grading, "fermion_parity | boson_klein");
    tower->add_option("--e-tol", cfg.e_tol, "ground energy tolerance (default auto)");
    tower->add_option("--gap-tol", cfg.gap_tol, "degeneracy clustering tolerance");
    add_common(tower, cfg, config_path);

    auto* induce = app.add_subcommand("induce", "induced representation of a preset pair");
    induce->add_option("--group", cfg.group, "pauli1 | pauli2 | bell16 | clifford1");
    induce->add_option("--subgroup", cfg.subgroup, "preset subgroup name, e.g. bell");
    induce->add_flag("--check-si", cfg.check_si, "check the imprimitivity residual");
    induce->add_flag("--check-irreducible", cfg.check_irreducible,
                     "check that the commutant is one-dimensional");
    add_common(induce, cfg, config_path);

    auto* orbit = app.add_subcommand("orbit", "projective orbit of a preset state");
    orbit->add_option("--group", cfg.group, "pauli1 | pauli2 | bell16 | clifford1");
    orbit->add_option("--state", cfg.state, "preset state name, e.g. phi-plus");
    orbit->add_option("--max-dim", cfg.max_dim, "orbit size cap");
    add_common(orbit, cfg, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        const auto rr = superfock::report::run_command(cfg);
        const std::string json_text = superfock::report::dump_json(rr.report);
        if (cfg.format == "csv") {
            if (cfg.output.empty()) {
                std::cout << rr.csv;
            } else {
                superfock::report::write_text_atomic(cfg.output, rr.csv);
                std::cout << json_text;
            }
        } else {
            if (cfg.output.empty()) std::cout << json_text;
            else superfock::report::write_text_atomic(cfg.output, json_text);
        }
        return rr.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
