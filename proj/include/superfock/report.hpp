#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "superfock/linalg.hpp"

namespace superfock::report {

using Json = nlohmann::ordered_json;

// Effective run parameters. Precedence: CLI flag > config file > environment
// (SUPERFOCK_MAX_DIM only) > built-in default.
struct RunConfig {
    std::string command;  // spectrum | verify | tower | induce | orbit

    std::string model = "harmonic-susy";  // spectrum: oscillator | harmonic-susy | wzqm
    std::string suite = "all";            // verify
    std::string group = "pauli2";         // induce, orbit
    std::string subgroup = "bell";        // induce
    std::string state = "phi-plus";       // orbit
    std::string grading = "fermion_parity";
    std::string signs = "+";              // tower projector signs, e.g. "+-+"

    int cutoff = 64;
    double nu = 0.0;
    double g0 = 0.0;
    double h0 = 0.0;
    double epsilon = 1.0;   // osp suite, +-1
    int levels = 0;         // 0 = module default
    int depth = 0;          // 0 = length of signs
    double e_tol = -1.0;    // <0 = auto
    double gap_tol = 1e-6;
    int max_dim = kDefaultMaxDim;
    bool check_si = false;
    bool check_irreducible = false;
    bool timings = false;

    std::string format = "json";  // json | csv (csv: spectrum only)
    std::string output;           // empty = stdout
};

struct RunResult {
    Json report;
    bool pass = true;
    std::string csv;  // nonempty only for spectrum runs
};

// Dispatches to the modules and assembles the machine-readable report.
// Throws usage_error / precondition_error / resource_error for bad configs.
RunResult run_command(const RunConfig& cfg);

// Fixed float formatting (17 significant digits, locale-free) so identical
// configs produce byte-identical reports. Two-space indent, trailing newline.
std::string dump_json(const Json& j);

// Rows index,eigenvalue,degeneracy,sector from a spectrum results block.
std::string render_csv(const Json& results);

// Temp file in the target directory + rename.
void write_text_atomic(const std::string& path, const std::string& content);

// Keys a config file may set for the given command; unknown keys are a usage
// error. Hyphens and underscores are interchangeable, so the CLI long-flag
// spellings work verbatim.
std::vector<std::string> config_keys(const std::string& command);
void apply_config_value(RunConfig& cfg, const std::string& key, const Json& value);

int env_max_dim();  // SUPERFOCK_MAX_DIM, or the built-in default

}  // namespace superfock::report
