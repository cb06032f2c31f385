#pragma once

#include <array>
#include <string>
#include <vector>

#include "superfock/fock.hpp"

namespace superfock::osp {

// Quadratic + Klein-projected generator family over the deformed oscillator:
//   T3 = {a,a+}/2, T+ = (a+)^2, T- = a^2, J = -(eps/2) K [a,a+]   (even)
//   Q^+- = a^+- Pi_{-+eps},  S^+- = a^+- Pi_{+-eps}                (odd)
struct GeneratorSet {
    std::array<GradedOperator, 8> gens;  // T3, T+, T-, J, Q+, Q-, S+, S-
    int epsilon = +1;
    fock::FockSpec spec;

    static constexpr std::array<const char*, 8> names = {
        "T3", "T+", "T-", "J", "Q+", "Q-", "S+", "S-"};
};

GeneratorSet build_generators(const fock::FockSpec& spec, int epsilon);

struct BracketEntry {
    std::string a, b;          // generator names
    Parity bracket_parity = Parity::even;
    ComplexVector coefficients;  // expansion over {generators..., I}
    double residual = 0;
    double parity_leak = 0;    // largest coefficient on a wrong-parity basis element
};

struct ClosureReport {
    std::vector<BracketEntry> entries;  // all ordered pairs
    double max_residual = 0;
    double max_parity_leak = 0;
    double tolerance = 0;
    bool pass = false;
};

// Graded bracket of every ordered generator pair, expanded over
// span{generators, I} with everything compressed to the interior subspace.
ClosureReport closure_report(const GeneratorSet& gs, double tolerance = 1e-10);

}  // namespace superfock::osp
