#pragma once

#include <string>

#include "superfock/linalg.hpp"

namespace superfock {

enum class Parity { even, odd };

inline Parity parity_product(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

// A matrix tagged with its Klein parity and where it came from.
struct GradedOperator {
    ComplexMatrix mat;
    Parity parity = Parity::even;
    std::string label;
    int cutoff = 0;
    double nu = 0;
};

// [x,y} = xy - (-1)^{p(x)p(y)} yx: anticommutator iff both factors are odd.
ComplexMatrix graded_bracket(const ComplexMatrix& x, const ComplexMatrix& y,
                             Parity px, Parity py);
ComplexMatrix graded_bracket(const GradedOperator& x, const GradedOperator& y);

// ||K m K - (+/-) m||_F: how far m is from having the claimed parity under K.
double parity_residual(const ComplexMatrix& m, const ComplexMatrix& klein, Parity claimed);

}  // namespace superfock
