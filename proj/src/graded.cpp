#include "superfock/graded.hpp"

namespace superfock {

ComplexMatrix graded_bracket(const ComplexMatrix& x, const ComplexMatrix& y,
                             Parity px, Parity py) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
        throw usage_error("graded_bracket: operands must be square and same size");
    if (px == Parity::odd && py == Parity::odd) return x * y + y * x;
    return x * y - y * x;
}

ComplexMatrix graded_bracket(const GradedOperator& x, const GradedOperator& y) {
    return graded_bracket(x.mat, y.mat, x.parity, y.parity);
}

double parity_residual(const ComplexMatrix& m, const ComplexMatrix& klein, Parity claimed) {
    const double sign = claimed == Parity::even ? 1.0 : -1.0;
    return (klein * m * klein - sign * m).norm();
}

}  // namespace superfock
