#include "superfock/linalg.hpp"

#include <algorithm>

namespace superfock {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw usage_error("matmul: inner dimensions disagree (" + std::to_string(a.cols()) +
                          " vs " + std::to_string(b.rows()) + ")");
    return a * b;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

EigenResult eig_hermitian(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw usage_error("eig_hermitian: matrix is not square");
    const double scale = std::max(1.0, a.norm());
    const double dev = (a - a.adjoint()).norm();
    if (dev > 1e-10 * scale)
        throw precondition_error("eig_hermitian: ||A - A^+|| = " + std::to_string(dev) +
                                 " exceeds 1e-10 relative bound");
    ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: decomposition failed to converge");
    EigenResult r;
    r.values = solver.eigenvalues();
    r.vectors = solver.eigenvectors();
    r.correction = (a - sym).norm();
    return r;
}

SpanProjection project_onto_span(std::span<const ComplexMatrix> basis,
                                 const ComplexMatrix& target) {
    if (basis.empty()) throw usage_error("project_onto_span: empty basis");
    const Eigen::Index rows = target.rows(), cols = target.cols();
    for (const auto& b : basis)
        if (b.rows() != rows || b.cols() != cols)
            throw usage_error("project_onto_span: basis/target shapes disagree");

    ComplexMatrix stacked(rows * cols, static_cast<Eigen::Index>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        stacked.col(static_cast<Eigen::Index>(k)) = basis[k].reshaped();
    ComplexVector t = target.reshaped();

    SpanProjection p;
    p.coefficients = stacked.colPivHouseholderQr().solve(t);
    p.residual = (stacked * p.coefficients - t).norm();
    return p;
}

std::vector<int> group_degeneracies(const RealVector& values, double gap_tol) {
    std::vector<int> out(static_cast<size_t>(values.size()), 1);
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] >= gap_tol) {
            for (Eigen::Index j = start; j < i; ++j)
                out[static_cast<size_t>(j)] = static_cast<int>(i - start);
            start = i;
        }
    }
    return out;
}

}  // namespace superfock
