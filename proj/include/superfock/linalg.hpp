#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "superfock/errors.hpp"

namespace superfock {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hard ceiling for dense work unless overridden (env SUPERFOCK_MAX_DIM or CLI).
inline constexpr int kDefaultMaxDim = 4096;

struct EigenResult {
    RealVector values;       // ascending
    ComplexMatrix vectors;   // columns, same order as values
    double correction = 0;   // ||A - (A+A^+)/2||_F applied before decomposing
};

struct SpanProjection {
    ComplexVector coefficients;  // one per basis element, in input order
    double residual = 0;         // ||target - sum_i c_i B_i||_F
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// kron(a,b): block at (i,j) is a(i,j)*b. Left factor owns the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian eigendecomposition. Requires ||A - A^+||_F <= 1e-10 * max(1, ||A||_F);
// the input is symmetrized to (A + A^+)/2 and the applied correction reported.
EigenResult eig_hermitian(const ComplexMatrix& a);

// Least-squares expansion of target in span{basis}. Empty basis is a usage error.
SpanProjection project_onto_span(std::span<const ComplexMatrix> basis,
                                 const ComplexMatrix& target);

// Group ascending eigenvalues into degenerate clusters: a new cluster starts
// whenever the gap to the previous value reaches gap_tol.
std::vector<int> group_degeneracies(const RealVector& values, double gap_tol);

inline double frob(const ComplexMatrix& m) { return m.norm(); }

}  // namespace superfock
