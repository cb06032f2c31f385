#include "doctest.h"
#include "superfock/linalg.hpp"

using namespace superfock;

namespace {

ComplexMatrix m22(cplx a, cplx b, cplx c, cplx d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("kron places scaled copies of the right factor blockwise") {
    const ComplexMatrix a = m22(1, 2, 3, 4);
    const ComplexMatrix b = m22(0, 1, 1, 0);
    ComplexMatrix expect(4, 4);
    expect << 0, 1, 0, 2,
              1, 0, 2, 0,
              0, 3, 0, 4,
              3, 0, 4, 0;
    CHECK((kron(a, b) - expect).norm() == 0.0);
    CHECK(kron(a, b).rows() == 4);
}

TEST_CASE("matmul validates inner dimensions") {
    const ComplexMatrix a = ComplexMatrix::Zero(2, 3);
    const ComplexMatrix b = ComplexMatrix::Zero(2, 2);
    CHECK_THROWS_AS(matmul(a, b), usage_error);
    CHECK(matmul(a, ComplexMatrix::Identity(3, 3)).rows() == 2);
}

TEST_CASE("eig_hermitian returns ascending values and unitary vectors") {
    const cplx i(0, 1);
    const ComplexMatrix h = m22(2, i, -i, 2);  // eigenvalues 1, 3
    const EigenResult r = eig_hermitian(h);
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.values[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.correction == doctest::Approx(0.0));
    CHECK((r.vectors.adjoint() * r.vectors - ComplexMatrix::Identity(2, 2)).norm() < 1e-13);
    CHECK((h * r.vectors.col(0) - r.values[0] * r.vectors.col(0)).norm() < 1e-13);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    CHECK_THROWS_AS(eig_hermitian(m22(0, 1, 0, 0)), precondition_error);
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), usage_error);
}

TEST_CASE("project_onto_span recovers exact coefficients") {
    const ComplexMatrix b1 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix b2 = m22(0, 1, 1, 0);
    const std::vector<ComplexMatrix> basis{b1, b2};
    const SpanProjection p = project_onto_span(basis, 2.0 * b1 + 3.0 * b2);
    CHECK(std::abs(p.coefficients[0] - 2.0) < 1e-13);
    CHECK(std::abs(p.coefficients[1] - 3.0) < 1e-13);
    CHECK(p.residual < 1e-13);
}

TEST_CASE("project_onto_span reports the off-span residual") {
    const cplx i(0, 1);
    const std::vector<ComplexMatrix> basis{ComplexMatrix::Identity(2, 2), m22(0, 1, 1, 0)};
    const ComplexMatrix y = m22(0, -i, i, 0);  // orthogonal to both
    const SpanProjection p = project_onto_span(basis, y);
    CHECK(p.residual == doctest::Approx(y.norm()).epsilon(1e-12));
}

TEST_CASE("group_degeneracies clusters by gap tolerance") {
    RealVector v(4);
    v << 0.0, 1.0, 1.0 + 1e-9, 2.0;
    const std::vector<int> deg = group_degeneracies(v, 1e-6);
    CHECK(deg == std::vector<int>{1, 2, 2, 1});
    RealVector single(1);
    single << 5.0;
    CHECK(group_degeneracies(single, 1e-6) == std::vector<int>{1});
}
