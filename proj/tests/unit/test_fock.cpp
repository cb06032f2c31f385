#include <cmath>

#include "doctest.h"
#include "superfock/fock.hpp"

using namespace superfock;
using fock::FockSpec;

TEST_CASE("deformed level values: integers on even levels, shifted on odd") {
    CHECK(fock::deformed_level(0, 0.7) == 0.0);
    CHECK(fock::deformed_level(1, 0.7) == doctest::Approx(1.7));
    CHECK(fock::deformed_level(2, 0.7) == 2.0);
    CHECK(fock::deformed_level(3, -0.5) == doctest::Approx(2.5));
    CHECK(fock::deformed_level(5, 2.0) == doctest::Approx(7.0));
    CHECK_THROWS_AS(fock::deformed_level(-1, 0.0), usage_error);
}

TEST_CASE("spec validation names the constraints") {
    CHECK_THROWS_AS((FockSpec{3, 0.0}.validate()), usage_error);
    CHECK_THROWS_WITH_AS((FockSpec{8, -1.5}.validate()),
                         doctest::Contains("nu > -1"), usage_error);
    CHECK_NOTHROW((FockSpec{8, -0.99}.validate()));
}

TEST_CASE("ladder matrix elements carry sqrt of the deformed levels") {
    const FockSpec fs{8, 0.7};
    const ComplexMatrix a = fock::build_annihilator(fs).mat;
    CHECK(std::abs(a(0, 1) - std::sqrt(1.7)) < 1e-15);
    CHECK(std::abs(a(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(a(2, 3) - std::sqrt(3.7)) < 1e-15);
    CHECK((fock::build_creator(fs).mat - a.adjoint()).norm() == 0.0);
}

TEST_CASE("klein conjugation flips ladder signs exactly") {
    const FockSpec fs{12, -0.5};
    const ComplexMatrix a = fock::build_annihilator(fs).mat;
    const ComplexMatrix k = fock::build_klein(fs).mat;
    CHECK((k * a * k + a).norm() == 0.0);
    CHECK((k * k - ComplexMatrix::Identity(12, 12)).norm() == 0.0);
}

TEST_CASE("defining relations audit vanishes over the deformation range") {
    for (double nu : {-0.5, 0.0, 0.7, 2.0}) {
        for (int cutoff : {8, 32}) {
            CAPTURE(nu);
            CAPTURE(cutoff);
            const auto report = fock::audit_relations(FockSpec{cutoff, nu});
            for (const auto& [name, value] : report) {
                CAPTURE(name);
                CHECK(value < 1e-12);
            }
        }
    }
}

TEST_CASE("position/momentum keep the deformed commutator on the interior") {
    const FockSpec fs{24, 0.7};
    const ComplexMatrix x = fock::build_position(fs).mat;
    const ComplexMatrix p = fock::build_momentum(fs).mat;
    const ComplexMatrix k = fock::build_klein(fs).mat;
    const ComplexMatrix pint = fock::interior_projector(24);
    const cplx i(0, 1);
    const ComplexMatrix want = i * (ComplexMatrix::Identity(24, 24) + 0.7 * k);
    CHECK(((x * p - p * x - want) * pint).norm() < 1e-12);
    CHECK((x - x.adjoint()).norm() == 0.0);
    CHECK((p - p.adjoint()).norm() < 1e-15);
}

TEST_CASE("parity projectors split the space and kill cross terms") {
    const FockSpec fs{8, 0.0};
    const ComplexMatrix plus = fock::parity_projector(fs, +1);
    const ComplexMatrix minus = fock::parity_projector(fs, -1);
    CHECK((plus + minus - ComplexMatrix::Identity(8, 8)).norm() == 0.0);
    CHECK((plus * minus).norm() == 0.0);
    CHECK((plus * plus - plus).norm() == 0.0);
    CHECK_THROWS_AS(fock::parity_projector(fs, 2), usage_error);
}

TEST_CASE("klein-dressed fermion audit: projected squares vanish, literal does not") {
    const FockSpec fs{16, 0.7};
    const auto audit = fock::klein_fermion_audit(fs);
    CHECK(audit.at("psi_plus_sq") == 0.0);
    CHECK(audit.at("psi_minus_sq") == 0.0);

    // (aK)^2 = -a^2, so the literal square has exactly the norm of a^2.
    const ComplexMatrix a = fock::build_annihilator(fs).mat;
    const ComplexMatrix pint = fock::interior_projector(16);
    CHECK(audit.at("psi_literal_sq") ==
          doctest::Approx((a * a * pint).norm()).epsilon(1e-14));
    CHECK(audit.at("psi_literal_sq") > 1.0);
    // the anticommutator defect equals nu on the interior, not zero
    CHECK(audit.at("psi_literal_car") > 0.1);
}
