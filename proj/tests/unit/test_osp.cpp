#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "superfock/graded.hpp"
#include "superfock/osp.hpp"

using namespace superfock;

namespace {

const osp::BracketEntry& find_entry(const osp::ClosureReport& rep,
                                    const std::string& a, const std::string& b) {
    for (const auto& e : rep.entries)
        if (e.a == a && e.b == b) return e;
    REQUIRE(false);
    return rep.entries.front();
}

}  // namespace

TEST_CASE("all generator brackets close over the family plus identity") {
    for (double nu : {0.0, 0.7}) {
        for (int eps : {+1, -1}) {
            CAPTURE(nu);
            CAPTURE(eps);
            const auto gs = osp::build_generators(fock::FockSpec{40, nu}, eps);
            const auto rep = osp::closure_report(gs, 1e-10);
            CHECK(rep.pass);
            CHECK(rep.max_residual < 1e-10);
            CHECK(rep.entries.size() == 64);
            for (const auto& e : rep.entries) {
                CAPTURE(e.a);
                CAPTURE(e.b);
                CHECK(e.residual < 1e-10);
                CHECK(e.parity_leak < 1e-10);
            }
        }
    }
}

TEST_CASE("bracket parity bookkeeping multiplies operand parities") {
    const auto gs = osp::build_generators(fock::FockSpec{24, 0.7}, +1);
    const auto rep = osp::closure_report(gs);
    CHECK(find_entry(rep, "Q+", "Q-").bracket_parity == Parity::even);
    CHECK(find_entry(rep, "T3", "Q+").bracket_parity == Parity::odd);
    CHECK(find_entry(rep, "T+", "T-").bracket_parity == Parity::even);
}

TEST_CASE("the supercharge anticommutator lands on T3 + J") {
    const auto gs = osp::build_generators(fock::FockSpec{40, 0.7}, +1);
    const auto rep = osp::closure_report(gs);
    const auto& e = find_entry(rep, "Q+", "Q-");
    // coefficient order: T3, T+, T-, J, Q+, Q-, S+, S-, I
    REQUIRE(e.coefficients.size() == 9);
    CHECK(std::abs(e.coefficients[0] - 1.0) < 1e-9);
    CHECK(std::abs(e.coefficients[3] - 1.0) < 1e-9);
    for (int idx : {1, 2, 4, 5, 6, 7, 8}) CHECK(std::abs(e.coefficients[idx]) < 1e-9);

    const auto& s = find_entry(rep, "S+", "S-");
    CHECK(std::abs(s.coefficients[0] - 1.0) < 1e-9);
    CHECK(std::abs(s.coefficients[3] + 1.0) < 1e-9);
}

TEST_CASE("raising and lowering generators are exact adjoints") {
    const auto gs = osp::build_generators(fock::FockSpec{24, 0.0}, +1);
    auto gen = [&](const char* name) -> const ComplexMatrix& {
        const auto it = std::find(gs.names.begin(), gs.names.end(), std::string(name));
        REQUIRE(it != gs.names.end());
        return gs.gens[static_cast<size_t>(it - gs.names.begin())].mat;
    };
    CHECK((gen("T+") - gen("T-").adjoint()).norm() == 0.0);
    CHECK((gen("Q+") - gen("Q-").adjoint()).norm() == 0.0);
    CHECK((gen("S+") - gen("S-").adjoint()).norm() == 0.0);
    CHECK((gen("T3") - gen("T3").adjoint()).norm() == 0.0);
    CHECK((gen("J") - gen("J").adjoint()).norm() == 0.0);
}

TEST_CASE("odd generators anticommute with the klein operator") {
    const auto gs = osp::build_generators(fock::FockSpec{24, 0.7}, -1);
    const ComplexMatrix k = fock::build_klein(fock::FockSpec{24, 0.7}).mat;
    for (size_t i = 0; i < gs.gens.size(); ++i) {
        const auto& g = gs.gens[i];
        CAPTURE(gs.names[i]);
        const double res = parity_residual(g.mat, k, g.parity);
        CHECK(res == 0.0);
    }
}

TEST_CASE("bracket bilinearity: scaled generators scale the expansion") {
    const fock::FockSpec fs{24, 0.0};
    const auto gs = osp::build_generators(fs, +1);
    const ComplexMatrix qp = gs.gens[4].mat;  // Q+
    const ComplexMatrix qm = gs.gens[5].mat;  // Q-
    const double lam = 2.5;
    const ComplexMatrix scaled = graded_bracket(lam * qp, lam * qm, Parity::odd, Parity::odd);
    const ComplexMatrix plain = graded_bracket(qp, qm, Parity::odd, Parity::odd);
    CHECK((scaled - lam * lam * plain).norm() < 1e-12);
}

TEST_CASE("epsilon flips which parity sector feeds the supercharges") {
    const fock::FockSpec fs{16, 0.0};
    const auto plus = osp::build_generators(fs, +1);
    const auto minus = osp::build_generators(fs, -1);
    // Q+ = a+ Pi_{-eps}: different support for the two epsilon choices
    CHECK((plus.gens[4].mat - minus.gens[4].mat).norm() > 0.1);
    CHECK_THROWS_AS(osp::build_generators(fs, 0), usage_error);
}
