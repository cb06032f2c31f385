#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "superfock/mackey.hpp"
#include "superfock/presets.hpp"
#include "superfock/qubit.hpp"

using namespace superfock;
using mackey::FiniteMatrixGroup;

namespace {

ComplexMatrix seeded_unitary(Eigen::Index d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = cplx(gauss(rng), gauss(rng));
    return Eigen::HouseholderQR<ComplexMatrix>(m).householderQ();
}

ComplexVector seeded_vector(Eigen::Index d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexVector v(d);
    for (Eigen::Index r = 0; r < d; ++r) v[r] = cplx(gauss(rng), gauss(rng));
    return v;
}

ComplexMatrix word(const char* s) { return qubit::pauli_matrix(qubit::pauli_from_string(s)); }

}  // namespace

TEST_CASE("group generation: known closures and the cayley bookkeeping") {
    const auto p1 = mackey::generate_group(presets::group_generators("pauli1"));
    CHECK(p1.order() == 16);
    CHECK((p1.elements[0] - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
    REQUIRE(p1.generator_indices.size() == 3);
    const auto gens = presets::group_generators("pauli1");
    for (size_t k = 0; k < gens.size(); ++k)
        CHECK((p1.elements[static_cast<size_t>(p1.generator_indices[k])] - gens[k]).norm() <
              1e-12);
    for (int g = 0; g < p1.order(); ++g) {
        CHECK(p1.table[static_cast<size_t>(g)][static_cast<size_t>(p1.inverse[static_cast<size_t>(g)])] == 0);
        for (int h = 0; h < p1.order(); ++h) {
            const ComplexMatrix prod =
                p1.elements[static_cast<size_t>(g)] * p1.elements[static_cast<size_t>(h)];
            const int idx = p1.table[static_cast<size_t>(g)][static_cast<size_t>(h)];
            CHECK((prod - p1.elements[static_cast<size_t>(idx)]).norm() < 1e-9);
        }
    }

    CHECK(mackey::generate_group(presets::group_generators("pauli2")).order() == 64);
    CHECK(mackey::generate_group(presets::group_generators("bell16")).order() == 16);
    CHECK(mackey::generate_group(presets::group_generators("clifford1")).order() == 192);
}

TEST_CASE("group generation rejects junk and unbounded closures") {
    std::vector<ComplexMatrix> bad{2.0 * ComplexMatrix::Identity(2, 2)};
    CHECK_THROWS_AS(mackey::generate_group(bad), usage_error);

    ComplexMatrix irrational = ComplexMatrix::Identity(1, 1);
    irrational(0, 0) = std::exp(cplx(0, 1.0));
    std::vector<ComplexMatrix> rot{irrational};
    CHECK_THROWS_AS(mackey::generate_group(rot, 64), resource_error);
}

TEST_CASE("find_element agrees with the rounding key") {
    const auto g = mackey::generate_group(presets::group_generators("pauli1"));
    CHECK(mackey::find_element(g, ComplexMatrix::Identity(2, 2)) == 0);
    CHECK(mackey::find_element(g, 2.0 * ComplexMatrix::Identity(2, 2)) == -1);
    CHECK(mackey::find_element(g, word("+X")) == mackey::find_element(g, word("+X")));
}

TEST_CASE("cosets of the phase+X subgroup inside the one-qubit pauli group") {
    const auto g = mackey::generate_group(presets::group_generators("pauli1"));
    const int i_idx = mackey::find_element(g, cplx(0, 1) * ComplexMatrix::Identity(2, 2));
    const int x_idx = mackey::find_element(g, word("+X"));
    const int z_idx = mackey::find_element(g, word("+Z"));
    REQUIRE(i_idx > 0);
    REQUIRE(x_idx > 0);
    REQUIRE(z_idx > 0);

    std::vector<int> hgens{i_idx, x_idx};
    const auto sub = mackey::subgroup_closure(g, hgens);
    CHECK(sub.size() == 8);

    const auto cs = mackey::coset_space(g, sub);
    REQUIRE(cs.count() == 2);
    CHECK(cs.transversal[0] == 0);
    CHECK(cs.transversal[1] == z_idx);
    std::vector<int> seen;
    for (const auto& mem : cs.members) seen.insert(seen.end(), mem.begin(), mem.end());
    std::sort(seen.begin(), seen.end());
    REQUIRE(static_cast<int>(seen.size()) == g.order());
    for (int k = 0; k < g.order(); ++k) CHECK(seen[static_cast<size_t>(k)] == k);
    for (int e = 0; e < g.order(); ++e)
        CHECK(cs.coset_of[static_cast<size_t>(e)] == (std::count(sub.begin(), sub.end(), e) ? 0 : 1));

    std::vector<int> not_closed{0, i_idx};  // (iI)^2 = -I is missing
    CHECK_THROWS_AS(mackey::coset_space(g, not_closed), usage_error);
}

TEST_CASE("subgroup representations are validated before use") {
    const auto g = mackey::generate_group(presets::group_generators("pauli1"));
    const int x_idx = mackey::find_element(g, word("+X"));
    const std::vector<int> sub{0, x_idx};

    std::map<int, ComplexMatrix> sigma;
    sigma[0] = ComplexMatrix::Identity(1, 1);
    sigma[x_idx] = 2.0 * ComplexMatrix::Identity(1, 1);
    CHECK_THROWS_AS(mackey::make_subgroup_rep(g, sub, sigma), usage_error);

    sigma[x_idx] = cplx(0, 1) * ComplexMatrix::Identity(1, 1);  // sigma(X)^2 != sigma(I)
    CHECK_THROWS_AS(mackey::make_subgroup_rep(g, sub, sigma), usage_error);

    sigma[x_idx] = -ComplexMatrix::Identity(1, 1);
    const auto rep = mackey::make_subgroup_rep(g, sub, sigma);
    CHECK(rep.dim == 1);
    CHECK(rep.subgroup == sub);

    const std::vector<int> cgens{x_idx};
    const std::vector<cplx> bad_vals{cplx(0, 1)};
    CHECK_THROWS_AS(mackey::make_character(g, cgens, bad_vals), usage_error);
    const std::vector<cplx> good_vals{cplx(-1, 0)};
    const auto chi = mackey::make_character(g, cgens, good_vals);
    CHECK(chi.subgroup == sub);
    CHECK(std::abs(chi.sigma.at(x_idx)(0, 0) + 1.0) < 1e-14);
}

TEST_CASE("flagship induction: pauli2 from its bell-diagonal subgroup") {
    const auto pre = presets::induction_preset("pauli2", "bell");
    CHECK(pre.group.order() == 64);
    CHECK(pre.rep.subgroup.size() == 16);

    const auto ind = mackey::induce(pre.group, pre.rep);
    CHECK(ind.dim == 4);
    CHECK(ind.block_dim == 1);
    CHECK(ind.cosets.count() == 4);
    CHECK((ind.unitaries[0] - ComplexMatrix::Identity(4, 4)).norm() == 0.0);

    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    for (const auto& u : ind.unitaries) CHECK((u.adjoint() * u - id).norm() < 1e-12);
    for (int a = 0; a < pre.group.order(); ++a)
        for (int b = 0; b < pre.group.order(); ++b) {
            const int ab = pre.group.table[static_cast<size_t>(a)][static_cast<size_t>(b)];
            CHECK((ind.unitaries[static_cast<size_t>(a)] * ind.unitaries[static_cast<size_t>(b)] -
                   ind.unitaries[static_cast<size_t>(ab)])
                      .norm() < 1e-12);
        }

    CHECK(mackey::check_imprimitivity(pre.group, ind) < 1e-12);
    CHECK(mackey::commutant_dimension(pre.group, ind.unitaries) == 1);
    CHECK(mackey::character_equivalent(pre.group, ind.unitaries, pre.group.elements));
}

TEST_CASE("projection-valued measure blocks partition the induced space") {
    const auto pre = presets::induction_preset("pauli2", "bell");
    const auto ind = mackey::induce(pre.group, pre.rep);
    ComplexMatrix total = ComplexMatrix::Zero(ind.dim, ind.dim);
    for (int c = 0; c < ind.cosets.count(); ++c) {
        const std::vector<int> single{c};
        const ComplexMatrix p = mackey::pvm(ind, single);
        CHECK((p * p - p).norm() == 0.0);
        total += p;
    }
    CHECK((total - ComplexMatrix::Identity(ind.dim, ind.dim)).norm() == 0.0);
    const std::vector<int> dup{0, 0};
    CHECK_THROWS_AS(mackey::pvm(ind, dup), usage_error);
    const std::vector<int> oob{ind.cosets.count()};
    CHECK_THROWS_AS(mackey::pvm(ind, oob), usage_error);
}

TEST_CASE("inducing from the center is far from irreducible") {
    const auto pre = presets::induction_preset("pauli2", "center");
    CHECK(pre.rep.subgroup.size() == 4);
    const auto ind = mackey::induce(pre.group, pre.rep);
    CHECK(ind.dim == 16);
    CHECK(mackey::check_imprimitivity(pre.group, ind) < 1e-12);
    CHECK(mackey::commutant_dimension(pre.group, ind.unitaries) == 16);
}

TEST_CASE("commutant dimension is a conjugation invariant") {
    const auto pre = presets::induction_preset("pauli1", "xphase");
    const auto ind = mackey::induce(pre.group, pre.rep);
    CHECK(ind.dim == 2);
    const int dim0 = mackey::commutant_dimension(pre.group, ind.unitaries);
    const ComplexMatrix v = seeded_unitary(ind.dim, 20240817u);
    std::vector<ComplexMatrix> conj;
    conj.reserve(ind.unitaries.size());
    for (const auto& u : ind.unitaries) conj.push_back(v * u * v.adjoint());
    CHECK(mackey::commutant_dimension(pre.group, conj) == dim0);
    CHECK(mackey::character_equivalent(pre.group, ind.unitaries, conj));

    std::vector<ComplexMatrix> short_list(ind.unitaries.begin(), ind.unitaries.end() - 1);
    CHECK_THROWS_AS(mackey::commutant_dimension(pre.group, short_list), usage_error);
}

TEST_CASE("two-copy carrier: swap grading splits 4 = 3 + 1") {
    const auto c = mackey::graded_carrier(2);
    CHECK(c.dim == 4);
    CHECK(c.even_dim == 3);
    CHECK(c.odd_dim == 1);
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    CHECK((c.grading - swap).norm() == 0.0);
    CHECK((c.p_even + c.p_odd - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
    CHECK((c.p_even * c.p_odd).norm() == 0.0);
    CHECK_THROWS_AS(mackey::graded_carrier(3), usage_error);
}

TEST_CASE("super form symmetry: <y,x> = (-1)^{p(x)p(y)} conj <x,y>") {
    const auto c = mackey::graded_carrier(2);
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const ComplexVector re = c.p_even * seeded_vector(4, seed);
        const ComplexVector ro = c.p_odd * seeded_vector(4, 1000 + seed);
        const ComplexVector se = c.p_even * seeded_vector(4, 2000 + seed);
        const ComplexVector so = c.p_odd * seeded_vector(4, 3000 + seed);
        CHECK(std::abs(super_form(c, se, re) - std::conj(super_form(c, re, se))) < 1e-12);
        CHECK(std::abs(super_form(c, so, ro) + std::conj(super_form(c, ro, so))) < 1e-12);
        CHECK(std::abs(super_form(c, re, so)) < 1e-12);
        CHECK(std::abs(super_form(c, so, re)) < 1e-12);
    }
    CHECK_THROWS_AS(super_form(c, ComplexVector::Zero(3), ComplexVector::Zero(4)), usage_error);
}

TEST_CASE("super adjoint satisfies its defining relation on both parities") {
    const auto c = mackey::graded_carrier(2);
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const ComplexMatrix r = seeded_unitary(4, 100 + seed);
        const ComplexMatrix t_even = c.p_even * r * c.p_even + c.p_odd * r * c.p_odd;
        const ComplexMatrix t_odd = c.p_even * r * c.p_odd + c.p_odd * r * c.p_even;
        CHECK(mackey::operator_parity(t_even, c) == Parity::even);
        CHECK(mackey::operator_parity(t_odd, c) == Parity::odd);

        const ComplexMatrix te_sharp = mackey::super_adjoint(t_even, c, Parity::even);
        const ComplexMatrix to_sharp = mackey::super_adjoint(t_odd, c, Parity::odd);
        CHECK((te_sharp - t_even.adjoint()).norm() == 0.0);
        CHECK((to_sharp - cplx(0, 1) * t_odd.adjoint()).norm() == 0.0);

        // <T x, y> = (-1)^{p(T) p(x)} <x, T# y> with homogeneous x, any y
        const ComplexVector xe = c.p_even * seeded_vector(4, 4000 + seed);
        const ComplexVector xo = c.p_odd * seeded_vector(4, 5000 + seed);
        const ComplexVector y = seeded_vector(4, 6000 + seed);
        CHECK(std::abs(super_form(c, t_even * xe, y) - super_form(c, xe, te_sharp * y)) < 1e-11);
        CHECK(std::abs(super_form(c, t_even * xo, y) - super_form(c, xo, te_sharp * y)) < 1e-11);
        CHECK(std::abs(super_form(c, t_odd * xe, y) - super_form(c, xe, to_sharp * y)) < 1e-11);
        CHECK(std::abs(super_form(c, t_odd * xo, y) + super_form(c, xo, to_sharp * y)) < 1e-11);
    }

    const ComplexMatrix mixed = seeded_unitary(4, 7u);
    CHECK_THROWS_AS(mackey::operator_parity(mixed, c), precondition_error);
    CHECK_THROWS_AS(mackey::super_adjoint(mixed, c, Parity::even), precondition_error);
    const ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
    CHECK((mackey::super_adjoint(zero, c, Parity::even) - zero).norm() == 0.0);
}

TEST_CASE("block fock carriers: triangular dims, alternating grading") {
    const int expected_dims[] = {2, 5, 9, 14, 20, 27};
    for (int n = 1; n <= 6; ++n) {
        const auto c = mackey::bebe_fock(n);
        CHECK(c.dim == expected_dims[n - 1]);
        CHECK((c.grading * c.grading - ComplexMatrix::Identity(c.dim, c.dim)).norm() == 0.0);
    }
    const auto c1 = mackey::bebe_fock(1);
    CHECK(c1.grading(0, 0).real() == 1.0);
    CHECK(c1.grading(1, 1).real() == -1.0);
    const auto c2 = mackey::bebe_fock(2);
    CHECK(c2.even_dim == 3);
    CHECK(c2.odd_dim == 2);
    CHECK_THROWS_AS(mackey::bebe_fock(7), usage_error);
    CHECK_THROWS_AS(mackey::bebe_fock(0), usage_error);
}
