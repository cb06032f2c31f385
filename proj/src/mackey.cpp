#include "superfock/mackey.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "superfock/errors.hpp"

namespace superfock::mackey {

namespace {

// Dedup key: entries rounded at 1e-9. Plenty for gate-scale groups, whose
// entries sit on a coarse grid (0, +-1/2, +-1/sqrt2, roots of unity).
std::vector<long long> round_key(const ComplexMatrix& m) {
    std::vector<long long> key;
    key.reserve(static_cast<size_t>(2 * m.size() + 2));
    key.push_back(m.rows());
    key.push_back(m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            key.push_back(std::llround(m(r, c).real() * 1e9));
            key.push_back(std::llround(m(r, c).imag() * 1e9));
        }
    return key;
}

std::vector<int> sorted_unique(std::span<const int> idx) {
    std::vector<int> out(idx.begin(), idx.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& sub) {
    if (sub.empty() || sub.front() != 0)
        throw usage_error("subgroup must contain the identity (index 0)");
    std::set<int> sset(sub.begin(), sub.end());
    for (int a : sub) {
        if (a < 0 || a >= g.order()) throw usage_error("subgroup index out of range");
        for (int b : sub)
            if (!sset.count(g.table[static_cast<size_t>(a)][static_cast<size_t>(b)]))
                throw usage_error("subgroup indices are not closed under multiplication");
    }
}

}  // namespace

FiniteMatrixGroup generate_group(std::span<const ComplexMatrix> generators, int max_order) {
    if (generators.empty()) throw usage_error("generate_group: no generators");
    const Eigen::Index d = generators.front().rows();
    for (const auto& m : generators) {
        if (m.rows() != d || m.cols() != d)
            throw usage_error("generate_group: generators must be square and same size");
        if ((m.adjoint() * m - ComplexMatrix::Identity(d, d)).norm() > 1e-9 * static_cast<double>(d))
            throw usage_error("generate_group: generators must be unitary");
    }

    FiniteMatrixGroup g;
    std::map<std::vector<long long>, int> index_of;
    auto push = [&](const ComplexMatrix& m) -> int {
        auto key = round_key(m);
        auto it = index_of.find(key);
        if (it != index_of.end()) return it->second;
        if (static_cast<int>(g.elements.size()) >= max_order)
            throw resource_error("generate_group: closure exceeds max order " +
                                 std::to_string(max_order));
        const int idx = static_cast<int>(g.elements.size());
        g.elements.push_back(m);
        index_of.emplace(std::move(key), idx);
        return idx;
    };

    push(ComplexMatrix::Identity(d, d));
    for (size_t head = 0; head < g.elements.size(); ++head)
        for (const auto& gen : generators) push(g.elements[head] * gen);

    for (const auto& gen : generators)
        g.generator_indices.push_back(index_of.at(round_key(gen)));

    const int n = g.order();
    g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    g.inverse.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index_of.find(round_key(g.elements[static_cast<size_t>(a)] *
                                              g.elements[static_cast<size_t>(b)]));
            if (it == index_of.end())
                throw std::logic_error("generate_group: closure table has a hole");
            g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
            if (it->second == 0) g.inverse[static_cast<size_t>(a)] = b;
        }
    return g;
}

int find_element(const FiniteMatrixGroup& g, const ComplexMatrix& m) {
    const auto key = round_key(m);
    for (int i = 0; i < g.order(); ++i)
        if (round_key(g.elements[static_cast<size_t>(i)]) == key) return i;
    return -1;
}

std::vector<int> subgroup_closure(const FiniteMatrixGroup& g, std::span<const int> gen_indices) {
    std::set<int> members{0};
    std::vector<int> queue{0};
    std::vector<int> gens = sorted_unique(gen_indices);
    for (int i : gens)
        if (i < 0 || i >= g.order()) throw usage_error("subgroup_closure: index out of range");
    for (size_t head = 0; head < queue.size(); ++head)
        for (int i : gens) {
            const int next = g.table[static_cast<size_t>(queue[head])][static_cast<size_t>(i)];
            if (members.insert(next).second) queue.push_back(next);
        }
    return {members.begin(), members.end()};
}

CosetSpace coset_space(const FiniteMatrixGroup& g, std::span<const int> subgroup) {
    std::vector<int> sub = sorted_unique(subgroup);
    check_subgroup(g, sub);

    CosetSpace cs;
    cs.coset_of.assign(static_cast<size_t>(g.order()), -1);
    for (int e = 0; e < g.order(); ++e) {
        if (cs.coset_of[static_cast<size_t>(e)] >= 0) continue;
        // ascending scan, so e is the least element of its coset
        const int c = cs.count();
        cs.transversal.push_back(e);
        std::vector<int> mem;
        for (int h : sub) {
            const int eh = g.table[static_cast<size_t>(e)][static_cast<size_t>(h)];
            if (cs.coset_of[static_cast<size_t>(eh)] >= 0)
                throw std::logic_error("coset_space: cosets overlap");
            cs.coset_of[static_cast<size_t>(eh)] = c;
            mem.push_back(eh);
        }
        std::sort(mem.begin(), mem.end());
        cs.members.push_back(std::move(mem));
    }
    return cs;
}

SubgroupRep make_subgroup_rep(const FiniteMatrixGroup& g, std::span<const int> subgroup,
                              const std::map<int, ComplexMatrix>& sigma, double tol) {
    SubgroupRep rep;
    rep.subgroup = sorted_unique(subgroup);
    check_subgroup(g, rep.subgroup);
    if (sigma.size() != rep.subgroup.size())
        throw usage_error("make_subgroup_rep: sigma must cover the subgroup exactly");
    for (int h : rep.subgroup)
        if (!sigma.count(h)) throw usage_error("make_subgroup_rep: sigma missing element");

    rep.dim = static_cast<int>(sigma.at(0).rows());
    const ComplexMatrix id = ComplexMatrix::Identity(rep.dim, rep.dim);
    for (const auto& [h, m] : sigma) {
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw usage_error("make_subgroup_rep: sigma dims are inconsistent");
        if ((m.adjoint() * m - id).norm() > 1e-10 * std::max(1.0, static_cast<double>(rep.dim)))
            throw usage_error("make_subgroup_rep: sigma values must be unitary");
    }
    if ((sigma.at(0) - id).norm() > tol)
        throw usage_error("make_subgroup_rep: sigma(identity) != I");
    for (int h1 : rep.subgroup)
        for (int h2 : rep.subgroup) {
            const int h12 = g.table[static_cast<size_t>(h1)][static_cast<size_t>(h2)];
            if ((sigma.at(h1) * sigma.at(h2) - sigma.at(h12)).norm() > tol)
                throw usage_error("make_subgroup_rep: sigma is not a homomorphism");
        }
    rep.sigma = sigma;
    return rep;
}

SubgroupRep make_character(const FiniteMatrixGroup& g, std::span<const int> gen_indices,
                           std::span<const cplx> gen_values, double tol) {
    if (gen_indices.size() != gen_values.size())
        throw usage_error("make_character: one value per generator");
    for (const cplx& v : gen_values)
        if (std::abs(std::abs(v) - 1.0) > tol)
            throw usage_error("make_character: values must be unimodular");

    std::map<int, cplx> value{{0, cplx(1, 0)}};
    std::vector<int> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
        const int a = queue[head];
        for (size_t i = 0; i < gen_indices.size(); ++i) {
            const int next = g.table[static_cast<size_t>(a)][static_cast<size_t>(gen_indices[i])];
            const cplx v = value.at(a) * gen_values[i];
            auto it = value.find(next);
            if (it == value.end()) {
                value.emplace(next, v);
                queue.push_back(next);
            } else if (std::abs(it->second - v) > tol) {
                throw usage_error("make_character: values are inconsistent on the closure");
            }
        }
    }

    std::map<int, ComplexMatrix> sigma;
    std::vector<int> sub;
    for (const auto& [h, v] : value) {
        sub.push_back(h);
        ComplexMatrix m(1, 1);
        m(0, 0) = v;
        sigma.emplace(h, std::move(m));
    }
    return make_subgroup_rep(g, sub, sigma, tol);
}

InducedRep induce(const FiniteMatrixGroup& g, const SubgroupRep& rep) {
    InducedRep ind;
    ind.cosets = coset_space(g, rep.subgroup);
    ind.block_dim = rep.dim;
    ind.dim = ind.cosets.count() * rep.dim;
    std::set<int> sub(rep.subgroup.begin(), rep.subgroup.end());

    ind.unitaries.reserve(static_cast<size_t>(g.order()));
    for (int a = 0; a < g.order(); ++a) {
        ComplexMatrix u = ComplexMatrix::Zero(ind.dim, ind.dim);
        for (int c = 0; c < ind.cosets.count(); ++c) {
            const int tc = ind.cosets.transversal[static_cast<size_t>(c)];
            const int ac = g.table[static_cast<size_t>(a)][static_cast<size_t>(tc)];
            const int c2 = ind.cosets.coset_of[static_cast<size_t>(ac)];
            const int tc2 = ind.cosets.transversal[static_cast<size_t>(c2)];
            const int h = g.table[static_cast<size_t>(g.inverse[static_cast<size_t>(tc2)])]
                                 [static_cast<size_t>(ac)];
            if (!sub.count(h)) throw std::logic_error("induce: cocycle left the subgroup");
            u.block(static_cast<Eigen::Index>(c2) * rep.dim,
                    static_cast<Eigen::Index>(c) * rep.dim, rep.dim, rep.dim) = rep.sigma.at(h);
        }
        ind.unitaries.push_back(std::move(u));
    }
    return ind;
}

ComplexMatrix pvm(const InducedRep& rep, std::span<const int> coset_subset) {
    ComplexMatrix p = ComplexMatrix::Zero(rep.dim, rep.dim);
    std::set<int> seen;
    for (int c : coset_subset) {
        if (c < 0 || c >= rep.cosets.count()) throw usage_error("pvm: coset index out of range");
        if (!seen.insert(c).second) throw usage_error("pvm: repeated coset index");
        p.block(static_cast<Eigen::Index>(c) * rep.block_dim,
                static_cast<Eigen::Index>(c) * rep.block_dim, rep.block_dim, rep.block_dim) =
            ComplexMatrix::Identity(rep.block_dim, rep.block_dim);
    }
    return p;
}

double check_imprimitivity(const FiniteMatrixGroup& g, const InducedRep& rep) {
    double worst = 0.0;
    for (int a = 0; a < g.order(); ++a) {
        const ComplexMatrix& u = rep.unitaries[static_cast<size_t>(a)];
        for (int c = 0; c < rep.cosets.count(); ++c) {
            const int tc = rep.cosets.transversal[static_cast<size_t>(c)];
            const int gc = rep.cosets.coset_of[static_cast<size_t>(
                g.table[static_cast<size_t>(a)][static_cast<size_t>(tc)])];
            const int single[1] = {c};
            const int single2[1] = {gc};
            const double r = (u * pvm(rep, single) * u.adjoint() - pvm(rep, single2)).norm();
            worst = std::max(worst, r);
        }
    }
    return worst;
}

int commutant_dimension(const FiniteMatrixGroup& g, std::span<const ComplexMatrix> unitaries,
                        double tol) {
    if (static_cast<int>(unitaries.size()) != g.order())
        throw usage_error("commutant_dimension: need one unitary per group element");
    const Eigen::Index d = unitaries.empty() ? 0 : unitaries.front().rows();
    if (g.generator_indices.empty()) return static_cast<int>(d * d);

    // T U = U T  <=>  (U^T (x) I - I (x) U) vec(T) = 0, column-major vec.
    const Eigen::Index rows = static_cast<Eigen::Index>(g.generator_indices.size()) * d * d;
    ComplexMatrix stacked(rows, d * d);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    Eigen::Index r0 = 0;
    for (int gi : g.generator_indices) {
        const ComplexMatrix& u = unitaries[static_cast<size_t>(gi)];
        stacked.middleRows(r0, d * d) = kron(u.transpose(), id) - kron(id, u);
        r0 += d * d;
    }
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(stacked);
    qr.setThreshold(tol);
    return static_cast<int>(d * d - qr.rank());
}

bool character_equivalent(const FiniteMatrixGroup& g,
                          std::span<const ComplexMatrix> rep_a,
                          std::span<const ComplexMatrix> rep_b, double tol) {
    if (static_cast<int>(rep_a.size()) != g.order() ||
        static_cast<int>(rep_b.size()) != g.order())
        throw usage_error("character_equivalent: need one matrix per group element");
    for (int a = 0; a < g.order(); ++a)
        if (std::abs(rep_a[static_cast<size_t>(a)].trace() -
                     rep_b[static_cast<size_t>(a)].trace()) > tol)
            return false;
    return true;
}

namespace {

SuperCarrier finish_carrier(ComplexMatrix p_even) {
    SuperCarrier c;
    c.dim = static_cast<int>(p_even.rows());
    c.p_even = std::move(p_even);
    c.p_odd = ComplexMatrix::Identity(c.dim, c.dim) - c.p_even;
    c.grading = c.p_even - c.p_odd;
    c.form = c.p_even + cplx(0, 1) * c.p_odd;
    c.even_dim = static_cast<int>(std::lround(c.p_even.trace().real()));
    c.odd_dim = c.dim - c.even_dim;
    return c;
}

}  // namespace

SuperCarrier graded_carrier(int n) {
    if (n != 2) throw usage_error("graded_carrier: only the two-copy space (n = 2)");
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) swap(2 * a + b, 2 * b + a) = 1.0;
    return finish_carrier(0.5 * (ComplexMatrix::Identity(4, 4) + swap));
}

SuperCarrier bebe_fock(int n) {
    if (n < 1 || n > 6) throw usage_error("bebe_fock: n must be 1..6");
    const int dim = n * (n + 3) / 2;
    ComplexMatrix p_even = ComplexMatrix::Zero(dim, dim);
    int off = 0;
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k <= i; ++k)
            if (k % 2 == 0) p_even(off + k, off + k) = 1.0;
        off += i + 1;
    }
    return finish_carrier(std::move(p_even));
}

cplx super_form(const SuperCarrier& c, const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != c.dim || y.size() != c.dim) throw usage_error("super_form: size mismatch");
    return (x.adjoint() * c.form * y)(0, 0);
}

Parity operator_parity(const ComplexMatrix& t, const SuperCarrier& c, double tol) {
    if (t.rows() != c.dim || t.cols() != c.dim)
        throw usage_error("operator_parity: size mismatch");
    const double scale = std::max(1.0, t.norm());
    const double off = (c.p_even * t * c.p_odd).norm() + (c.p_odd * t * c.p_even).norm();
    const double diag = (c.p_even * t * c.p_even).norm() + (c.p_odd * t * c.p_odd).norm();
    if (off <= tol * scale) return Parity::even;
    if (diag <= tol * scale) return Parity::odd;
    throw precondition_error("operator_parity: operator has no definite parity");
}

ComplexMatrix super_adjoint(const ComplexMatrix& t, const SuperCarrier& c, Parity parity) {
    if (operator_parity(t, c) != parity)
        throw precondition_error("super_adjoint: claimed parity disagrees with the grading");
    if (parity == Parity::even) return t.adjoint();
    return cplx(0, 1) * t.adjoint();
}

}  // namespace superfock::mackey
