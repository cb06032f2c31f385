#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "superfock/graded.hpp"

namespace superfock::mackey {

// Finite matrix group closed under multiplication, with Cayley table.
// Element order is BFS from the identity over the given generators, so it is
// deterministic for fixed generator order. Elements are deduplicated by
// entrywise rounding at 1e-9.
struct FiniteMatrixGroup {
    std::vector<ComplexMatrix> elements;  // elements[0] = I
    std::vector<int> generator_indices;
    std::vector<int> inverse;             // inverse[g]
    std::vector<std::vector<int>> table;  // table[g][h] = index of elements[g]*elements[h]
    int order() const { return static_cast<int>(elements.size()); }
};

FiniteMatrixGroup generate_group(std::span<const ComplexMatrix> generators,
                                 int max_order = 4096);

// Index of m in g.elements under the same rounding, or -1.
int find_element(const FiniteMatrixGroup& g, const ComplexMatrix& m);

// Finds the subgroup generated by the given element indices (must close).
std::vector<int> subgroup_closure(const FiniteMatrixGroup& g, std::span<const int> gen_indices);

// Left cosets cH with least-element transversal; action g.(cH) = (gc)H.
struct CosetSpace {
    std::vector<int> transversal;       // representative element index per coset
    std::vector<int> coset_of;          // coset index per group element
    std::vector<std::vector<int>> members;
    int count() const { return static_cast<int>(transversal.size()); }
};

CosetSpace coset_space(const FiniteMatrixGroup& g, std::span<const int> subgroup);

// sigma: H -> U(d), validated as a homomorphism with sigma(e) = I.
struct SubgroupRep {
    std::vector<int> subgroup;             // sorted element indices
    std::map<int, ComplexMatrix> sigma;    // per subgroup element
    int dim = 1;
};

SubgroupRep make_subgroup_rep(const FiniteMatrixGroup& g, std::span<const int> subgroup,
                              const std::map<int, ComplexMatrix>& sigma,
                              double tol = 1e-12);

// One-dimensional character from values on subgroup generators, extended by
// closure. Inconsistent assignments are a usage error.
SubgroupRep make_character(const FiniteMatrixGroup& g, std::span<const int> gen_indices,
                           std::span<const cplx> gen_values, double tol = 1e-12);

// Induced representation: block unitaries U_g[g.c, c] = sigma(tau(g.c)^-1 g tau(c)).
struct InducedRep {
    std::vector<ComplexMatrix> unitaries;  // one per group element, dim = |X| * dim sigma
    int block_dim = 1;
    int dim = 0;
    CosetSpace cosets;
};

InducedRep induce(const FiniteMatrixGroup& g, const SubgroupRep& rep);

// Projection-valued measure on a coset subset E.
ComplexMatrix pvm(const InducedRep& rep, std::span<const int> coset_subset);

// max_g max_c || U_g P_{c} U_g^-1 - P_{g.c} ||_F over all elements and singletons.
double check_imprimitivity(const FiniteMatrixGroup& g, const InducedRep& rep);

// dim { T : T U_g = U_g T for all g }, via the null space of the stacked
// commutation system over the generators.
int commutant_dimension(const FiniteMatrixGroup& g, std::span<const ComplexMatrix> unitaries,
                        double tol = 1e-9);

bool character_equivalent(const FiniteMatrixGroup& g,
                          std::span<const ComplexMatrix> rep_a,
                          std::span<const ComplexMatrix> rep_b, double tol = 1e-9);

// Z2-graded inner-product space: form <x,y> = x+ (P_even + i P_odd) y.
// Even/odd vectors pair to the plain inner product / i times it; mixed pairs vanish.
struct SuperCarrier {
    int dim = 0;
    ComplexMatrix p_even, p_odd;  // orthogonal projectors, p_even + p_odd = I
    ComplexMatrix grading;        // p_even - p_odd
    ComplexMatrix form;           // p_even + i p_odd
    int even_dim = 0, odd_dim = 0;
};

// n = 2: C^2 (x) C^2 split by the swap into symmetric (even, dim 3) and
// antisymmetric (odd, dim 1) parts.
SuperCarrier graded_carrier(int n);

// Direct sum of sym^i(C^2), i = 1..n, graded by (-1)^Lambda blockwise.
SuperCarrier bebe_fock(int n);

cplx super_form(const SuperCarrier& c, const ComplexVector& x, const ComplexVector& y);

// T must have definite parity under the carrier grading (checked).
// Defined by <Tx,y> = (-1)^{p(T)p(x)} <x, T# y>; works out to T+ for even T
// and i T+ for odd T with this form.
ComplexMatrix super_adjoint(const ComplexMatrix& t, const SuperCarrier& c, Parity parity);

Parity operator_parity(const ComplexMatrix& t, const SuperCarrier& c, double tol = 1e-10);

}  // namespace superfock::mackey
