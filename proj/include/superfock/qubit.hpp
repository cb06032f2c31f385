#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "superfock/linalg.hpp"

namespace superfock::qubit {

// n-qubit Pauli word i^phase * prod_j X^x[j] Z^z[j], qubit 0 = leftmost factor.
struct PauliWord {
    int n = 0;
    unsigned phase = 0;  // power of i, mod 4
    std::vector<std::uint8_t> x, z;

    bool operator==(const PauliWord& o) const = default;
};

PauliWord pauli_identity(int n);
// Grammar: [+-](i)?[IXYZ]{n}. Y stands for iXZ, so "+Y" parses to phase 1, x=z=1.
PauliWord pauli_from_string(const std::string& s);
std::string to_string(const PauliWord& w);

// Symplectic product; phases tracked mod 4. Matches matrix multiplication.
PauliWord pauli_mul(const PauliWord& a, const PauliWord& b);

ComplexMatrix pauli_matrix(const PauliWord& w);

// {H, S} for one qubit. Larger n is out of scope here.
std::vector<ComplexMatrix> clifford_generators(int n);

// True iff U maps every X_j, Z_j under conjugation to a phased Pauli word,
// entrywise within tol. Exhaustive candidate search; n <= 3.
bool clifford_membership(const ComplexMatrix& u, int n, double tol = 1e-9);

// Jordan-Wigner lowering operator c_j = Z^{(x)j} (x) sigma- (x) I^(x)(n-j-1).
ComplexMatrix jordan_wigner(int n, int j);
std::vector<ComplexMatrix> jordan_wigner_all(int n);

// Orthonormal basis (columns) of the joint +1 eigenspace of signed commuting
// words. Non-commuting or non-Hermitian (i-phased) input is a precondition error.
ComplexMatrix stabilizer_states(std::span<const PauliWord> generators);

// Fix the global phase: first component with |v_i| > threshold made real positive.
ComplexVector canonical_phase(const ComplexVector& v, double threshold = 1e-9);

// Closure of the state's ray orbit under the generator matrices, as a
// deterministically sorted set of phase-canonical unit vectors.
std::vector<ComplexVector> projective_orbit(const ComplexVector& state,
                                            std::span<const ComplexMatrix> generators,
                                            int max_size = kDefaultMaxDim);

// A_j = I^(x)j (x) |0><1| (x) I^(x)(n-j-1) and friends. No string factors.
struct MatrixUnitOp {
    ComplexMatrix A, Adag, AAdag, Lambda;  // Lambda = A+ A
};
MatrixUnitOp matrix_units(int n, int j);

// Intersect span{vectors} with the numerical kernel of Hermitian h:
// returns an orthonormal basis of the subspace where ||h v|| <= tol * ||h||.
ComplexMatrix restrict_to_kernel(const ComplexMatrix& h, const ComplexMatrix& vectors,
                                 double tol = 1e-9);

}  // namespace superfock::qubit
