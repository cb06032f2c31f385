#pragma once

#include <span>
#include <string>
#include <vector>

#include "superfock/fock.hpp"

namespace superfock::susy {

struct ModelParams {
    int cutoff = 0;   // bosonic levels per mode, >= 8
    double nu = 0;
    double g0 = 0;    // superpotential W(x) = x + g0 x^2
    double h0 = 0;    // Yukawa strength (two-mode model only)
    void validate() const;
};

// W as polynomial coefficients (constant term first), evaluable on scalars
// and on operator arguments.
struct Polynomial {
    std::vector<double> coeffs;
    double operator()(double x) const;
    ComplexMatrix at(const ComplexMatrix& x) const;  // Horner on matrices
};
Polynomial superpotential(double g0);

// Involution that grades the 1-D model.
//  fermion_parity: I (x) diag(1,-1); Q is odd for every superpotential.
//  boson_klein:    K_b (x) I; Q is odd only when W is odd (g0 = 0), where the
//                  projected tower mixes the Fock parity sectors nontrivially.
enum class TowerGrading { fermion_parity, boson_klein };
std::string to_string(TowerGrading g);

// Q = (i p + W(x))/sqrt2 (x) sigma-, on (Fock D) (x) C^2, boson factor left.
struct SuperchargePair {
    ComplexMatrix Q, Qdag, H;  // H = {Q, Q+}
    ComplexMatrix klein;       // grading involution on the full space
    ModelParams params;
    TowerGrading grading = TowerGrading::fermion_parity;
    double parity_residual = 0;  // ||{klein, Q}||_F / max(1, ||Q||_F)
};
SuperchargePair build_supercharge_1d(const ModelParams& params,
                                     TowerGrading grading = TowerGrading::fermion_parity);

// Two bosonic modes + two fermions: (C^D)(x)(C^D)(x)C^4, phi = x + i y,
// H = (px^2 + py^2)/2 + |phi + g0 phi^2|^2 + [(1 + 2 h0 phi) psi1 psi2 + h.c.].
// Refuses to allocate above max_dim.
ComplexMatrix build_wzqm_hamiltonian(const ModelParams& params, int max_dim = kDefaultMaxDim);

enum class Breaking { exact, broken_gapped, broken_degenerate };
std::string to_string(Breaking b);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // lowest cutoff/4, interior-compressed operator
    std::vector<int> degeneracies;    // per eigenvalue, cluster size it belongs to
    std::vector<int> sectors;         // rounded <v|K|v> in {-1,0,+1}; 0 = mixed
    double ground_energy = 0;
    Breaking breaking = Breaking::exact;
    double e_tol = 0, gap_tol = 0;    // as applied
};

Breaking classify_breaking(std::span<const double> eigenvalues, double e_tol, double gap_tol);

// Drop the top two levels of each bosonic factor (two-sided compression).
ComplexMatrix compress_interior_1d(const ComplexMatrix& m, int cutoff);
ComplexMatrix compress_interior_2mode(const ComplexMatrix& m, int cutoff);

// e_tol < 0 means the default 1e-6 * (Emax - Emin) over the retained window.
SpectrumReport analyze_spectrum(const ComplexMatrix& h_compressed,
                                const ComplexMatrix& klein_compressed,
                                int keep, double e_tol = -1, double gap_tol = 1e-6);
SpectrumReport spectrum_1d(const SuperchargePair& pair, double e_tol = -1, double gap_tol = 1e-6);

struct TowerLevel {
    int depth = 1;
    int sign = +1;
    ComplexMatrix Qhat, Hhat;
    double nilpotency_residual = 0;  // ||Qhat^2||_F
    double identity_residual = 0;    // ||2{Qhat,Qhat+} - (H + s[Q+,Q]K)||_F
    SpectrumReport spectrum;
};

// Qhat = Q Pi_sign built from the pair's grading. The parity precondition
// (Q odd under the grading) is enforced; violations raise precondition_error.
TowerLevel project_supercharge(const SuperchargePair& pair, int sign,
                               double e_tol = -1, double gap_tol = 1e-6);
std::vector<TowerLevel> build_tower(const SuperchargePair& pair, std::span<const int> signs,
                                    double e_tol = -1, double gap_tol = 1e-6);

struct PairingReport {
    std::vector<std::pair<double, double>> pairs;  // (QQ+ level i, Q+Q level i)
    double max_abs_diff = 0;
    bool pass = false;
};

// Compare the lowest k nonzero eigenvalues of QQ+ and Q+Q. k <= cutoff/4.
PairingReport partner_pairing_check(const SuperchargePair& pair, int k, double tol);

}  // namespace superfock::susy
