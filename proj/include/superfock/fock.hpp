#pragma once

#include <map>
#include <string>
#include <vector>

#include "superfock/graded.hpp"

namespace superfock::fock {

// Truncated deformed oscillator: cutoff D levels |0>..|D-1>, deformation nu > -1.
struct FockSpec {
    int cutoff = 0;
    double nu = 0;
    void validate() const;  // throws usage_error
};

// [n]_nu = n + (nu/2)(1 + (-1)^{n+1}): n for even n, n + nu for odd n.
double deformed_level(int n, double nu);

struct DeformedLevels {
    std::vector<double> values;      // [n]_nu, n = 0..D-1
    std::vector<double> factorials;  // [n]_nu! with [0]! = 1; overflows to inf at large n
};
DeformedLevels deformed_levels(const FockSpec& spec);

// a|n> = sqrt([n]_nu)|n-1>, chosen so [a,a+] = 1 + nu K holds below the cutoff.
GradedOperator build_annihilator(const FockSpec& spec);
// Adjoint of the annihilator; the truncation sends a+|D-1> to 0.
GradedOperator build_creator(const FockSpec& spec);
// K = diag((-1)^n). Exact integer entries.
GradedOperator build_klein(const FockSpec& spec);
// Deformed level operator a+ a = diag([n]_nu), built from the ladder operators.
// The half-anticommutator expression 1/2{a,a+} - 1/2(nu+1) instead has integer
// diagonal n; audit_relations records both facts.
GradedOperator build_number(const FockSpec& spec);
// x = (a + a+)/sqrt2, p = i(a+ - a)/sqrt2; both Hermitian and Klein-odd.
GradedOperator build_position(const FockSpec& spec);
GradedOperator build_momentum(const FockSpec& spec);

// Projector onto |0>..|D-3>: the top two levels carry truncation artifacts.
ComplexMatrix interior_projector(int cutoff);
// Pi_{+/-} = (I +/- K)/2.
ComplexMatrix parity_projector(const FockSpec& spec, int sign);

using RelationReport = std::map<std::string, double>;

// Frobenius residuals of the defining relations; interior checks are
// right-multiplied by the interior projector. All should vanish to 1e-12.
RelationReport audit_relations(const FockSpec& spec);

// Residuals for the Klein-dressed fermion candidates psi = aK and psi = a Pi_{+/-}.
// Reports values only; callers decide what they mean. Keys always present:
// psi_literal_sq, psi_literal_car, psi_plus_sq, psi_minus_sq (+ projected CAR values).
RelationReport klein_fermion_audit(const FockSpec& spec);

}  // namespace superfock::fock
