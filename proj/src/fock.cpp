#include "superfock/fock.hpp"

#include <cmath>

namespace superfock::fock {

void FockSpec::validate() const {
    if (cutoff < 4) throw usage_error("FockSpec: cutoff must be >= 4");
    if (!(nu > -1.0)) throw usage_error("FockSpec: nu must satisfy nu > -1");
}

double deformed_level(int n, double nu) {
    if (n < 0) throw usage_error("deformed_level: n must be >= 0");
    return n + 0.5 * nu * (1.0 + ((n % 2 == 0) ? -1.0 : 1.0));
}

DeformedLevels deformed_levels(const FockSpec& spec) {
    spec.validate();
    DeformedLevels out;
    out.values.resize(static_cast<size_t>(spec.cutoff));
    out.factorials.resize(static_cast<size_t>(spec.cutoff));
    double fact = 1.0;
    for (int n = 0; n < spec.cutoff; ++n) {
        out.values[static_cast<size_t>(n)] = deformed_level(n, spec.nu);
        if (n > 0) fact *= out.values[static_cast<size_t>(n)];
        out.factorials[static_cast<size_t>(n)] = fact;
    }
    return out;
}

GradedOperator build_annihilator(const FockSpec& spec) {
    spec.validate();
    const int d = spec.cutoff;
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(deformed_level(n, spec.nu));
    return {a, Parity::odd, "a", d, spec.nu};
}

GradedOperator build_creator(const FockSpec& spec) {
    GradedOperator a = build_annihilator(spec);
    return {a.mat.adjoint(), Parity::odd, "a+", spec.cutoff, spec.nu};
}

GradedOperator build_klein(const FockSpec& spec) {
    spec.validate();
    const int d = spec.cutoff;
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) k(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    return {k, Parity::even, "K", d, spec.nu};
}

GradedOperator build_number(const FockSpec& spec) {
    GradedOperator a = build_annihilator(spec);
    return {a.mat.adjoint() * a.mat, Parity::even, "N", spec.cutoff, spec.nu};
}

GradedOperator build_position(const FockSpec& spec) {
    GradedOperator a = build_annihilator(spec);
    const double s = 1.0 / std::sqrt(2.0);
    return {s * (a.mat + a.mat.adjoint()), Parity::odd, "x", spec.cutoff, spec.nu};
}

GradedOperator build_momentum(const FockSpec& spec) {
    GradedOperator a = build_annihilator(spec);
    const cplx is(0.0, 1.0 / std::sqrt(2.0));
    return {is * (a.mat.adjoint() - a.mat), Parity::odd, "p", spec.cutoff, spec.nu};
}

ComplexMatrix interior_projector(int cutoff) {
    if (cutoff < 4) throw usage_error("interior_projector: cutoff must be >= 4");
    ComplexMatrix p = ComplexMatrix::Identity(cutoff, cutoff);
    p(cutoff - 1, cutoff - 1) = 0;
    p(cutoff - 2, cutoff - 2) = 0;
    return p;
}

ComplexMatrix parity_projector(const FockSpec& spec, int sign) {
    if (sign != 1 && sign != -1) throw usage_error("parity_projector: sign must be +1 or -1");
    const ComplexMatrix k = build_klein(spec).mat;
    return 0.5 * (ComplexMatrix::Identity(spec.cutoff, spec.cutoff) + double(sign) * k);
}

RelationReport audit_relations(const FockSpec& spec) {
    spec.validate();
    const int d = spec.cutoff;
    const ComplexMatrix a = build_annihilator(spec).mat;
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix k = build_klein(spec).mat;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix pint = interior_projector(d);

    ComplexMatrix levels = ComplexMatrix::Zero(d, d);
    ComplexMatrix integers = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        levels(n, n) = deformed_level(n, spec.nu);
        integers(n, n) = n;
    }

    RelationReport r;
    r["klein_squared"] = (k * k - id).norm();
    r["klein_anticommutator_a"] = (k * a + a * k).norm();
    r["klein_anticommutator_adag"] = (k * ad + ad * k).norm();
    r["deformed_commutator_interior"] = ((a * ad - ad * a - (id + spec.nu * k)) * pint).norm();
    r["number_deformed_levels_interior"] = ((ad * a - levels) * pint).norm();
    // The half-anticommutator form has plain integer diagonal, not [n]_nu.
    r["number_half_anticomm_integer_interior"] =
        ((0.5 * (a * ad + ad * a) - 0.5 * (spec.nu + 1.0) * id - integers) * pint).norm();
    return r;
}

RelationReport klein_fermion_audit(const FockSpec& spec) {
    spec.validate();
    const int d = spec.cutoff;
    const ComplexMatrix a = build_annihilator(spec).mat;
    const ComplexMatrix k = build_klein(spec).mat;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix pint = interior_projector(d);

    auto car = [&](const ComplexMatrix& psi) {
        return ((psi * psi.adjoint() + psi.adjoint() * psi - id) * pint).norm();
    };
    auto sq = [&](const ComplexMatrix& psi) { return (psi * psi * pint).norm(); };

    const ComplexMatrix psi_lit = a * k;
    const ComplexMatrix psi_plus = a * parity_projector(spec, +1);
    const ComplexMatrix psi_minus = a * parity_projector(spec, -1);

    RelationReport r;
    r["psi_literal_sq"] = sq(psi_lit);
    r["psi_literal_car"] = car(psi_lit);
    r["psi_plus_sq"] = sq(psi_plus);
    r["psi_plus_car"] = car(psi_plus);
    r["psi_minus_sq"] = sq(psi_minus);
    r["psi_minus_car"] = car(psi_minus);
    return r;
}

}  // namespace superfock::fock
