#include "superfock/osp.hpp"

#include <algorithm>

namespace superfock::osp {

GeneratorSet build_generators(const fock::FockSpec& spec, int epsilon) {
    spec.validate();
    if (epsilon != 1 && epsilon != -1)
        throw usage_error("build_generators: epsilon must be +1 or -1");

    const ComplexMatrix a = fock::build_annihilator(spec).mat;
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix k = fock::build_klein(spec).mat;
    const ComplexMatrix pp = fock::parity_projector(spec, +1);
    const ComplexMatrix pm = fock::parity_projector(spec, -1);
    const ComplexMatrix& p_eps = epsilon == 1 ? pp : pm;
    const ComplexMatrix& p_meps = epsilon == 1 ? pm : pp;

    auto make = [&](ComplexMatrix m, Parity p, const char* label) {
        return GradedOperator{std::move(m), p, label, spec.cutoff, spec.nu};
    };

    GeneratorSet gs;
    gs.epsilon = epsilon;
    gs.spec = spec;
    gs.gens = {
        make(0.5 * (a * ad + ad * a), Parity::even, "T3"),
        make(ad * ad, Parity::even, "T+"),
        make(a * a, Parity::even, "T-"),
        make(-0.5 * epsilon * k * (a * ad - ad * a), Parity::even, "J"),
        make(ad * p_meps, Parity::odd, "Q+"),
        make(a * p_eps, Parity::odd, "Q-"),
        make(ad * p_eps, Parity::odd, "S+"),
        make(a * p_meps, Parity::odd, "S-"),
    };
    return gs;
}

ClosureReport closure_report(const GeneratorSet& gs, double tolerance) {
    const int d = gs.spec.cutoff;
    const ComplexMatrix pint = fock::interior_projector(d);

    // Everything lives on the interior block; boundary rows/columns carry
    // truncation garbage from products that pass through the dropped levels.
    auto compress = [&](const ComplexMatrix& m) {
        return ComplexMatrix(m.topLeftCorner(d - 2, d - 2));
    };

    std::vector<ComplexMatrix> basis;
    std::vector<Parity> basis_parity;
    basis.reserve(9);
    for (const auto& g : gs.gens) {
        basis.push_back(compress(g.mat));
        basis_parity.push_back(g.parity);
    }
    basis.push_back(ComplexMatrix::Identity(d - 2, d - 2));
    basis_parity.push_back(Parity::even);

    ClosureReport rep;
    rep.tolerance = tolerance;
    for (const auto& x : gs.gens) {
        for (const auto& y : gs.gens) {
            BracketEntry e;
            e.a = x.label;
            e.b = y.label;
            e.bracket_parity = parity_product(x.parity, y.parity);
            const ComplexMatrix br = compress(graded_bracket(x, y));
            SpanProjection p = project_onto_span(basis, br);
            e.coefficients = p.coefficients;
            e.residual = p.residual;
            for (size_t i = 0; i < basis_parity.size(); ++i)
                if (basis_parity[i] != e.bracket_parity)
                    e.parity_leak = std::max(e.parity_leak, std::abs(e.coefficients[static_cast<Eigen::Index>(i)]));
            rep.max_residual = std::max(rep.max_residual, e.residual);
            rep.max_parity_leak = std::max(rep.max_parity_leak, e.parity_leak);
            rep.entries.push_back(std::move(e));
        }
    }
    rep.pass = rep.max_residual <= tolerance;
    return rep;
}

}  // namespace superfock::osp
