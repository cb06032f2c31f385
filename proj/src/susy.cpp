#include "superfock/susy.hpp"

#include <algorithm>
#include <cmath>

namespace superfock::susy {

void ModelParams::validate() const {
    if (cutoff < 8) throw usage_error("ModelParams: cutoff must be >= 8");
    if (!(nu > -1.0)) throw usage_error("ModelParams: nu must satisfy nu > -1");
}

double Polynomial::operator()(double x) const {
    double v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

ComplexMatrix Polynomial::at(const ComplexMatrix& x) const {
    ComplexMatrix v = ComplexMatrix::Zero(x.rows(), x.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * x + *it * ComplexMatrix::Identity(x.rows(), x.cols());
    return v;
}

Polynomial superpotential(double g0) { return Polynomial{{0.0, 1.0, g0}}; }

std::string to_string(TowerGrading g) {
    return g == TowerGrading::fermion_parity ? "fermion_parity" : "boson_klein";
}

std::string to_string(Breaking b) {
    switch (b) {
        case Breaking::exact: return "exact";
        case Breaking::broken_gapped: return "broken_gapped";
        default: return "broken_degenerate";
    }
}

namespace {

ComplexMatrix sigma_minus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = 1.0;  // |0> empty, |1> filled
    return s;
}

ComplexMatrix fermion_parity2() {
    ComplexMatrix k = ComplexMatrix::Identity(2, 2);
    k(1, 1) = -1.0;
    return k;
}

}  // namespace

SuperchargePair build_supercharge_1d(const ModelParams& params, TowerGrading grading) {
    params.validate();
    const fock::FockSpec fs{params.cutoff, params.nu};
    const ComplexMatrix x = fock::build_position(fs).mat;
    const ComplexMatrix p = fock::build_momentum(fs).mat;
    const ComplexMatrix w = superpotential(params.g0).at(x);
    const cplx i(0, 1);
    const ComplexMatrix amp = (i * p + w) / std::sqrt(2.0);

    SuperchargePair pair;
    pair.params = params;
    pair.grading = grading;
    pair.Q = kron(amp, sigma_minus());
    pair.Qdag = pair.Q.adjoint();
    pair.H = pair.Q * pair.Qdag + pair.Qdag * pair.Q;
    const ComplexMatrix id_b = ComplexMatrix::Identity(params.cutoff, params.cutoff);
    pair.klein = grading == TowerGrading::fermion_parity
                     ? kron(id_b, fermion_parity2())
                     : kron(fock::build_klein(fs).mat, ComplexMatrix::Identity(2, 2));
    pair.parity_residual =
        (pair.klein * pair.Q + pair.Q * pair.klein).norm() / std::max(1.0, pair.Q.norm());
    return pair;
}

ComplexMatrix build_wzqm_hamiltonian(const ModelParams& params, int max_dim) {
    params.validate();
    const int d = params.cutoff;
    const long dim = static_cast<long>(d) * d * 4;
    if (dim > max_dim)
        throw resource_error("wzqm: dimension " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(max_dim));

    const fock::FockSpec fs{d, params.nu};
    const ComplexMatrix x1 = fock::build_position(fs).mat;
    const ComplexMatrix p1 = fock::build_momentum(fs).mat;
    const ComplexMatrix id_b = ComplexMatrix::Identity(d, d);
    const ComplexMatrix x = kron(x1, id_b);
    const ComplexMatrix y = kron(id_b, x1);
    const ComplexMatrix px = kron(p1, id_b);
    const ComplexMatrix py = kron(id_b, p1);

    const cplx i(0, 1);
    const ComplexMatrix phi = x + i * y;
    const ComplexMatrix f = phi + params.g0 * phi * phi;
    const ComplexMatrix boson = 0.5 * (px * px + py * py) + f.adjoint() * f;

    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix z2 = fermion_parity2();
    const ComplexMatrix c1 = kron(sigma_minus(), id2);
    const ComplexMatrix c2 = kron(z2, sigma_minus());
    const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
    const ComplexMatrix id_bb = ComplexMatrix::Identity(d * d, d * d);

    const ComplexMatrix yuk = kron(id_bb + 2.0 * params.h0 * phi, c1 * c2);
    ComplexMatrix h = kron(boson, id4) + yuk + yuk.adjoint();
    return h;
}

Breaking classify_breaking(std::span<const double> eigenvalues, double e_tol, double gap_tol) {
    if (eigenvalues.empty()) throw usage_error("classify_breaking: no eigenvalues");
    const double ground = eigenvalues.front();
    int ground_deg = 0;
    for (double v : eigenvalues)
        if (v - ground < gap_tol) ++ground_deg;
    if (ground_deg >= 2) return Breaking::broken_degenerate;
    if (ground < e_tol) return Breaking::exact;
    return Breaking::broken_gapped;
}

namespace {

std::vector<int> interior_indices_1d(int cutoff, int per_site) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>((cutoff - 2) * per_site));
    for (int b = 0; b < cutoff - 2; ++b)
        for (int f = 0; f < per_site; ++f) idx.push_back(b * per_site + f);
    return idx;
}

ComplexMatrix take(const ComplexMatrix& m, const std::vector<int>& idx) {
    ComplexMatrix out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(idx[r], idx[c]);
    return out;
}

}  // namespace

ComplexMatrix compress_interior_1d(const ComplexMatrix& m, int cutoff) {
    if (m.rows() != 2L * cutoff) throw usage_error("compress_interior_1d: size mismatch");
    return take(m, interior_indices_1d(cutoff, 2));
}

ComplexMatrix compress_interior_2mode(const ComplexMatrix& m, int cutoff) {
    if (m.rows() != 4L * cutoff * cutoff)
        throw usage_error("compress_interior_2mode: size mismatch");
    std::vector<int> idx;
    for (int b1 = 0; b1 < cutoff - 2; ++b1)
        for (int b2 = 0; b2 < cutoff - 2; ++b2)
            for (int f = 0; f < 4; ++f) idx.push_back((b1 * cutoff + b2) * 4 + f);
    return take(m, idx);
}

SpectrumReport analyze_spectrum(const ComplexMatrix& h_compressed,
                                const ComplexMatrix& klein_compressed,
                                int keep, double e_tol, double gap_tol) {
    EigenResult eig = eig_hermitian(h_compressed);
    const int n = static_cast<int>(eig.values.size());
    keep = std::clamp(keep, 1, n);

    SpectrumReport rep;
    rep.gap_tol = gap_tol;
    rep.eigenvalues.assign(eig.values.data(), eig.values.data() + keep);
    RealVector retained = eig.values.head(keep);
    rep.degeneracies = group_degeneracies(retained, gap_tol);
    rep.sectors.resize(static_cast<size_t>(keep));
    for (int j = 0; j < keep; ++j) {
        const cplx expect = eig.vectors.col(j).dot(klein_compressed * eig.vectors.col(j));
        const double re = expect.real();
        rep.sectors[static_cast<size_t>(j)] = re > 0.5 ? 1 : (re < -0.5 ? -1 : 0);
    }
    rep.ground_energy = rep.eigenvalues.front();
    rep.e_tol = e_tol >= 0 ? e_tol : 1e-6 * (rep.eigenvalues.back() - rep.eigenvalues.front());
    rep.breaking = classify_breaking(rep.eigenvalues, rep.e_tol, gap_tol);
    return rep;
}

SpectrumReport spectrum_1d(const SuperchargePair& pair, double e_tol, double gap_tol) {
    const int d = pair.params.cutoff;
    return analyze_spectrum(compress_interior_1d(pair.H, d),
                            compress_interior_1d(pair.klein, d), d / 4, e_tol, gap_tol);
}

namespace {

TowerLevel project_level(const ComplexMatrix& q, const ComplexMatrix& h,
                         const ComplexMatrix& k, int cutoff, int sign, int depth,
                         double e_tol, double gap_tol) {
    if (sign != 1 && sign != -1) throw usage_error("project_supercharge: sign must be +1 or -1");
    const ComplexMatrix id = ComplexMatrix::Identity(k.rows(), k.cols());
    const ComplexMatrix proj = 0.5 * (id + double(sign) * k);

    TowerLevel lvl;
    lvl.depth = depth;
    lvl.sign = sign;
    lvl.Qhat = q * proj;
    const ComplexMatrix qhd = lvl.Qhat.adjoint();
    lvl.Hhat = lvl.Qhat * qhd + qhd * lvl.Qhat;
    lvl.nilpotency_residual = (lvl.Qhat * lvl.Qhat).norm();
    // 2{Qhat,Qhat+} = H + s[Q+,Q]K whenever Q is K-odd; s is the projector sign.
    const ComplexMatrix rhs = h + double(sign) * (q.adjoint() * q - q * q.adjoint()) * k;
    lvl.identity_residual = (2.0 * lvl.Hhat - rhs).norm();
    lvl.spectrum = analyze_spectrum(compress_interior_1d(lvl.Hhat, cutoff),
                                    compress_interior_1d(k, cutoff), cutoff / 4, e_tol, gap_tol);
    return lvl;
}

void require_odd(const SuperchargePair& pair) {
    if (pair.parity_residual > 1e-10)
        throw precondition_error(
            "project_supercharge: Q is not odd under the " + to_string(pair.grading) +
            " grading (relative residual " + std::to_string(pair.parity_residual) +
            "); the boson_klein grading requires an odd superpotential (g0 = 0)");
}

}  // namespace

TowerLevel project_supercharge(const SuperchargePair& pair, int sign,
                               double e_tol, double gap_tol) {
    require_odd(pair);
    return project_level(pair.Q, pair.H, pair.klein, pair.params.cutoff, sign, 1, e_tol, gap_tol);
}

std::vector<TowerLevel> build_tower(const SuperchargePair& pair, std::span<const int> signs,
                                    double e_tol, double gap_tol) {
    if (signs.empty()) throw usage_error("build_tower: need at least one sign");
    require_odd(pair);
    std::vector<TowerLevel> levels;
    levels.reserve(signs.size());
    const ComplexMatrix* q = &pair.Q;
    const ComplexMatrix* h = &pair.H;
    for (size_t i = 0; i < signs.size(); ++i) {
        levels.push_back(project_level(*q, *h, pair.klein, pair.params.cutoff, signs[i],
                                       static_cast<int>(i + 1), e_tol, gap_tol));
        q = &levels.back().Qhat;
        h = &levels.back().Hhat;
    }
    return levels;
}

PairingReport partner_pairing_check(const SuperchargePair& pair, int k, double tol) {
    if (k < 0) throw usage_error("partner_pairing_check: k must be >= 0");
    if (k > pair.params.cutoff / 4)
        throw precondition_error("partner_pairing_check: k must stay below cutoff/4");

    PairingReport rep;
    rep.pass = true;
    if (k == 0) return rep;

    const RealVector up = eig_hermitian(pair.Q * pair.Qdag).values;
    const RealVector dn = eig_hermitian(pair.Qdag * pair.Q).values;
    const double scale = std::max(up.cwiseAbs().maxCoeff(), dn.cwiseAbs().maxCoeff());
    const double zero_tol = std::max(1e-8 * scale, 1e-12);

    auto nonzero = [&](const RealVector& v) {
        std::vector<double> out;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            if (v[j] > zero_tol) out.push_back(v[j]);
        return out;
    };
    const std::vector<double> a = nonzero(up), b = nonzero(dn);
    if (static_cast<int>(a.size()) < k || static_cast<int>(b.size()) < k)
        throw precondition_error("partner_pairing_check: fewer than k nonzero levels");

    for (int j = 0; j < k; ++j) {
        rep.pairs.emplace_back(a[static_cast<size_t>(j)], b[static_cast<size_t>(j)]);
        rep.max_abs_diff =
            std::max(rep.max_abs_diff, std::abs(a[static_cast<size_t>(j)] - b[static_cast<size_t>(j)]));
    }
    rep.pass = rep.max_abs_diff <= tol;
    return rep;
}

}  // namespace superfock::susy
