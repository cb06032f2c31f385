#include "superfock/qubit.hpp"

#include <algorithm>
#include <cmath>

namespace superfock::qubit {

namespace {

void check_same_n(const PauliWord& a, const PauliWord& b) {
    if (a.n != b.n) throw usage_error("pauli: qubit counts disagree");
}

ComplexMatrix mat2(std::initializer_list<cplx> vals) {
    ComplexMatrix m(2, 2);
    auto it = vals.begin();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = *it++;
    return m;
}

const ComplexMatrix kX = mat2({0, 1, 1, 0});
const ComplexMatrix kZ = mat2({1, 0, 0, -1});
const ComplexMatrix kSminus = mat2({0, 1, 0, 0});

}  // namespace

PauliWord pauli_identity(int n) {
    if (n < 1) throw usage_error("pauli_identity: need n >= 1");
    PauliWord w;
    w.n = n;
    w.x.assign(static_cast<size_t>(n), 0);
    w.z.assign(static_cast<size_t>(n), 0);
    return w;
}

PauliWord pauli_from_string(const std::string& s) {
    if (s.size() < 2) throw usage_error("pauli word: too short: '" + s + "'");
    size_t pos = 0;
    unsigned phase = 0;
    if (s[pos] == '+') {
        phase = 0;
    } else if (s[pos] == '-') {
        phase = 2;
    } else {
        throw usage_error("pauli word: must start with + or -: '" + s + "'");
    }
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
        phase = (phase + 1) % 4;
        ++pos;
    }
    if (pos >= s.size()) throw usage_error("pauli word: no letters: '" + s + "'");
    PauliWord w = pauli_identity(static_cast<int>(s.size() - pos));
    for (size_t j = 0; pos < s.size(); ++pos, ++j) {
        switch (s[pos]) {
            case 'I': break;
            case 'X': w.x[j] = 1; break;
            case 'Z': w.z[j] = 1; break;
            case 'Y':  // Y = i XZ
                w.x[j] = 1;
                w.z[j] = 1;
                phase = (phase + 1) % 4;
                break;
            default:
                throw usage_error(std::string("pauli word: bad letter '") + s[pos] + "'");
        }
    }
    w.phase = phase;
    return w;
}

std::string to_string(const PauliWord& w) {
    unsigned shown = w.phase;
    std::string letters;
    letters.reserve(static_cast<size_t>(w.n));
    for (int j = 0; j < w.n; ++j) {
        const int code = w.x[static_cast<size_t>(j)] * 2 + w.z[static_cast<size_t>(j)];
        switch (code) {
            case 0: letters += 'I'; break;
            case 2: letters += 'X'; break;
            case 1: letters += 'Z'; break;
            default:
                letters += 'Y';
                shown = (shown + 3) % 4;  // pull the i out of XZ
        }
    }
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    return prefix[shown % 4] + letters;
}

PauliWord pauli_mul(const PauliWord& a, const PauliWord& b) {
    check_same_n(a, b);
    PauliWord w = pauli_identity(a.n);
    unsigned phase = a.phase + b.phase;
    for (int j = 0; j < a.n; ++j) {
        // Z^za X^xb = (-1)^{za xb} X^xb Z^za
        phase += 2u * (a.z[static_cast<size_t>(j)] & b.x[static_cast<size_t>(j)]);
        w.x[static_cast<size_t>(j)] = a.x[static_cast<size_t>(j)] ^ b.x[static_cast<size_t>(j)];
        w.z[static_cast<size_t>(j)] = a.z[static_cast<size_t>(j)] ^ b.z[static_cast<size_t>(j)];
    }
    w.phase = phase % 4;
    return w;
}

ComplexMatrix pauli_matrix(const PauliWord& w) {
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (int j = 0; j < w.n; ++j) {
        ComplexMatrix f = ComplexMatrix::Identity(2, 2);
        if (w.x[static_cast<size_t>(j)]) f = kX * f;
        if (w.z[static_cast<size_t>(j)]) f = f * kZ;
        m = kron(m, f);
    }
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ipow[w.phase % 4] * m;
}

std::vector<ComplexMatrix> clifford_generators(int n) {
    if (n != 1) throw usage_error("clifford_generators: only n = 1 at desk scale");
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h = mat2({s, s, s, -s});
    ComplexMatrix sg = mat2({1, 0, 0, cplx(0, 1)});
    return {h, sg};
}

bool clifford_membership(const ComplexMatrix& u, int n, double tol) {
    if (n < 1 || n > 3) throw usage_error("clifford_membership: n must be 1..3");
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (u.rows() != dim || u.cols() != dim)
        throw usage_error("clifford_membership: matrix size does not match n");
    if ((u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).norm() > 1e-9 * dim)
        throw precondition_error("clifford_membership: input is not unitary");

    const int words = 1 << (2 * n);
    for (int j = 0; j < n; ++j) {
        for (int which = 0; which < 2; ++which) {
            PauliWord gen = pauli_identity(n);
            (which == 0 ? gen.x : gen.z)[static_cast<size_t>(j)] = 1;
            const ComplexMatrix conj = u * pauli_matrix(gen) * u.adjoint();

            bool found = false;
            for (int code = 0; code < words && !found; ++code) {
                PauliWord cand = pauli_identity(n);
                for (int q = 0; q < n; ++q) {
                    cand.x[static_cast<size_t>(q)] = (code >> (2 * q)) & 1;
                    cand.z[static_cast<size_t>(q)] = (code >> (2 * q + 1)) & 1;
                }
                for (unsigned ph = 0; ph < 4 && !found; ++ph) {
                    cand.phase = ph;
                    if ((conj - pauli_matrix(cand)).cwiseAbs().maxCoeff() <= tol) found = true;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

ComplexMatrix jordan_wigner(int n, int j) {
    if (n < 1 || n > 10) throw usage_error("jordan_wigner: n must be 1..10");
    if (j < 0 || j >= n) throw usage_error("jordan_wigner: site out of range");
    ComplexMatrix m = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        if (q < j) m = kron(m, kZ);
        else if (q == j) m = kron(m, kSminus);
        else m = kron(m, ComplexMatrix::Identity(2, 2));
    }
    return m;
}

std::vector<ComplexMatrix> jordan_wigner_all(int n) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out.push_back(jordan_wigner(n, j));
    return out;
}

ComplexMatrix stabilizer_states(std::span<const PauliWord> generators) {
    if (generators.empty()) throw usage_error("stabilizer_states: no generators");
    const int n = generators.front().n;
    for (const auto& w : generators) {
        if (w.n != n) throw usage_error("stabilizer_states: mixed qubit counts");
        unsigned xz = 0;
        for (int j = 0; j < n; ++j) xz += w.x[static_cast<size_t>(j)] & w.z[static_cast<size_t>(j)];
        if ((w.phase + xz) % 2 != 0)
            throw precondition_error("stabilizer_states: generator " + to_string(w) +
                                     " is not Hermitian");
    }
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t k = i + 1; k < generators.size(); ++k) {
            unsigned sym = 0;
            for (int j = 0; j < n; ++j)
                sym += (generators[i].x[static_cast<size_t>(j)] & generators[k].z[static_cast<size_t>(j)]) ^
                       (generators[i].z[static_cast<size_t>(j)] & generators[k].x[static_cast<size_t>(j)]);
            if (sym % 2 != 0)
                throw precondition_error("stabilizer_states: generators " + to_string(generators[i]) +
                                         " and " + to_string(generators[k]) + " anticommute");
        }

    const Eigen::Index dim = Eigen::Index(1) << n;
    ComplexMatrix proj = ComplexMatrix::Identity(dim, dim);
    for (const auto& w : generators)
        proj = proj * 0.5 * (ComplexMatrix::Identity(dim, dim) + pauli_matrix(w));

    EigenResult eig = eig_hermitian(proj);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < eig.values.size(); ++j)
        if (eig.values[j] > 0.5) keep.push_back(j);
    ComplexMatrix basis(dim, static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
        basis.col(static_cast<Eigen::Index>(c)) = canonical_phase(eig.vectors.col(keep[c]));
    return basis;
}

ComplexVector canonical_phase(const ComplexVector& v, double threshold) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > threshold) {
            return v * (std::conj(v[i]) / std::abs(v[i]));
        }
    }
    throw usage_error("canonical_phase: vector is numerically zero");
}

std::vector<ComplexVector> projective_orbit(const ComplexVector& state,
                                            std::span<const ComplexMatrix> generators,
                                            int max_size) {
    if (state.size() == 0 || state.norm() < 1e-12)
        throw usage_error("projective_orbit: zero state");
    for (const auto& g : generators)
        if (g.rows() != state.size() || g.cols() != state.size())
            throw usage_error("projective_orbit: generator size mismatch");

    auto canon = [](ComplexVector v) { return canonical_phase(v / v.norm()); };
    auto same = [](const ComplexVector& a, const ComplexVector& b) {
        return (a - b).norm() < 1e-8;
    };

    std::vector<ComplexVector> orbit{canon(state)};
    for (size_t head = 0; head < orbit.size(); ++head) {
        const ComplexVector cur = orbit[head];  // copy: orbit may reallocate
        for (const auto& g : generators) {
            ComplexVector next = g * cur;
            if (next.norm() < 1e-12)
                throw precondition_error("projective_orbit: generator annihilates an orbit state");
            next = canon(std::move(next));
            bool known = false;
            for (const auto& m : orbit)
                if (same(next, m)) { known = true; break; }
            if (!known) {
                if (static_cast<int>(orbit.size()) >= max_size)
                    throw resource_error("projective_orbit: orbit exceeds bound " +
                                         std::to_string(max_size));
                orbit.push_back(std::move(next));
            }
        }
    }

    std::sort(orbit.begin(), orbit.end(), [](const ComplexVector& a, const ComplexVector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (std::abs(a[i].real() - b[i].real()) > 1e-9) return a[i].real() < b[i].real();
            if (std::abs(a[i].imag() - b[i].imag()) > 1e-9) return a[i].imag() < b[i].imag();
        }
        return false;
    });
    return orbit;
}

MatrixUnitOp matrix_units(int n, int j) {
    if (n < 1 || n > 10) throw usage_error("matrix_units: n must be 1..10");
    if (j < 0 || j >= n) throw usage_error("matrix_units: site out of range");
    ComplexMatrix a = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q)
        a = kron(a, q == j ? kSminus : ComplexMatrix::Identity(2, 2));
    MatrixUnitOp op;
    op.A = a;
    op.Adag = a.adjoint();
    op.AAdag = a * a.adjoint();
    op.Lambda = a.adjoint() * a;
    return op;
}

ComplexMatrix restrict_to_kernel(const ComplexMatrix& h, const ComplexMatrix& vectors,
                                 double tol) {
    if (h.rows() != h.cols() || h.rows() != vectors.rows())
        throw usage_error("restrict_to_kernel: shape mismatch");
    if (vectors.cols() == 0) return vectors;
    // Orthonormalize the span first so the singular values mean something.
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(vectors);
    qr.setThreshold(1e-12);
    const Eigen::Index rank = qr.rank();
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(vectors.rows(), rank);

    Eigen::JacobiSVD<ComplexMatrix> svd(h * q, Eigen::ComputeThinV);
    const double scale = std::max(1.0, h.norm());
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] <= tol * scale) keep.push_back(i);
    ComplexMatrix out(vectors.rows(), static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
        out.col(static_cast<Eigen::Index>(c)) = q * svd.matrixV().col(keep[c]);
    return out;
}

}  // namespace superfock::qubit
