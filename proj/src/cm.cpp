#include "cmgr/cm.hpp"

#include "cmgr/rng.hpp"

#include <algorithm>

namespace cmgr {

CMPoint cm_validate(const QMatrix& x, const QMatrix& y) {
    if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows)
        throw std::invalid_argument("CM point needs square matrices of equal size");
    int n = x.rows;
    QMatrix comm = x * y - y * x + QMatrix::identity(n);
    RrefResult rr = rref(comm);
    if (rr.rank != 1)
        throw std::invalid_argument("rank([X,Y] + I) = " + std::to_string(rr.rank) + ", expected 1");
    CMPoint p;
    p.n = n;
    p.x = x;
    p.y = y;
    // rank-one factorization: w^T is the single nonzero rref row, v the
    // coefficients expressing each row of comm in terms of it
    int pc = rr.pivots[0];
    p.w.assign(static_cast<size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) p.w[static_cast<size_t>(j)] = rr.r.at(0, j);
    p.v.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) p.v[static_cast<size_t>(i)] = comm.at(i, pc);
    return p;
}

CMPoint fixed_point(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("fixed_point of empty partition");
    FrobeniusForm hooks = frobenius_form(lambda);
    int l = static_cast<int>(hooks.size());
    int n = lambda.size();
    std::vector<int> offset(static_cast<size_t>(l) + 1, 0);
    for (int i = 0; i < l; ++i) offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] + hooks[static_cast<size_t>(i)].first;

    QMatrix x(n, n), y(n, n);
    for (int i = 0; i < l; ++i) {
        auto [ni, ri] = hooks[static_cast<size_t>(i)];
        int oi = offset[static_cast<size_t>(i)];
        // Y_i: upper Jordan block, eigenvalue 0
        for (int k = 0; k + 1 < ni; ++k) y.at(oi + k, oi + k + 1) = 1;
        // X_{i,i}: subdiagonal 1..r_i-1 followed by -(n_i-r_i)..-1
        for (int k = 0; k + 1 < ni; ++k) {
            long val = (k + 1 <= ri - 1) ? (k + 1) : (k + 1) - ni;
            x.at(oi + k + 1, oi + k) = Rational(val);
        }
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            auto [nj, rj] = hooks[static_cast<size_t>(j)];
            int oj = offset[static_cast<size_t>(j)];
            int diag = rj - ri - 1;  // entries (a, a + diag), 1-indexed
            if (i > j) {
                // r_i entries equal to n_i, then zeros
                for (int a = 1; a <= ri; ++a) {
                    int b = a + diag;
                    x.at(oi + a - 1, oj + b - 1) = Rational(ni);
                }
            } else {
                // r_j - 1 leading zeros, then n_j - r_j + 1 entries equal to -n_i
                for (int t = rj - 1; t < nj; ++t) {
                    int a = (1 - diag) + t;
                    int b = a + diag;
                    x.at(oi + a - 1, oj + b - 1) = Rational(-ni);
                }
            }
        }
    }
    return cm_validate(x, y);
}

SpectralData rho(const CMPoint& p) {
    SpectralData s;
    s.charpoly_z = charpoly(p.y * p.x);
    s.roots = rational_root_multiset(s.charpoly_z);
    return s;
}

Spectra spectra(const CMPoint& p) {
    Spectra s;
    s.charpoly_y = charpoly(p.y);
    s.charpoly_x = charpoly(p.x);
    RootMultiset rm = rational_root_multiset(s.charpoly_y);
    if (rm.split()) {
        SupportDivisor d;
        for (const auto& [r, m] : rm.roots) d.points.emplace_back(r, m);
        s.pi = d;
    }
    return s;
}

MultiPoly tau_cm(const CMPoint& p, int m) {
    if (m < 1) throw std::invalid_argument("tau_cm needs m >= 1");
    int n = p.n;
    // det(sum_{i<=m} i t_i Y^{i-1} - X): the determinant in the convention of
    // the quasi-exponential pairing, so it matches tau_qe of the solution
    // space on the nose. It agrees with the opposite-sign convention
    // det(X + sum i t_i (-Y)^{i-1}) at every torus-fixed point, where tau is
    // weighted-homogeneous; entries are affine in the t's.
    std::vector<std::vector<MultiPoly>> mat(static_cast<size_t>(n),
                                            std::vector<MultiPoly>(static_cast<size_t>(n), MultiPoly(m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            MultiPoly::constant(m, -p.x.at(i, j));
    QMatrix pow = QMatrix::identity(n);
    for (int i = 1; i <= m; ++i) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (pow.at(r, c) != 0)
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c)].add_term(
                        [&] {
                            std::vector<int> e(static_cast<size_t>(m), 0);
                            e[static_cast<size_t>(i - 1)] = 1;
                            return e;
                        }(),
                        Rational(i) * pow.at(r, c));
        if (i < m) pow = pow * p.y;
    }
    return det_multipoly(mat, m);
}

CMPoint transform(const CMPoint& p, TransformKind kind, const Rational& param) {
    switch (kind) {
        case TransformKind::Bispectral:
            return cm_validate(p.y.transpose(), p.x.transpose());
        case TransformKind::Star:
            return cm_validate(p.x.transpose() * Rational(-1), p.y.transpose());
        case TransformKind::Negate:
            return cm_validate(p.x * Rational(-1), p.y * Rational(-1));
        case TransformKind::Translate: {
            QMatrix y = p.y;
            for (int i = 0; i < p.n; ++i) y.at(i, i) -= param;
            return cm_validate(p.x, y);
        }
        case TransformKind::Scale: {
            if (param == 0) throw std::invalid_argument("scale by zero");
            return cm_validate(p.x * (Rational(1) / param), p.y * param);
        }
        case TransformKind::Fourier:
            return cm_validate(p.y, p.x * Rational(-1));
    }
    throw std::logic_error("unknown transform kind");
}

std::optional<CMPoint> sample_cm(const QMatrix& y, std::uint64_t seed) {
    if (y.rows != y.cols) throw std::invalid_argument("sample_cm needs a square Y");
    int n = y.rows;
    Rng rng(seed);
    auto centralizer = solve_sylvester(y, QMatrix(n, n));  // kernel basis only
    if (!centralizer) return std::nullopt;
    const auto& kernel = centralizer->kernel;

    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rational> v(static_cast<size_t>(n));
        for (auto& vi : v) vi = Rational(rng.nonzero(5));
        // w must satisfy w^T K v = tr(K) for every centralizer element K
        QMatrix sys(static_cast<int>(kernel.size()), n);
        std::vector<Rational> rhs;
        for (size_t r = 0; r < kernel.size(); ++r) {
            const QMatrix& k = kernel[r];
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (int i = 0; i < n; ++i) acc += k.at(j, i) * v[static_cast<size_t>(i)];
                sys.at(static_cast<int>(r), j) = acc;
            }
            rhs.push_back(k.trace());
        }
        auto wsol = solve_linear(sys, rhs);
        if (!wsol) continue;
        std::vector<Rational> w = wsol->particular;
        for (const auto& kv : wsol->kernel) {
            long t = rng.pick(-2, 2);
            if (t == 0) continue;
            for (size_t j = 0; j < w.size(); ++j) w[j] += Rational(t) * kv[j];
        }

        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i)] * w[static_cast<size_t>(j)] - (i == j ? 1 : 0);
        auto sol = solve_sylvester(y, m);
        if (!sol) continue;
        QMatrix x = sol->particular;
        for (const auto& k : sol->kernel) {
            long t = rng.pick(-3, 3);
            if (t != 0) x = x + k * Rational(t);
        }
        try {
            return cm_validate(x, y);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Rational, CMPoint>> factorize(const CMPoint& p) {
    Poly cp = charpoly(p.y);
    RootMultiset rm = rational_root_multiset(cp);
    if (!rm.split())
        throw std::invalid_argument("Y-spectrum does not split over the rationals; irreducible factor " +
                                    rm.nonsplit.to_string("t"));
    if (rm.roots.size() == 1) {
        // single generalized eigenvalue: identity factorization
        return {{rm.roots[0].first, p}};
    }
    int n = p.n;
    // columns of S: bases of the generalized eigenspaces ker (Y - b)^mult
    QMatrix s(n, n);
    int col = 0;
    std::vector<std::pair<Rational, int>> layout;
    for (const auto& [b, mult] : rm.roots) {
        QMatrix shifted = p.y;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= b;
        QMatrix power = QMatrix::identity(n);
        for (int k = 0; k < mult; ++k) power = power * shifted;
        auto basis = nullspace(power);
        if (static_cast<int>(basis.size()) != mult)
            throw std::logic_error("generalized eigenspace dimension mismatch");
        for (const auto& vec : basis) {
            for (int i = 0; i < n; ++i) s.at(i, col) = vec[static_cast<size_t>(i)];
            ++col;
        }
        layout.emplace_back(b, mult);
    }
    QMatrix sinv = inverse(s);
    QMatrix ty = sinv * p.y * s;
    QMatrix tx = sinv * p.x * s;
    std::vector<std::pair<Rational, CMPoint>> blocks;
    int off = 0;
    for (const auto& [b, mult] : layout) {
        QMatrix bx(mult, mult), by(mult, mult);
        for (int i = 0; i < mult; ++i)
            for (int j = 0; j < mult; ++j) {
                bx.at(i, j) = tx.at(off + i, off + j);
                by.at(i, j) = ty.at(off + i, off + j);
            }
        blocks.emplace_back(b, cm_validate(bx, by));
        off += mult;
    }
    return blocks;
}

QMatrix daha_z1_matrix(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("daha_z1_matrix of empty list");
    int n = static_cast<int>(a.size());
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = a[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) m.at(i, j) = -1;
    }
    return m;
}

}  // namespace cmgr
