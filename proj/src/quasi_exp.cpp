#include "cmgr/quasi_exp.hpp"

#include "cmgr/matrix.hpp"

#include <algorithm>

namespace cmgr {

QuasiExpSpace::QuasiExpSpace(std::vector<Component> comps) {
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.b < b.b; });
    for (size_t i = 1; i < comps.size(); ++i)
        if (comps[i].b == comps[i - 1].b)
            throw std::invalid_argument("component base points must be pairwise distinct");
    for (auto& comp : comps) {
        if (comp.polys.empty()) throw std::invalid_argument("empty component");
        int width = 0;
        for (const auto& g : comp.polys) width = std::max(width, g.degree() + 1);
        // echelon over descending degree: each basis polynomial comes out
        // monic with a distinct leading degree
        QMatrix m(static_cast<int>(comp.polys.size()), width);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < width; ++j)
                m.at(i, j) = comp.polys[static_cast<size_t>(i)].coeff(width - 1 - j);
        RrefResult rr = rref(m);
        if (rr.rank != m.rows)
            throw std::invalid_argument("component polynomials are linearly dependent");
        for (int i = 0; i < m.rows; ++i) {
            std::vector<Rational> coeffs(static_cast<size_t>(width));
            for (int j = 0; j < width; ++j) coeffs[static_cast<size_t>(width - 1 - j)] = rr.r.at(i, j);
            comp.polys[static_cast<size_t>(i)] = Poly(std::move(coeffs));
        }
        // ascending degree order
        std::reverse(comp.polys.begin(), comp.polys.end());
    }
    components = std::move(comps);
}

Rational pair_qe(const Rational& b, const Poly& g, const Poly& f) {
    Poly d = f;
    Rational acc(0);
    for (int k = 0; k <= g.degree(); ++k) {
        if (g.coeff(k) != 0) acc += g.coeff(k) * d.eval(b);
        d = d.derivative();
    }
    return acc;
}

WronskianResult wronskian(const QuasiExpSpace& c) {
    int n = c.dim();
    std::vector<std::vector<Poly>> m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
    int col = 0;
    for (const auto& comp : c.components)
        for (const auto& g : comp.polys) {
            Poly d = g;
            for (int row = 0; row < n; ++row) {
                m[static_cast<size_t>(row)][static_cast<size_t>(col)] = d;
                d = d.derivative() + d * comp.b;
            }
            ++col;
        }
    Poly wr = det_poly(m);
    WronskianResult res;
    res.degree = wr.degree();
    res.canonical = (res.degree == n);
    res.wr = wr.monic();
    return res;
}

namespace {

// Taylor coefficients in t of e^{bt} g(a + t), truncated to length len,
// with the constant unit e^{ba} dropped.
std::vector<Rational> taylor_row(const Rational& b, const Poly& g, const Rational& a, int len) {
    Poly shifted = g.taylor_shift(a);  // g(a + t)
    std::vector<Rational> expb(static_cast<size_t>(len));
    Rational f(1);
    for (int k = 0; k < len; ++k) {
        expb[static_cast<size_t>(k)] = f;  // b^k / k!
        f = f * b / Rational(k + 1);
    }
    std::vector<Rational> row(static_cast<size_t>(len), Rational(0));
    for (int k = 0; k < len; ++k) {
        Rational acc(0);
        for (int j = 0; j <= k; ++j) acc += expb[static_cast<size_t>(j)] * shifted.coeff(k - j);
        row[static_cast<size_t>(k)] = acc;
    }
    return row;
}

std::vector<int> leading_indices(const QMatrix& m) {
    RrefResult rr = rref(m);
    return rr.pivots;
}

}  // namespace

ExponentSet exponents(const QuasiExpSpace& c, const std::optional<Rational>& at) {
    int n = c.dim();
    ExponentSet out;
    out.location = at;
    if (!at.has_value()) {
        // at infinity: achievable degrees, per component (distinct exponential
        // growth cannot cancel across components)
        std::vector<int> degs;
        for (const auto& comp : c.components) {
            int width = 0;
            for (const auto& g : comp.polys) width = std::max(width, g.degree() + 1);
            QMatrix m(static_cast<int>(comp.polys.size()), width);
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < width; ++j)
                    m.at(i, j) = comp.polys[static_cast<size_t>(i)].coeff(width - 1 - j);
            for (int lead : leading_indices(m)) degs.push_back(width - 1 - lead);
        }
        std::sort(degs.begin(), degs.end());
        if (std::adjacent_find(degs.begin(), degs.end()) != degs.end())
            throw std::invalid_argument("degree collision across components at infinity");
        out.exps = std::move(degs);
        return out;
    }
    const Rational& a = *at;
    // Order of a nonzero quasi-exponential sum is bounded by the total size.
    int len = 0;
    for (const auto& comp : c.components) {
        int d = 0;
        for (const auto& g : comp.polys) d = std::max(d, g.degree());
        len += d + 1;
    }
    len = std::max(len, n);
    QMatrix m(n, len);
    int row = 0;
    for (const auto& comp : c.components)
        for (const auto& g : comp.polys) {
            auto r = taylor_row(comp.b, g, a, len);
            for (int j = 0; j < len; ++j) m.at(row, j) = r[static_cast<size_t>(j)];
            ++row;
        }
    out.exps = leading_indices(m);
    if (static_cast<int>(out.exps.size()) != n)
        throw std::logic_error("truncated Taylor matrix lost rank");
    return out;
}

MultiPoly tau_qe(const QuasiExpSpace& c, int m) {
    if (m < 1) throw std::invalid_argument("tau_qe needs m >= 1");
    int n = c.dim();
    // G'(z)/G(z) = sum_{i<=m} i t_i z^{i-1}
    std::vector<MultiPoly> logderiv(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        logderiv[static_cast<size_t>(i - 1)] = MultiPoly::variable(m, i - 1, Rational(i));

    auto apply_ddz = [&](const std::vector<MultiPoly>& q) {
        // (Q G)' = (Q' + Q G'/G) G
        std::vector<MultiPoly> r(q.size() + static_cast<size_t>(m), MultiPoly(m));
        for (size_t d = 1; d < q.size(); ++d)
            r[d - 1] = r[d - 1] + q[d] * Rational(static_cast<long>(d));
        for (size_t d = 0; d < q.size(); ++d)
            for (int i = 0; i < m; ++i)
                if (!logderiv[static_cast<size_t>(i)].is_zero())
                    r[d + static_cast<size_t>(i)] = r[d + static_cast<size_t>(i)] + q[d] * logderiv[static_cast<size_t>(i)];
        while (r.size() > 1 && r.back().is_zero()) r.pop_back();
        return r;
    };

    std::vector<std::vector<MultiPoly>> mat(static_cast<size_t>(n),
                                            std::vector<MultiPoly>(static_cast<size_t>(n), MultiPoly(m)));
    int row = 0;
    for (const auto& comp : c.components)
        for (const auto& g : comp.polys) {
            for (int j = 0; j < n; ++j) {
                // Q G with Q = z^j, then apply g(d/dz), then evaluate at z = b
                std::vector<MultiPoly> q(static_cast<size_t>(j) + 1, MultiPoly(m));
                q[static_cast<size_t>(j)] = MultiPoly::constant(m, Rational(1));
                MultiPoly acc(m);
                std::vector<MultiPoly> cur = q;
                for (int k = 0; k <= g.degree(); ++k) {
                    if (g.coeff(k) != 0) {
                        Rational bp(1);
                        MultiPoly val(m);
                        for (size_t d = 0; d < cur.size(); ++d) {
                            val = val + cur[d] * bp;
                            bp *= comp.b;
                        }
                        acc = acc + val * g.coeff(k);
                    }
                    if (k < g.degree()) cur = apply_ddz(cur);
                }
                mat[static_cast<size_t>(row)][static_cast<size_t>(j)] = acc;
            }
            ++row;
        }
    return det_multipoly(mat, m);
}

DualCellData dual_cell_data(const QuasiExpSpace& c) {
    // A finite point is singular iff the Wronskian vanishes there, canonical
    // or not, so the search runs over the Wronskian's rational roots.
    WronskianResult w = wronskian(c);
    DualCellData out;
    int n = c.dim();
    if (w.wr.degree() < 1) return out;
    RootMultiset rm = rational_root_multiset(w.wr);
    out.nonsplit_wronskian = rm.nonsplit;
    std::vector<int> regular(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) regular[static_cast<size_t>(i)] = i;
    for (const auto& [r, mult] : rm.roots) {
        ExponentSet e = exponents(c, r);
        if (e.exps != regular) out.singular.emplace_back(r, e);
    }
    return out;
}

}  // namespace cmgr
