#include "cmgr/baker.hpp"

#include <algorithm>

namespace cmgr {

std::string DiffOperator::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [ij, a] : coeffs) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(a);
        if (ij.second > 0) s += "*x^" + std::to_string(ij.second);
        if (ij.first > 0) s += "*d^" + std::to_string(ij.first);
    }
    return s;
}

BakerPolynomial psi_pol(const CMPoint& p) {
    int n = p.n;
    // entries of (X - x)(Y - z) - 1 are polynomials in (z, x)
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(n),
                                          std::vector<MultiPoly>(static_cast<size_t>(n), MultiPoly(2)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly e(2);
            for (int k = 0; k < n; ++k) {
                // (X - x)_{ik} (Y - z)_{kj}
                MultiPoly left = MultiPoly::constant(2, p.x.at(i, k));
                if (i == k) left = left - MultiPoly::variable(2, 1);  // x
                MultiPoly right = MultiPoly::constant(2, p.y.at(k, j));
                if (k == j) right = right - MultiPoly::variable(2, 0);  // z
                e = e + left * right;
            }
            if (i == j) e = e - MultiPoly::constant(2, Rational(1));
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        }
    BakerPolynomial bp;
    bp.n = n;
    bp.g = det_multipoly(m, 2);
    return bp;
}

DiffOperator diff_op(const BakerPolynomial& bp) {
    DiffOperator d;
    for (const auto& [e, a] : bp.g.terms) d.add(e[0], e[1], a);
    return d;
}

DiffOperator diff_op(const CMPoint& p) { return diff_op(psi_pol(p)); }

Poly apply_op(const DiffOperator& d, const Rational& b, const Poly& g) {
    Poly out;
    for (const auto& [ij, a] : d.coeffs) {
        auto [i, j] = ij;
        Poly h = g;
        for (int k = 0; k < i; ++k) h = h.derivative() + h * b;
        out = out + Poly::monomial(j, a) * h;
    }
    return out;
}

DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b) {
    // d^i x^k = sum_r C(i,r) k_(r) x^{k-r} d^{i-r} with k_(r) falling factorial,
    // so (x^j d^i)(x^k d^l) = sum_r C(i,r) k_(r) x^{j+k-r} d^{i+l-r}.
    DiffOperator out;
    for (const auto& [ij, ca] : a.coeffs)
        for (const auto& [lk, cb] : b.coeffs) {
            int i = ij.first, j = ij.second;
            int l = lk.first, k = lk.second;
            Rational term = ca * cb;  // r = 0 value of C(i,r) k_(r)
            for (int r = 0; r <= std::min(i, k); ++r) {
                out.add(i + l - r, j + k - r, term);
                term = term * Rational(i - r) / Rational(r + 1) * Rational(k - r);
            }
        }
    return out;
}

bool op_proportional(const DiffOperator& a, const DiffOperator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.coeffs.begin()->first != b.coeffs.begin()->first) return false;
    const Rational& ca = a.coeffs.begin()->second;
    const Rational& cb = b.coeffs.begin()->second;
    DiffOperator lhs, rhs;
    for (const auto& [ij, c] : a.coeffs) lhs.add(ij.first, ij.second, c * cb);
    for (const auto& [ij, c] : b.coeffs) rhs.add(ij.first, ij.second, c * ca);
    return lhs == rhs;
}

QuasiExpSpace solution_space(const CMPoint& p) {
    int n = p.n;
    Poly cpy = charpoly(p.y);
    RootMultiset rm = rational_root_multiset(cpy);
    if (!rm.split())
        throw std::invalid_argument("Y-spectrum does not split over the rationals; irreducible factor " +
                                    rm.nonsplit.to_string("t"));
    DiffOperator d = diff_op(p);
    int bound = 2 * n;  // solutions have polynomial part of degree < 2n
    std::vector<QuasiExpSpace::Component> comps;
    for (const auto& [b, mult] : rm.roots) {
        // linear system: coefficients of D(e^{bx} x^c) stacked over c < bound
        int max_deg = 0;
        for (const auto& [ij, a] : d.coeffs) max_deg = std::max(max_deg, ij.second);
        int out_len = bound + max_deg + 1;
        QMatrix sys(out_len, bound);
        for (int c = 0; c < bound; ++c) {
            Poly img = apply_op(d, b, Poly::monomial(c));
            for (int r = 0; r <= img.degree(); ++r) sys.at(r, c) = img.coeff(r);
        }
        auto basis = nullspace(sys);
        if (static_cast<int>(basis.size()) != mult)
            throw std::logic_error("solution block dimension " + std::to_string(basis.size()) +
                                   " does not match eigenvalue multiplicity " + std::to_string(mult));
        std::vector<Poly> polys;
        for (const auto& vec : basis) polys.emplace_back(std::vector<Rational>(vec.begin(), vec.end()));
        comps.push_back({b, std::move(polys)});
    }
    QuasiExpSpace c(std::move(comps));
    if (c.dim() != n) throw std::logic_error("solution space dimension mismatch");
    return c;
}

QMatrix cperp_span(const CMPoint& p, int depth) {
    int n = p.n;
    if (depth < 2 * n) throw std::invalid_argument("cperp_span needs depth >= 2n");
    BakerPolynomial bp = psi_pol(p);
    // slice_k = (z + d_x)^k g |_{x=0}; nonzero truncations only for k < depth + n
    std::vector<std::vector<Rational>> rows;
    MultiPoly cur = bp.g;  // accumulated (z + d_x)^k g
    for (int k = 0; k < depth + n; ++k) {
        std::vector<Rational> row(static_cast<size_t>(depth), Rational(0));
        for (const auto& [e, a] : cur.terms)
            if (e[1] == 0 && e[0] < depth) row[static_cast<size_t>(e[0])] += a;
        rows.push_back(std::move(row));
        // next: z * cur + d_x cur
        MultiPoly next(2);
        for (const auto& [e, a] : cur.terms) {
            std::vector<int> ez = e;
            ez[0] += 1;
            next.add_term(ez, a);
            if (e[1] > 0) {
                std::vector<int> ex = e;
                ex[1] -= 1;
                next.add_term(ex, a * Rational(e[1]));
            }
        }
        cur = next;
    }
    QMatrix m(static_cast<int>(rows.size()), depth);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < depth; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    RrefResult rr = rref(m);
    QMatrix out(std::max(rr.rank, 1), depth);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < depth; ++j) out.at(i, j) = rr.r.at(i, j);
    return out;
}

MultiPartition classify_cell(const CMPoint& p) {
    MultiPartition out;
    for (const auto& [b, block] : factorize(p)) {
        CMPoint shifted = transform(block, TransformKind::Translate, b);
        QuasiExpSpace c = solution_space(shifted);
        if (c.components.size() != 1 || c.components[0].b != 0)
            throw std::logic_error("translated block must be supported at zero");
        ExponentSet degs = exponents(c, std::nullopt);
        int m = block.n;
        std::vector<int> parts;
        for (int i = 0; i < m; ++i) {
            int mu_i = degs.exps[static_cast<size_t>(m - 1 - i)] + (i + 1) - m;
            parts.push_back(mu_i);
        }
        Partition mu(std::move(parts));
        out.blocks.emplace_back(b, mu.transpose());
    }
    return out;
}

bool is_fuchsian(const CMPoint& p) {
    Poly cpy = charpoly(p.y);
    // spectrum {0} means charpoly = t^n
    for (int k = 0; k < cpy.degree(); ++k)
        if (cpy.coeff(k) != 0) return false;
    return true;
}

}  // namespace cmgr
