#pragma once

#include "cmgr/poly.hpp"
#include "cmgr/rational.hpp"

#include <map>
#include <vector>

namespace cmgr {

// Sparse multivariate polynomial over a fixed, ordered variable set.
// Invariant: no stored zero coefficients; every exponent tuple has size nvars.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    MultiPoly() = default;
    explicit MultiPoly(int n) : nvars(n) {}

    static MultiPoly constant(int nvars, const Rational& a) {
        MultiPoly p(nvars);
        if (a != 0) p.terms[std::vector<int>(static_cast<size_t>(nvars), 0)] = a;
        return p;
    }
    static MultiPoly variable(int nvars, int idx, const Rational& a = Rational(1)) {
        MultiPoly p(nvars);
        if (a != 0) {
            std::vector<int> e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(idx)] = 1;
            p.terms[std::move(e)] = a;
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }

    void add_term(const std::vector<int>& e, const Rational& a) {
        if (a == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, a);
        } else {
            it->second += a;
            if (it->second == 0) terms.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, a] : o.terms) r.add_term(e, a);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, a] : o.terms) r.add_term(e, -a);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(nvars);
        for (const auto& [e1, a1] : terms)
            for (const auto& [e2, a2] : o.terms) {
                std::vector<int> e(e1);
                for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
                r.add_term(e, a1 * a2);
            }
        return r;
    }
    MultiPoly operator*(const Rational& a) const {
        MultiPoly r(nvars);
        if (a == 0) return r;
        for (const auto& [e, c] : terms) r.terms[e] = c * a;
        return r;
    }

    // substitute var idx := value, producing a polynomial in the remaining tuple
    // (exponent of idx folded into the coefficient, tuple slot zeroed)
    MultiPoly eval_var(int idx, const Rational& value) const {
        MultiPoly r(nvars);
        for (const auto& [e, a] : terms) {
            Rational coeff = a;
            Rational p(1);
            for (int k = 0; k < e[static_cast<size_t>(idx)]; ++k) p *= value;
            coeff *= p;
            std::vector<int> e2 = e;
            e2[static_cast<size_t>(idx)] = 0;
            r.add_term(e2, coeff);
        }
        return r;
    }

    // substitute var k := scale^(k+1) * var k for every k (used by torus rescaling)
    MultiPoly rescale_vars(const Rational& alpha) const {
        MultiPoly r(nvars);
        for (const auto& [e, a] : terms) {
            Rational f(1);
            for (size_t k = 0; k < e.size(); ++k)
                for (int j = 0; j < e[k] * static_cast<int>(k + 1); ++j) f *= alpha;
            r.add_term(e, a * f);
        }
        return r;
    }

    // restrict to the univariate polynomial in var 0, all other vars set to 0
    Poly restrict_to_first_var() const {
        std::vector<Rational> c;
        for (const auto& [e, a] : terms) {
            bool pure = true;
            for (size_t k = 1; k < e.size(); ++k)
                if (e[k] != 0) { pure = false; break; }
            if (!pure) continue;
            size_t d = e.empty() ? 0 : static_cast<size_t>(e[0]);
            if (c.size() <= d) c.resize(d + 1, Rational(0));
            c[d] += a;
        }
        return Poly(std::move(c));
    }

    std::string to_string(const std::vector<std::string>& names) const;
};

// projective equality: a and b nonzero and a*q == b*p where p, q are the
// reference coefficients (first stored term of each)
inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.nvars != b.nvars) return false;
    const Rational& ca = a.terms.begin()->second;
    const Rational& cb = b.terms.begin()->second;
    return (a * cb) == (b * ca);
}

// Determinant of a square matrix of multivariate polynomials, by Laplace
// expansion memoized over column subsets.
inline MultiPoly det_multipoly(const std::vector<std::vector<MultiPoly>>& m, int nvars) {
    size_t n = m.size();
    if (n == 0) return MultiPoly::constant(nvars, Rational(1));
    std::map<unsigned, MultiPoly> memo;
    memo[0] = MultiPoly::constant(nvars, Rational(1));
    std::vector<std::vector<unsigned>> by_count(n + 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        by_count[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    for (size_t cnt = 1; cnt <= n; ++cnt)
        for (unsigned mask : by_count[cnt]) {
            size_t row = cnt - 1;  // expand along the last row of the minor
            MultiPoly acc(nvars);
            int pos = 0;
            for (size_t col = 0; col < n; ++col) {
                if (!(mask & (1u << col))) continue;
                int sign = ((static_cast<int>(row) + pos) % 2 == 0) ? 1 : -1;
                if (!m[row][col].is_zero())
                    acc = acc + memo[mask & ~(1u << col)] * m[row][col] * Rational(sign);
                ++pos;
            }
            memo[mask] = acc;
        }
    return memo[(1u << n) - 1];
}

inline std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, a] : terms) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(a);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            s += "*" + names[k];
            if (e[k] != 1) s += "^" + std::to_string(e[k]);
        }
    }
    return s;
}

}  // namespace cmgr
