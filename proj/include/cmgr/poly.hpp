#pragma once

#include "cmgr/rational.hpp"

#include <vector>

namespace cmgr {

// Univariate polynomial, dense coefficients by ascending degree.
// Invariant: leading coefficient nonzero, or coeffs empty (the zero polynomial).
// degree() of the zero polynomial is the sentinel -1.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rational& a) { return Poly{{a}}; }
    // c0 + c1 x
    static Poly linear(const Rational& c0, const Rational& c1) { return Poly{{c0, c1}}; }
    static Poly monomial(int deg, const Rational& a = Rational(1));

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
        return c[static_cast<size_t>(k)];
    }
    Rational leading() const { return c.empty() ? Rational(0) : c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& a) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Poly pow(int k) const;
    // coefficients of p(x + a)
    Poly taylor_shift(const Rational& a) const;
    Poly monic() const;
    // order of vanishing at 0 (index of lowest nonzero coefficient); -1 for zero poly
    int low_order() const;

    std::string to_string(const std::string& var = "x") const;
};

// exact division by (x - r); throws unless r is a root
Poly divide_linear_factor(const Poly& p, const Rational& r);

inline Poly Poly::monomial(int deg, const Rational& a) {
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = a;
    return Poly(std::move(v));
}

inline Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return Poly(std::move(v));
}

inline Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> v(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] -= o.c[i];
    return Poly(std::move(v));
}

inline Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<Rational> v(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    return Poly(std::move(v));
}

inline Poly Poly::operator*(const Rational& a) const {
    if (a == 0) return Poly{};
    std::vector<Rational> v = c;
    for (auto& x : v) x *= a;
    return Poly(std::move(v));
}

inline Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly{};
    std::vector<Rational> v(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

inline Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

inline Poly Poly::pow(int k) const {
    Poly acc = Poly::constant(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

inline Poly Poly::taylor_shift(const Rational& a) const {
    Poly acc;
    // Horner: p(x + a) = (...((c_n)(x+a) + c_{n-1})(x+a) + ...)
    Poly xa = Poly{{a, Rational(1)}};
    for (size_t i = c.size(); i-- > 0;) acc = acc * xa + Poly::constant(c[i]);
    return acc;
}

inline Poly Poly::monic() const {
    if (is_zero()) return Poly{};
    return (*this) * (Rational(1) / leading());
}

inline int Poly::low_order() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

inline std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_to_string(c[i]);
        if (i > 0) s += "*" + var + "^" + std::to_string(i);
    }
    return s;
}

// Determinant of a square matrix of polynomials (Laplace, column-subset memo).
inline Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(Rational(1));
    std::vector<Poly> memo(1u << n);
    memo[0] = Poly::constant(Rational(1));
    std::vector<std::vector<unsigned>> by_count(n + 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        by_count[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    for (size_t cnt = 1; cnt <= n; ++cnt)
        for (unsigned mask : by_count[cnt]) {
            size_t row = cnt - 1;  // expand along the last row of the minor
            Poly acc;
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

inline Poly divide_linear_factor(const Poly& p, const Rational& r) {
    if (p.is_zero()) throw std::invalid_argument("dividing zero polynomial");
    std::vector<Rational> q(p.c.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = p.c.size(); i-- > 1;) {
        carry = p.c[i] + carry * r;
        q[i - 1] = carry;
    }
    if (p.c[0] + carry * r != 0) throw std::invalid_argument("not a root in divide_linear_factor");
    return Poly(std::move(q));
}

}  // namespace cmgr
