#pragma once

#include "cmgr/cm.hpp"
#include "cmgr/multipoly.hpp"
#include "cmgr/partition.hpp"
#include "cmgr/quasi_exp.hpp"

#include <map>
#include <utility>

namespace cmgr {

// Polynomial part g(z, x) of the Baker function e^{xz} g(z, x); degree at
// most n in each variable. Variable order in the MultiPoly: (z, x).
struct BakerPolynomial {
    int n = 0;
    MultiPoly g;  // nvars = 2
};

// D = sum a_{i,j} x^j d^i with finite support.
struct DiffOperator {
    std::map<std::pair<int, int>, Rational> coeffs;  // (i, j) -> a_{i,j}

    bool is_zero() const { return coeffs.empty(); }
    void add(int i, int j, const Rational& a) {
        if (a == 0) return;
        auto key = std::make_pair(i, j);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            coeffs.emplace(key, a);
        } else {
            it->second += a;
            if (it->second == 0) coeffs.erase(it);
        }
    }
    bool operator==(const DiffOperator& o) const { return coeffs == o.coeffs; }
    std::string to_string() const;
};

// g(z,x) = det((X - x)(Y - z) - 1), an exact bivariate determinant.
BakerPolynomial psi_pol(const CMPoint& p);

// Transpose the coefficient array of the Baker polynomial: z^i x^j -> x^j d^i.
DiffOperator diff_op(const CMPoint& p);
DiffOperator diff_op(const BakerPolynomial& bp);

// D applied to e^{bx} g(x), via d(e^{bx} h) = e^{bx} (d + b) h; returns the
// polynomial part of the image.
Poly apply_op(const DiffOperator& d, const Rational& b, const Poly& g);

// Normally ordered product (composition) of two operators.
DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b);

// Projective comparison of operators.
bool op_proportional(const DiffOperator& a, const DiffOperator& b);

// Exact solution space of D_P inside sum_b e^{bx} C[x]_{2n}, one block per
// rational eigenvalue b of Y with dim = multiplicity. Requires a split
// Y-spectrum.
QuasiExpSpace solution_space(const CMPoint& p);

// Span of the x-derivative slices (z + d_x)^k g(z, x) |_{x=0}, truncated to
// z-degree < depth, returned as an RREF coefficient matrix over z^0..z^{depth-1}.
QMatrix cperp_span(const CMPoint& p, int depth);

// Cell label of the point: factorize along Y, translate each block to
// support 0, read the solution-space degrees at infinity, transpose.
MultiPartition classify_cell(const CMPoint& p);

// The support is concentrated at zero, i.e. Y is nilpotent.
bool is_fuchsian(const CMPoint& p);

}  // namespace cmgr
