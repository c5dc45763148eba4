#pragma once

#include "cmgr/poly.hpp"
#include "cmgr/rational.hpp"

#include <optional>
#include <vector>

namespace cmgr {

// Dense matrix of exact rationals.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), Rational(0)) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& s) const;
    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
};

struct RrefResult {
    QMatrix r;
    std::vector<int> pivots;  // strictly increasing column indices
    int rank = 0;
};

// Reduced row echelon form over the rationals.
RrefResult rref(const QMatrix& m);

int rank(const QMatrix& m);

// Basis of the right nullspace, as column vectors stacked into n x k.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

// Solve m x = b. Returns particular solution and a basis of the homogeneous
// solutions, or nullopt when inconsistent.
struct LinearSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> kernel;
};
std::optional<LinearSolution> solve_linear(const QMatrix& m, const std::vector<Rational>& b);

// Fraction-free determinant (Bareiss elimination).
Rational det_bareiss(const QMatrix& m);
// Cofactor-expansion determinant, kept as an independent oracle.
Rational det_cofactor(const QMatrix& m);

// Monic characteristic polynomial det(t I - M) via Faddeev-LeVerrier.
Poly charpoly(const QMatrix& m);

QMatrix kronecker(const QMatrix& a, const QMatrix& b);

// Inverse; throws when singular.
QMatrix inverse(const QMatrix& m);

// Solve X Y - Y X = M for X. Returns a particular solution and a basis of the
// centralizer {K : K Y = Y K}, or nullopt when the system is inconsistent.
// tr(M) = 0 is a necessary condition and is checked first.
struct SylvesterSolution {
    QMatrix particular;
    std::vector<QMatrix> kernel;
};
std::optional<SylvesterSolution> solve_sylvester(const QMatrix& y, const QMatrix& m);

}  // namespace cmgr
