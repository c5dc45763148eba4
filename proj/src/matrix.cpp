#include "cmgr/matrix.hpp"

#include <algorithm>

namespace cmgr {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix literal");
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols)
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("size mismatch in +");
    QMatrix m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("size mismatch in -");
    QMatrix m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("size mismatch in *");
    QMatrix m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

QMatrix QMatrix::operator*(const Rational& s) const {
    QMatrix m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rational QMatrix::trace() const {
    if (rows != cols) throw std::invalid_argument("trace of non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
}

bool QMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RrefResult rref(const QMatrix& m) {
    RrefResult res{m, {}, 0};
    QMatrix& r = res.r;
    int row = 0;
    for (int col = 0; col < r.cols && row < r.rows; ++col) {
        int piv = -1;
        for (int i = row; i < r.rows; ++i)
            if (r.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
        Rational inv = Rational(1) / r.at(row, col);
        for (int j = col; j < r.cols; ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == row || r.at(i, col) == 0) continue;
            Rational f = r.at(i, col);
            for (int j = col; j < r.cols; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

int rank(const QMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t prow = 0; prow < rr.pivots.size(); ++prow)
            v[static_cast<size_t>(rr.pivots[prow])] = -rr.r.at(static_cast<int>(prow), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_linear(const QMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("rhs size mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[static_cast<size_t>(i)];
    }
    RrefResult rr = rref(aug);
    for (int p : rr.pivots)
        if (p == m.cols) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(static_cast<size_t>(m.cols), Rational(0));
    for (size_t prow = 0; prow < rr.pivots.size(); ++prow)
        sol.particular[static_cast<size_t>(rr.pivots[prow])] = rr.r.at(static_cast<int>(prow), m.cols);
    sol.kernel = nullspace(m);
    return sol;
}

Rational det_bareiss(const QMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    QMatrix w = m;
    Rational prev(1);
    Rational sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

Rational det_cofactor(const QMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows;
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    Rational sign(1);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) != 0) {
            QMatrix minor(n - 1, n - 1);
            for (int i = 1; i < n; ++i) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, cc++) = m.at(i, c);
                }
            }
            acc += sign * m.at(0, j) * det_cofactor(minor);
        }
        sign = -sign;
    }
    return acc;
}

Poly charpoly(const QMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("charpoly of non-square matrix");
    int n = m.rows;
    // Faddeev-LeVerrier: N_1 = M, c_{n-1} = -tr N_1,
    // N_{k+1} = M (N_k + c_{n-k} I), c_{n-k-1} = -tr(N_{k+1}) / (k+1).
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(n)] = 1;
    QMatrix nk = m;
    c[static_cast<size_t>(n - 1)] = -nk.trace();
    for (int k = 1; k < n; ++k) {
        QMatrix shifted = nk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[static_cast<size_t>(n - k)];
        nk = m * shifted;
        c[static_cast<size_t>(n - k - 1)] = -nk.trace() / Rational(k + 1);
    }
    return Poly(std::move(c));
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    m.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[static_cast<size_t>(n - 1)] >= n)
        throw std::invalid_argument("singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

std::optional<SylvesterSolution> solve_sylvester(const QMatrix& y, const QMatrix& m) {
    if (y.rows != y.cols || m.rows != m.cols || y.rows != m.rows)
        throw std::invalid_argument("solve_sylvester needs square matrices of equal size");
    if (m.trace() != 0) return std::nullopt;
    int n = y.rows;
    // vec is row-major: vec(X Y - Y X) = (I (x) Y^t - Y (x) I) vec(X)
    // using vec(A X B) = (A (x) B^t) vec(X) for row-major vec.
    QMatrix id = QMatrix::identity(n);
    QMatrix sys = kronecker(id, y.transpose()) - kronecker(y, id);
    std::vector<Rational> rhs(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    SylvesterSolution out{QMatrix(n, n), {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.particular.at(i, j) = sol->particular[static_cast<size_t>(i) * n + j];
    for (const auto& k : sol->kernel) {
        QMatrix km(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) km.at(i, j) = k[static_cast<size_t>(i) * n + j];
        out.kernel.push_back(std::move(km));
    }
    return out;
}

}  // namespace cmgr
