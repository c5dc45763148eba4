#include "cmgr/window.hpp"

#include "cmgr/rng.hpp"

#include <algorithm>

namespace cmgr {

WindowSubspace::WindowSubspace(int n_, const Rational& b_, const QMatrix& rows) : n(n_), b(b_) {
    if (n <= 0) throw std::invalid_argument("window size must be positive");
    if (rows.cols != 2 * n) throw std::invalid_argument("window rows must have 2n columns");
    RrefResult rr = rref(rows);
    if (rr.rank != n) throw std::invalid_argument("window basis must have rank n");
    if (rows.rows != n) {
        QMatrix trimmed(n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2 * n; ++j) trimmed.at(i, j) = rr.r.at(i, j);
        basis = trimmed;
    } else {
        basis = rr.r;
    }
    // degree check: the pivot partition must have size exactly n
    int size = 0;
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        int s = rr.pivots[static_cast<size_t>(i)] - n;  // column -> exponent
        int lam = static_cast<int>(i) - s;
        if (lam < 0) throw std::invalid_argument("window pivots do not define a partition");
        size += lam;
    }
    if (size != n)
        throw std::invalid_argument("window space has degree " + std::to_string(size) +
                                    ", expected " + std::to_string(n));
}

std::vector<int> WindowSubspace::pivot_exponents() const {
    RrefResult rr = rref(basis);
    std::vector<int> exps;
    for (int p : rr.pivots) exps.push_back(p - n);
    return exps;
}

Partition cell_of_window(const WindowSubspace& w) {
    std::vector<int> s = w.pivot_exponents();
    std::vector<int> parts;
    for (size_t i = 0; i < s.size(); ++i) parts.push_back(static_cast<int>(i) - s[i]);
    return Partition(std::move(parts));
}

WindowSubspace sample_window_cell(const Partition& lambda, const Rational& b, std::uint64_t seed) {
    int n = lambda.size();
    if (n <= 0) throw std::invalid_argument("sample_window_cell needs a nonempty partition");
    Rng rng(seed);
    std::vector<int> pivots = pivot_set(lambda, n);  // n exponents in [-n, n)
    std::vector<bool> is_pivot(static_cast<size_t>(2 * n), false);
    for (int s : pivots) is_pivot[static_cast<size_t>(s + n)] = true;
    QMatrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        int pcol = pivots[static_cast<size_t>(i)] + n;
        m.at(i, pcol) = 1;
        for (int j = pcol + 1; j < 2 * n; ++j)
            if (!is_pivot[static_cast<size_t>(j)]) {
                Rational a(rng.pick(-4, 4), rng.pick(1, 3));
                a.canonicalize();
                m.at(i, j) = a;
            }
    }
    return WindowSubspace(n, b, m);
}

QuasiExpSpace eta(const WindowSubspace& w) {
    int n = w.n;
    // pairing matrix against x^0..x^{2n-1}: column k scaled by k!
    QMatrix m(n, 2 * n);
    Rational fact(1);
    for (int k = 0; k < 2 * n; ++k) {
        if (k > 0) fact *= Rational(k);
        for (int i = 0; i < n; ++i) m.at(i, k) = w.basis.at(i, k) * fact;
    }
    auto null_basis = nullspace(m);
    if (static_cast<int>(null_basis.size()) != n) throw std::logic_error("eta nullspace dimension mismatch");
    std::vector<Poly> polys;
    for (const auto& vec : null_basis) polys.emplace_back(std::vector<Rational>(vec.begin(), vec.end()));
    return QuasiExpSpace({{w.b, std::move(polys)}});
}

PlueckerVector pluecker(const WindowSubspace& w) {
    int n = w.n;
    PlueckerVector pv;
    pv.n = n;
    std::vector<Partition> box;
    for (int k = 0; k <= n * n; ++k)
        for (const auto& p : partitions_of(k))
            if (p.fits_box(n, n)) box.push_back(p);
    for (const auto& mu : box) {
        // minor on the pivot columns of mu: s_i = i - mu_i
        QMatrix minor(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) minor.at(i, j) = w.basis.at(i, j - mu.part(j) + n);
        Rational d = det_bareiss(minor);
        if (d != 0) pv.coords[mu] = d;
    }
    if (pv.coords.empty()) throw std::logic_error("vanishing Pluecker vector");
    return pv;
}

namespace {

std::vector<Poly> flag_basis(const FlagSpec& flag, int k) {
    std::vector<Poly> out;
    int twon = flag.ambient2n;
    if (!flag.at.has_value()) {
        for (int d = 0; d < k; ++d) out.push_back(Poly::monomial(d));
    } else {
        Poly shift = Poly::linear(-*flag.at, Rational(1));  // x - q
        Poly p = shift.pow(twon - k);
        for (int d = 0; d < k; ++d) {
            out.push_back(p);
            p = p * shift;
        }
    }
    return out;
}

}  // namespace

std::vector<int> flag_intersection_dims(const std::vector<Poly>& v_basis, const FlagSpec& flag) {
    int twon = flag.ambient2n;
    int nv = static_cast<int>(v_basis.size());
    for (const auto& p : v_basis)
        if (p.degree() >= twon) throw std::invalid_argument("basis polynomial outside C[x]_{2n}");
    {
        QMatrix vm(nv, twon);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < twon; ++j) vm.at(i, j) = v_basis[static_cast<size_t>(i)].coeff(j);
        if (rank(vm) != nv) throw std::invalid_argument("basis polynomials are linearly dependent");
    }
    std::vector<int> dims;
    for (int k = 0; k <= twon; ++k) {
        auto fb = flag_basis(flag, k);
        QMatrix m(nv + std::max(k, 1), twon);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < twon; ++j) m.at(i, j) = v_basis[static_cast<size_t>(i)].coeff(j);
        for (int i = 0; i < static_cast<int>(fb.size()); ++i)
            for (int j = 0; j < twon; ++j) m.at(nv + i, j) = fb[static_cast<size_t>(i)].coeff(j);
        dims.push_back(nv + k - rank(m));
    }
    return dims;
}

bool schubert_member(const std::vector<Poly>& v_basis, const FlagSpec& flag, const Partition& lambda) {
    int twon = flag.ambient2n;
    int n = twon / 2;
    if (!lambda.fits_box(n, n)) throw std::invalid_argument("cell partition outside the n x n box");
    if (static_cast<int>(v_basis.size()) != n)
        throw std::invalid_argument("schubert_member expects an n-dimensional space");
    std::vector<int> dims = flag_intersection_dims(v_basis, flag);
    // dim(V cap F_k) = i on n+i-lambda_{i-1} <= k <= n+i-lambda_i, lambda_{-1} = n
    for (int i = 0; i <= n; ++i) {
        int lo = n + i - (i == 0 ? n : lambda.part(i - 1));
        int hi = n + i - lambda.part(i);
        for (int k = std::max(lo, 0); k <= std::min(hi, twon); ++k)
            if (dims[static_cast<size_t>(k)] != i) return false;
    }
    return true;
}

bool omega_mu_q_member(const std::vector<Poly>& v_basis, const MultiPartition& mu) {
    for (size_t i = 0; i < mu.blocks.size(); ++i)
        for (size_t j = i + 1; j < mu.blocks.size(); ++j)
            if (mu.blocks[i].first == mu.blocks[j].first)
                throw std::invalid_argument("flag points must be pairwise distinct");
    int n = static_cast<int>(v_basis.size());
    for (const auto& [q, part] : mu.blocks) {
        FlagSpec f{q, 2 * n};
        if (!schubert_member(v_basis, f, part)) return false;
    }
    return true;
}

}  // namespace cmgr
