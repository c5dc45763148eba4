#include "cmgr/matrix.hpp"
#include "cmgr/rng.hpp"
#include "cmgr/roots.hpp"

#include <doctest.h>

using namespace cmgr;

namespace {

QMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> rr;
        for (long v : row) rr.emplace_back(v);
        r.push_back(std::move(rr));
    }
    return QMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("rational basics") {
    Rational a = rat(2, 4);
    CHECK(rat_num(a) == 1);
    CHECK(rat_den(a) == 2);
    CHECK(rat_to_string(a) == "1/2");
    CHECK(rat_to_string(rat(-6, 3)) == "-2");
    CHECK(rat_from_string("7/21") == rat(1, 3));
    CHECK(rat_from_string("-5") == rat(-5));
    CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("rref identity and dependent rows") {
    auto id = rref(QMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivots == std::vector<int>{0, 1, 2});
    CHECK(id.r == QMatrix::identity(3));

    auto dep = rref(mat({{1, 2}, {2, 4}}));
    CHECK(dep.rank == 1);
    CHECK(dep.pivots == std::vector<int>{0});
}

TEST_CASE("rref window rows of z^-2 and z^1") {
    // window exponents -2..1 as columns 0..3
    QMatrix m(2, 4);
    m.at(0, 0) = 1;
    m.at(1, 3) = 1;
    auto rr = rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 3});
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = static_cast<int>(rng.pick(1, 5));
        int c = static_cast<int>(rng.pick(1, 5));
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.pick(-3, 3));
        auto once = rref(m);
        auto twice = rref(once.r);
        CHECK(once.r == twice.r);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("charpoly examples") {
    QMatrix jordan(2, 2);
    jordan.at(0, 1) = 1;
    CHECK(charpoly(jordan) == Poly({Rational(0), Rational(0), Rational(1)}));

    QMatrix diag(2, 2);
    diag.at(0, 0) = 1;
    diag.at(1, 1) = 2;
    CHECK(charpoly(diag) == Poly({Rational(2), Rational(-3), Rational(1)}));

    // Z = Y X at the fixed point of (2)
    QMatrix z = mat({{-1, 0}, {0, 0}});
    CHECK(charpoly(z) == Poly({Rational(0), Rational(1), Rational(1)}));
}

TEST_CASE("charpoly vanishes on triangular eigenvalues") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.pick(1, 5));
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = rng.small_rational();
        Poly cp = charpoly(m);
        for (int i = 0; i < n; ++i) CHECK(cp.eval(m.at(i, i)) == 0);
    }
}

TEST_CASE("rational roots") {
    // t(t+1)
    auto rm = rational_root_multiset(Poly({Rational(0), Rational(1), Rational(1)}));
    REQUIRE(rm.roots.size() == 2);
    CHECK(rm.roots[0] == std::make_pair(Rational(-1), 1));
    CHECK(rm.roots[1] == std::make_pair(Rational(0), 1));
    CHECK(rm.split());

    // t^2 + 1 irreducible
    auto irr = rational_root_multiset(Poly({Rational(1), Rational(0), Rational(1)}));
    CHECK(irr.roots.empty());
    CHECK(irr.nonsplit == Poly({Rational(1), Rational(0), Rational(1)}));

    // (t - 1/2)^2
    Poly sq = Poly({rat(-1, 2), Rational(1)}) * Poly({rat(-1, 2), Rational(1)});
    auto dbl = rational_root_multiset(sq);
    REQUIRE(dbl.roots.size() == 1);
    CHECK(dbl.roots[0] == std::make_pair(rat(1, 2), 2));
    CHECK(dbl.split());

    CHECK_THROWS(rational_root_multiset(Poly{}));
}

TEST_CASE("rational roots reconstruct random factorizations") {
    Rng rng(97);
    Poly irr({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<Rational, int>> built;
        Poly p = Poly::constant(rng.small_rational());
        int k = static_cast<int>(rng.pick(1, 3));
        for (int i = 0; i < k; ++i) {
            Rational r = rng.small_rational();
            bool dup = false;
            for (auto& [rr, m] : built)
                if (rr == r) {
                    ++m;
                    dup = true;
                }
            if (!dup) built.emplace_back(r, 1);
            p = p * Poly({-r, Rational(1)});
        }
        bool with_irr = rng.pick(0, 1) == 1;
        if (with_irr) p = p * irr;
        auto rm = rational_root_multiset(p);
        std::sort(built.begin(), built.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        CHECK(rm.roots == built);
        CHECK(rm.split() == !with_irr);
        if (with_irr) CHECK(rm.nonsplit.monic() == irr);
    }
}

TEST_CASE("solve_sylvester examples") {
    // Y = 0: every X solves, kernel is everything
    QMatrix zero(2, 2);
    auto all = solve_sylvester(zero, zero);
    REQUIRE(all.has_value());
    CHECK(all->particular.is_zero());
    CHECK(all->kernel.size() == 4);

    // Y = J2, M = diag(1,-1)
    QMatrix j2(2, 2);
    j2.at(0, 1) = 1;
    QMatrix m = mat({{1, 0}, {0, -1}});
    auto sol = solve_sylvester(j2, m);
    REQUIRE(sol.has_value());
    const QMatrix& x0 = sol->particular;
    CHECK(x0 * j2 - j2 * x0 == m);
    REQUIRE(sol->kernel.size() == 2);
    for (const auto& k : sol->kernel) CHECK(k * j2 == j2 * k);
    // kernel spans {I, J2}
    QMatrix span(2, 4);
    for (int idx = 0; idx < 2; ++idx)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) span.at(idx, 2 * i + j) = sol->kernel[static_cast<size_t>(idx)].at(i, j);
    QMatrix with_id(3, 4);
    for (int j = 0; j < 4; ++j) {
        with_id.at(0, j) = span.at(0, j);
        with_id.at(1, j) = span.at(1, j);
    }
    with_id.at(2, 0) = 1;
    with_id.at(2, 3) = 1;
    CHECK(cmgr::rank(with_id) == 2);

    // inconsistent: Y = J2, M = [[0,1],[1,0]]
    CHECK_FALSE(solve_sylvester(j2, mat({{0, 1}, {1, 0}})).has_value());
    // nonzero trace short-circuits
    CHECK_FALSE(solve_sylvester(j2, mat({{1, 0}, {0, 0}})).has_value());
}

TEST_CASE("sylvester solutions are exact on random draws") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.pick(1, 4));
        QMatrix y(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y.at(i, j) = Rational(rng.pick(-2, 2));
        // build a consistent rhs from a random X
        QMatrix x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x.at(i, j) = rng.small_rational();
        QMatrix m = x * y - y * x;
        auto sol = solve_sylvester(y, m);
        REQUIRE(sol.has_value());
        CHECK(sol->particular * y - y * sol->particular == m);
        for (const auto& k : sol->kernel) CHECK(k * y == y * k);
    }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
    Rng rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng.pick(1, 4));
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rational(rng.pick(-4, 4));
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("shape errors") {
    QMatrix rect(2, 3);
    CHECK_THROWS_AS(charpoly(rect), std::invalid_argument);
    CHECK_THROWS_AS(det_bareiss(rect), std::invalid_argument);
    CHECK_THROWS_AS(solve_sylvester(QMatrix(2, 2), QMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(QMatrix(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_linear(QMatrix(2, 2), std::vector<Rational>{Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("poly helpers") {
    Poly p({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
    CHECK(p.taylor_shift(Rational(-1)) == Poly({Rational(0), Rational(0), Rational(1)}));
    CHECK(divide_linear_factor(p, Rational(-1)) == Poly({Rational(1), Rational(1)}));
    CHECK(p.derivative() == Poly({Rational(2), Rational(2)}));
    CHECK(Poly{}.degree() == -1);
    CHECK(p.monic() == p);
}
