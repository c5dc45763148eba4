#include "cmgr/cm.hpp"
#include "cmgr/rng.hpp"
#include "cmgr/symfun.hpp"

#include <doctest.h>

using namespace cmgr;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

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

TEST_CASE("validate accepts and rejects") {
    // scalars always pass
    CHECK_NOTHROW(cm_validate(mat({{3}}), mat({{-7}})));

    QMatrix x = mat({{0, 0}, {-1, 0}});
    QMatrix j2 = mat({{0, 1}, {0, 0}});
    CMPoint p = cm_validate(x, j2);
    QMatrix comm = x * j2 - j2 * x + QMatrix::identity(2);
    CHECK(comm == mat({{2, 0}, {0, 0}}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(comm.at(i, j) == p.v[static_cast<size_t>(i)] * p.w[static_cast<size_t>(j)]);

    CHECK_THROWS_WITH_AS(cm_validate(QMatrix(2, 2), QMatrix(2, 2)),
                         "rank([X,Y] + I) = 2, expected 1", std::invalid_argument);
}

TEST_CASE("fixed points for small partitions") {
    CMPoint p1 = fixed_point(P({1}));
    CHECK(p1.x == QMatrix(1, 1));
    CHECK(p1.y == QMatrix(1, 1));

    CMPoint p2 = fixed_point(P({2}));
    CHECK(p2.x == mat({{0, 0}, {-1, 0}}));
    CHECK(p2.y == mat({{0, 1}, {0, 0}}));

    CMPoint p11 = fixed_point(P({1, 1}));
    CHECK(p11.x == mat({{0, 0}, {1, 0}}));
    CHECK(p11.y == mat({{0, 1}, {0, 0}}));

    CHECK_THROWS(fixed_point(Partition{}));
}

TEST_CASE("fixed points validate for all n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n)) CHECK_NOTHROW(fixed_point(lam));
}

TEST_CASE("rho eigenvalues are transposed contents") {
    CMPoint p2 = fixed_point(P({2}));
    CHECK(p2.y * p2.x == mat({{-1, 0}, {0, 0}}));
    SpectralData s2 = rho(p2);
    REQUIRE(s2.roots.split());
    CHECK(s2.roots.roots == std::vector<std::pair<Rational, int>>{{Rational(-1), 1}, {Rational(0), 1}});

    SpectralData s11 = rho(fixed_point(P({1, 1})));
    CHECK(s11.roots.roots == std::vector<std::pair<Rational, int>>{{Rational(0), 1}, {Rational(1), 1}});

    CMPoint scalar = cm_validate(mat({{5}}), mat({{3}}));
    CHECK(rho(scalar).roots.roots == std::vector<std::pair<Rational, int>>{{Rational(15), 1}});

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            SpectralData s = rho(fixed_point(lam));
            REQUIRE(s.roots.split());
            std::vector<int> eigen;
            for (const auto& [r, m] : s.roots.roots)
                for (int k = 0; k < m; ++k) eigen.push_back(static_cast<int>(rat_num(r).get_si()));
            std::sort(eigen.begin(), eigen.end());
            CHECK(eigen == contents_residue(lam.transpose()).contents);
        }
}

TEST_CASE("spectra") {
    CMPoint p = fixed_point(P({2, 1}));
    Spectra s = spectra(p);
    REQUIRE(s.pi.has_value());
    CHECK(s.pi->points == std::vector<std::pair<Rational, int>>{{Rational(0), 3}});
    CHECK(s.charpoly_x.degree() == 3);

    CMPoint scalar = cm_validate(mat({{4}}), mat({{9}}));
    Spectra ss = spectra(scalar);
    CHECK(ss.pi->points == std::vector<std::pair<Rational, int>>{{Rational(9), 1}});
    CHECK(ss.charpoly_x == Poly({Rational(-4), Rational(1)}));
}

TEST_CASE("tau for small fixed points") {
    // n = 1: tau = t1 - x0 (pairing convention; the wronskian of the
    // solution space e^{y0 x}(x - x0) restricted to t1 = x)
    CMPoint s = cm_validate(mat({{5}}), mat({{2}}));
    MultiPoly tau1 = tau_cm(s, 1);
    MultiPoly want = MultiPoly::variable(1, 0) - MultiPoly::constant(1, Rational(5));
    CHECK(tau1 == want);

    MultiPoly t1 = MultiPoly::variable(2, 0), t2 = MultiPoly::variable(2, 1);
    CHECK(tau_cm(fixed_point(P({2})), 2) == t1 * t1 - t2 * Rational(2));
    CHECK(tau_cm(fixed_point(P({1, 1})), 2) == t1 * t1 + t2 * Rational(2));
}

TEST_CASE("tau is proportional to schur at fixed points") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(proportional(tau_cm(fixed_point(lam), n), schur_in_t(lam, n)));
}

TEST_CASE("transforms") {
    CMPoint p = fixed_point(P({2}));
    CMPoint b = transform(p, TransformKind::Bispectral);
    CHECK(b.x == mat({{0, 0}, {1, 0}}));
    CHECK(b.y == mat({{0, -1}, {0, 0}}));

    for (auto kind : {TransformKind::Bispectral, TransformKind::Star, TransformKind::Negate}) {
        CMPoint q = transform(transform(p, kind), kind);
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
    }

    // translate shifts the support by -b
    CMPoint tr = transform(p, TransformKind::Translate, Rational(3));
    Spectra s = spectra(tr);
    CHECK(s.pi->points == std::vector<std::pair<Rational, int>>{{Rational(-3), 2}});

    // star = fourier . bispectral . negate
    CMPoint lhs = transform(p, TransformKind::Star);
    CMPoint rhs = transform(transform(transform(p, TransformKind::Negate), TransformKind::Bispectral),
                            TransformKind::Fourier);
    CHECK(lhs.x == rhs.x);
    CHECK(lhs.y == rhs.y);

    CHECK_THROWS(transform(p, TransformKind::Scale, Rational(0)));
    CHECK_THROWS(tau_cm(p, 0));

    // scale equivariance of tau
    Rational alpha(3, 2);
    CMPoint sc = transform(p, TransformKind::Scale, alpha);
    MultiPoly lhs_tau = tau_cm(sc, 2) * (alpha * alpha);
    MultiPoly rhs_tau = tau_cm(p, 2).rescale_vars(alpha);
    CHECK(lhs_tau == rhs_tau);
}

TEST_CASE("sample_cm draws valid points") {
    // n = 1, Y = 0: any (x0, 0)
    auto s1 = sample_cm(QMatrix(1, 1), 5);
    REQUIRE(s1.has_value());
    CHECK(s1->y == QMatrix(1, 1));

    // Y = diag(0, 1): bc = -1 family
    QMatrix d = QMatrix(2, 2);
    d.at(1, 1) = 1;
    auto s2 = sample_cm(d, 17);
    REQUIRE(s2.has_value());
    CHECK(s2->x.at(0, 1) * s2->x.at(1, 0) == Rational(-1));

    // Y = J2: includes the fixed point X plus centralizer shifts
    QMatrix j2 = mat({{0, 1}, {0, 0}});
    auto s3 = sample_cm(j2, 23);
    REQUIRE(s3.has_value());
    QMatrix comm = s3->x * j2 - j2 * s3->x + QMatrix::identity(2);
    CHECK(cmgr::rank(comm) == 1);

    // exact rank-one factorization on every sample
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = sample_cm(j2, seed);
        REQUIRE(p.has_value());
        QMatrix c = p->x * p->y - p->y * p->x + QMatrix::identity(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(c.at(i, j) == p->v[static_cast<size_t>(i)] * p->w[static_cast<size_t>(j)]);
    }
}

TEST_CASE("factorize splits along the Y spectrum") {
    // X = [[0,1],[-1,0]], Y = diag(0,1)
    QMatrix x = mat({{0, 1}, {-1, 0}});
    QMatrix y = QMatrix(2, 2);
    y.at(1, 1) = 1;
    CMPoint p = cm_validate(x, y);
    auto blocks = factorize(p);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].first == Rational(0));
    CHECK(blocks[1].first == Rational(1));
    CHECK(blocks[0].second.n == 1);
    CHECK(blocks[1].second.n == 1);
    CHECK(blocks[0].second.x == QMatrix(1, 1));  // diagonal block of X
    CHECK(blocks[1].second.x == QMatrix(1, 1));

    // single-block support: identity factorization
    CMPoint fp = fixed_point(P({2, 1}));
    auto single = factorize(fp);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == Rational(0));
    CHECK(single[0].second.x == fp.x);

    // nonsplit spectrum rejected: Y is a rotation, charpoly t^2 + 1
    QMatrix rot = mat({{0, -1}, {1, 0}});
    CMPoint nonsplit = cm_validate(mat({{0, 0}, {0, 1}}), rot);
    CHECK_THROWS_AS(factorize(nonsplit), std::invalid_argument);
}

TEST_CASE("factorize on a three-point support") {
    Rng rng(3);
    QMatrix y(3, 3);
    y.at(0, 0) = 0;
    y.at(1, 1) = 1;
    y.at(2, 2) = 2;
    auto p = sample_cm(y, 31);
    REQUIRE(p.has_value());
    auto blocks = factorize(*p);
    REQUIRE(blocks.size() == 3);
    int total = 0;
    for (const auto& [b, blk] : blocks) total += blk.n;
    CHECK(total == 3);
}

TEST_CASE("daha z1 matrix") {
    QMatrix one = daha_z1_matrix({Rational(7)});
    CHECK(one == mat({{7}}));

    QMatrix two = daha_z1_matrix({Rational(1), Rational(2)});
    CHECK(two == mat({{1, -1}, {0, 2}}));

    std::vector<Rational> a{Rational(1), rat(1, 2), Rational(-3), Rational(0)};
    QMatrix m = daha_z1_matrix(a);
    Poly cp = charpoly(m);
    Poly want = Poly::constant(Rational(1));
    for (const auto& ai : a) want = want * Poly({-ai, Rational(1)});
    CHECK(cp == want);
}
