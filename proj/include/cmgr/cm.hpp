#pragma once

#include "cmgr/matrix.hpp"
#include "cmgr/multipoly.hpp"
#include "cmgr/partition.hpp"
#include "cmgr/roots.hpp"

#include <optional>

namespace cmgr {

// A Calogero-Moser matrix pair: rank([X,Y] + I) = 1, checked at construction
// through validate(). The rank-one factorization [X,Y] + I = v w^T is kept.
struct CMPoint {
    int n = 0;
    QMatrix x, y;
    std::vector<Rational> v, w;

    CMPoint() = default;
};

// (point, multiplicity) pairs, points pairwise distinct, multiplicities
// summing to the ambient size.
struct SupportDivisor {
    std::vector<std::pair<Rational, int>> points;
    bool operator==(const SupportDivisor& o) const { return points == o.points; }
};

// Checks the rank-one condition; throws std::invalid_argument carrying the
// computed rank otherwise.
CMPoint cm_validate(const QMatrix& x, const QMatrix& y);

// Torus-fixed point attached to a partition, assembled hook by hook from the
// Frobenius form: Y is a direct sum of nilpotent upper Jordan blocks, X has
// prescribed diagonals block by block.
CMPoint fixed_point(const Partition& lambda);

struct SpectralData {
    Poly charpoly_z;        // det(t - Y X)
    RootMultiset roots;     // eigenvalue multiset when split
};
// Spectrum of Z = Y X.
SpectralData rho(const CMPoint& p);

struct Spectra {
    Poly charpoly_y;                    // pi, as a monic polynomial
    std::optional<SupportDivisor> pi;   // divisor form when charpoly_y splits
    Poly charpoly_x;                    // varpi = det(t - X)
};
Spectra spectra(const CMPoint& p);

// det(sum_{i=1..m} i t_i Y^{i-1} - X); exact truncation at m, equal to the
// full tau when Y is nilpotent of index <= m. Variables t_1..t_m. The sign
// convention matches the quasi-exponential pairing, so tau_cm is
// proportional to tau_qe of the solution space for every point, not only
// the homogeneous fixed ones.
MultiPoly tau_cm(const CMPoint& p, int m);

enum class TransformKind { Bispectral, Star, Negate, Translate, Scale, Fourier };

// Bispectral: (Y^t, X^t). Star: (-X^t, Y^t). Negate: (-X, -Y).
// Translate(b): (X, Y - b I). Scale(alpha): (alpha^{-1} X, alpha Y).
// Fourier: (Y, -X). Every image satisfies the rank-one condition.
CMPoint transform(const CMPoint& p, TransformKind kind, const Rational& param = Rational(0));

// Draws v, w with w^T v = n compatible with Y's centralizer, solves
// X Y - Y X = v w^T - I, and shifts X by a random centralizer element.
// Deterministic per seed; absent after a bounded number of draws.
std::optional<CMPoint> sample_cm(const QMatrix& y, std::uint64_t seed);

// Block decomposition along the generalized eigenspaces of Y. Requires a
// rationally split Y-spectrum; throws carrying the irreducible factor
// otherwise. Blocks are ordered by eigenvalue.
std::vector<std::pair<Rational, CMPoint>> factorize(const CMPoint& p);

// Upper-triangular matrix with diagonal a_1..a_n and every entry above the
// diagonal equal to -1.
QMatrix daha_z1_matrix(const std::vector<Rational>& a);

}  // namespace cmgr
