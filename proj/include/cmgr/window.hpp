#pragma once

#include "cmgr/matrix.hpp"
#include "cmgr/partition.hpp"
#include "cmgr/quasi_exp.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace cmgr {

// Degree-n point of the Grassmannian supported at b, in the finite window
// model: an n-dimensional space of Laurent polynomials in (z - b) spanned by
// the rows of an n x 2n RREF matrix whose columns are the exponents
// -n..n-1, together with the implicit tail (z-b)^n C[z]. The pivot partition
// (lambda_i = i - s_i) must have size exactly n; the constructor rejects
// anything else.
struct WindowSubspace {
    int n = 0;
    Rational b;
    QMatrix basis;  // n x 2n, reduced row echelon form

    WindowSubspace() = default;
    // rows: any spanning set of the window part, given on exponents -n..n-1
    WindowSubspace(int n, const Rational& b, const QMatrix& rows);

    std::vector<int> pivot_exponents() const;  // pivots as (z-b)-exponents
    bool operator==(const WindowSubspace& o) const {
        return n == o.n && b == o.b && basis == o.basis;
    }
};

// Flag in C[x]_{2n}: either the flag at infinity (F_k = polynomials of
// degree < k) or the flag at a point q (F_k = (x-q)^{2n-k} C[x]_k).
struct FlagSpec {
    std::optional<Rational> at;  // nullopt means infinity
    int ambient2n = 0;
};

// Projective vector of maximal minors indexed by partitions in the n x n box.
struct PlueckerVector {
    int n = 0;
    std::map<Partition, Rational> coords;
};

// Partition of the Schubert cell containing W (always of size n).
Partition cell_of_window(const WindowSubspace& w);

// Random point of the cell of lambda: pivot rows with random rationals at
// the free (non-pivot, above-pivot) window exponents. Deterministic per seed.
WindowSubspace sample_window_cell(const Partition& lambda, const Rational& b, std::uint64_t seed);

// Annihilator of (z-b)^n W inside e^{bx} C[x]_{2n} under the pairing
// <x^k, z^l> = l! delta_{k,l}; an n-dimensional canonical space.
QuasiExpSpace eta(const WindowSubspace& w);

// All maximal minors; the containment-maximal partition with nonzero
// coordinate is the cell of W.
PlueckerVector pluecker(const WindowSubspace& w);

// Exact evaluation of the Schubert cell rank conditions
// dim(V cap F_k) = i for n+i-lambda_{i-1} <= k <= n+i-lambda_i.
bool schubert_member(const std::vector<Poly>& v_basis, const FlagSpec& flag, const Partition& lambda);

// Intersection of the cells at the flags F(q_i) for a multipartition mu.
bool omega_mu_q_member(const std::vector<Poly>& v_basis, const MultiPartition& mu);

// dim(V cap F_k) for k = 0..2n.
std::vector<int> flag_intersection_dims(const std::vector<Poly>& v_basis, const FlagSpec& flag);

}  // namespace cmgr
