#pragma once

#include "cmgr/multipoly.hpp"
#include "cmgr/partition.hpp"

#include <vector>

namespace cmgr {

// Schur polynomial s_lambda written in the variables t_1..t_m of the
// generating series H(z) = exp(-sum_i t_i z^i) = sum_k h_k z^k, via the
// Jacobi-Trudi determinant s_lambda = det(h_{lambda_i - i + j}).
// Requires m >= |lambda| so every needed h_k is exact.
MultiPoly schur_in_t(const Partition& lambda, int m);

// Coefficient of s_target in the product of the s_factor, by iterated
// Littlewood-Richardson expansion (counting lattice-word skew tableaux).
long lr_multiplicity(const Partition& target, const std::vector<Partition>& factors);

// Expansion of s_mu * s_nu; optional box clips partitions outside rows x cols.
std::vector<std::pair<Partition, long>> lr_expand(const Partition& mu, const Partition& nu,
                                                  int box_rows = -1, int box_cols = -1);

// Irreducible symmetric group character chi^lambda(cycle_type), by the
// Murnaghan-Nakayama rule with memoization.
long character(const Partition& lambda, const Partition& cycle_type);

// dim Hom_{S_n}(Ind_{S_q}^{S_n}(mu^(1) x ... x mu^(k), sign-twisted when
// requested), lambda) by character inner products. Blocks q = (n_1..n_k),
// mu^(i) a partition of n_i.
long hom_dim_characters(const Partition& lambda, const std::vector<int>& q_blocks,
                        const std::vector<Partition>& mu, bool sgn_twist);

// |class of cycle_type in S_n| = n! / z_type
long conjugacy_class_size(const Partition& cycle_type);

long factorial(int n);

}  // namespace cmgr
