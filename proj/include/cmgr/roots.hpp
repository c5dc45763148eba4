#pragma once

#include "cmgr/poly.hpp"

#include <utility>
#include <vector>

namespace cmgr {

struct RootMultiset {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), sorted by root
    Poly nonsplit;                                // remaining factor with no rational roots
    bool split() const { return nonsplit.degree() <= 0; }
    int total_multiplicity() const {
        int t = 0;
        for (const auto& [r, m] : roots) t += m;
        return t;
    }
};

// Complete rational factorization p = nonsplit * prod (t - r)^m, via the
// rational root theorem (divisors of the trailing/leading integer
// coefficients) and trial division. Throws on the zero polynomial.
RootMultiset rational_root_multiset(const Poly& p);

// Prime factorization of |n| (n != 0), product of primes with multiplicity.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

}  // namespace cmgr
