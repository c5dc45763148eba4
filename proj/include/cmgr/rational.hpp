#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cmgr {

// Exact rational scalar. mpq_class keeps the canonical form we require:
// denominator > 0 and gcd(|num|, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer rat_num(const Rational& r) { return r.get_num(); }
inline Integer rat_den(const Rational& r) { return r.get_den(); }

// "num/den", with "/den" omitted when den = 1.
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace cmgr
