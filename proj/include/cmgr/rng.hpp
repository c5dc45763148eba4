#pragma once

#include "cmgr/rational.hpp"

#include <cstdint>
#include <random>

namespace cmgr {

// Deterministic draw helper. Reductions are done by hand so the stream does
// not depend on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    long nonzero(long bound) {
        long v = pick(1, bound);
        return (eng() & 1) ? v : -v;
    }
    Rational small_rational(long num_bound = 5, long den_bound = 3) {
        Rational r(nonzero(num_bound), pick(1, den_bound));
        r.canonicalize();
        return r;
    }
};

}  // namespace cmgr
