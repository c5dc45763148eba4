#include "cmgr/roots.hpp"

#include <algorithm>
#include <map>

namespace cmgr {

namespace {

Integer pollard_rho(const Integer& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        out[n] += 1;
        return;
    }
    Integer f = pollard_rho(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor_integer(0)");
    Integer m = n < 0 ? Integer(-n) : n;
    std::map<Integer, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (m % p == 0) {
            acc[Integer(p)] += 1;
            m /= p;
        }
    }
    Integer d(41);
    while (m > 1 && d * d <= m && d < 100000) {
        while (m % d == 0) {
            acc[d] += 1;
            m /= d;
        }
        d += 2;
    }
    if (m > 1) factor_rec(m, acc);
    return {acc.begin(), acc.end()};
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
    auto fac = factor_integer(n);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        size_t old = divs.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

RootMultiset rational_root_multiset(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_root_multiset of zero polynomial");
    RootMultiset out;
    Poly cur = p;

    // factor out t^k
    int low = cur.low_order();
    if (low > 0) {
        out.roots.emplace_back(Rational(0), low);
        std::vector<Rational> shifted(cur.c.begin() + low, cur.c.end());
        cur = Poly(std::move(shifted));
    }

    while (cur.degree() >= 1) {
        // clear denominators to a primitive integer polynomial
        Integer lcm(1);
        for (const auto& c : cur.c) {
            Integer den = rat_den(c);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Integer> ic;
        ic.reserve(cur.c.size());
        for (const auto& c : cur.c) ic.push_back(rat_num(c) * (lcm / rat_den(c)));

        bool found = false;
        const Integer& a0 = ic.front();
        const Integer& an = ic.back();
        for (const Integer& pnum : divisors(a0)) {
            for (const Integer& qden : divisors(an)) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), qden.get_mpz_t());
                if (g != 1) continue;  // only reduced candidates
                for (int sign : {1, -1}) {
                    Rational cand(sign > 0 ? pnum : Integer(-pnum), qden);
                    cand.canonicalize();
                    if (cur.eval(cand) == 0) {
                        int mult = 0;
                        while (!cur.is_zero() && cur.eval(cand) == 0) {
                            cur = divide_linear_factor(cur, cand);
                            ++mult;
                        }
                        out.roots.emplace_back(cand, mult);
                        found = true;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.nonsplit = cur;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace cmgr
