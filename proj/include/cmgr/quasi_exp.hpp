#pragma once

#include "cmgr/multipoly.hpp"
#include "cmgr/poly.hpp"
#include "cmgr/roots.hpp"

#include <optional>
#include <vector>

namespace cmgr {

// Homogeneous space of quasi-exponentials: a direct sum of components
// e^{bx} * span(polys), with pairwise distinct base points. Construction
// canonicalizes each component through coefficient RREF (also certifying
// linear independence) and sorts components by base point.
struct QuasiExpSpace {
    struct Component {
        Rational b;
        std::vector<Poly> polys;
        bool operator==(const Component& o) const { return b == o.b && polys == o.polys; }
    };
    std::vector<Component> components;

    QuasiExpSpace() = default;
    explicit QuasiExpSpace(std::vector<Component> comps);

    int dim() const {
        int d = 0;
        for (const auto& c : components) d += static_cast<int>(c.polys.size());
        return d;
    }
    bool operator==(const QuasiExpSpace& o) const { return components == o.components; }
};

// Strictly increasing achievable orders of an n-dimensional space at a point.
struct ExponentSet {
    std::optional<Rational> location;  // nullopt means infinity
    std::vector<int> exps;
    bool operator==(const ExponentSet& o) const { return location == o.location && exps == o.exps; }
};

// <e^{bx} g(x), f(z)> = (g(d/dz) f)(b).
Rational pair_qe(const Rational& b, const Poly& g, const Poly& f);

struct WronskianResult {
    Poly wr;  // monic
    int degree = 0;
    bool canonical = false;
};
// Exact Wronskian via d^i(e^{bx} g) = e^{bx} (d+b)^i g; the exponential
// prefactor cancels by definition. Canonical means degree equals dimension.
WronskianResult wronskian(const QuasiExpSpace& c);

// Achievable vanishing orders at a rational point, or achievable degrees at
// infinity (location = nullopt). Mixed-support finite points factor the
// units e^{b a} out of each row, which treats them as independent
// transcendentals.
ExponentSet exponents(const QuasiExpSpace& c, const std::optional<Rational>& at);

// tau function on the quasi-exponential side, variables t_1..t_m:
// det(<c_i, z^j G(z)>) with G = exp(sum_{i<=m} t_i z^i), the common row units
// exp(sum t_i b^i) already cancelled against the support prefactor.
MultiPoly tau_qe(const QuasiExpSpace& c, int m);

struct DualCellData {
    std::vector<std::pair<Rational, ExponentSet>> singular;  // finite rational singular points
    Poly nonsplit_wronskian;  // nontrivial when some singular points are irrational
};
// Finite singular points (exponents differ from {0..n-1}) of a canonical
// space, located through the rational roots of the Wronskian.
DualCellData dual_cell_data(const QuasiExpSpace& c);

}  // namespace cmgr
