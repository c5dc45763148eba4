#include "cmgr/json_io.hpp"

namespace cmgr {

Json to_json(const Rational& r) { return rat_to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("rational must be a string \"num/den\" or an integer (at " + j.dump() + ")");
}

Json to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix qmatrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        rows.push_back(std::move(r));
    }
    return QMatrix::from_rows(rows);
}

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.c) arr.push_back(to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Poly(std::move(c));
}

Json to_json(const MultiPoly& p) {
    Json out;
    out["nvars"] = p.nvars;
    Json terms = Json::array();
    for (const auto& [e, a] : p.terms) {
        Json t;
        t["exp"] = e;
        t["coeff"] = to_json(a);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != p.nvars)
            throw std::invalid_argument("exponent tuple length mismatch");
        p.add_term(e, rational_from_json(t.at("coeff")));
    }
    return p;
}

Json to_json(const Partition& p) { return Json(p.parts); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    // tolerate one level of extra wrapping, e.g. [[2,1]]
    if (j.size() == 1 && j[0].is_array()) return partition_from_json(j[0]);
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

Json to_json(const MultiPartition& p) {
    Json arr = Json::array();
    for (const auto& [pt, parts] : p.blocks) {
        Json b;
        b["point"] = to_json(pt);
        b["parts"] = to_json(parts);
        arr.push_back(std::move(b));
    }
    return arr;
}

MultiPartition multipartition_from_json(const Json& j) {
    MultiPartition mp;
    for (const auto& b : j)
        mp.blocks.emplace_back(rational_from_json(b.at("point")), partition_from_json(b.at("parts")));
    return mp;
}

Json to_json(const CMPoint& p) {
    Json out;
    out["n"] = p.n;
    out["X"] = to_json(p.x);
    out["Y"] = to_json(p.y);
    return out;
}

CMPoint cmpoint_from_json(const Json& j) {
    QMatrix x = qmatrix_from_json(j.at("X"));
    QMatrix y = qmatrix_from_json(j.at("Y"));
    CMPoint p = cm_validate(x, y);
    if (j.contains("n") && j.at("n").get<int>() != p.n)
        throw std::invalid_argument("declared n does not match matrix size");
    return p;
}

Json to_json(const SupportDivisor& d) {
    Json arr = Json::array();
    for (const auto& [pt, m] : d.points) {
        Json e;
        e["point"] = to_json(pt);
        e["mult"] = m;
        arr.push_back(std::move(e));
    }
    return arr;
}

SupportDivisor supportdivisor_from_json(const Json& j) {
    SupportDivisor d;
    for (const auto& e : j) d.points.emplace_back(rational_from_json(e.at("point")), e.at("mult").get<int>());
    return d;
}

Json to_json(const WindowSubspace& w) {
    Json out;
    out["n"] = w.n;
    out["b"] = to_json(w.b);
    out["rows"] = to_json(w.basis);
    return out;
}

WindowSubspace window_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    Rational b = rational_from_json(j.at("b"));
    QMatrix rows = qmatrix_from_json(j.at("rows"));
    return WindowSubspace(n, b, rows);
}

Json to_json(const FlagSpec& f) {
    Json out;
    out["at"] = f.at.has_value() ? to_json(*f.at) : Json("inf");
    out["ambient2n"] = f.ambient2n;
    return out;
}

FlagSpec flagspec_from_json(const Json& j) {
    FlagSpec f;
    const Json& at = j.at("at");
    if (at.is_string() && at.get<std::string>() == "inf") {
        f.at = std::nullopt;
    } else {
        f.at = rational_from_json(at);
    }
    if (j.contains("ambient2n")) f.ambient2n = j.at("ambient2n").get<int>();
    return f;
}

Json to_json(const QuasiExpSpace& c) {
    Json arr = Json::array();
    for (const auto& comp : c.components) {
        Json e;
        e["b"] = to_json(comp.b);
        Json polys = Json::array();
        for (const auto& g : comp.polys) polys.push_back(to_json(g));
        e["polys"] = std::move(polys);
        arr.push_back(std::move(e));
    }
    return arr;
}

QuasiExpSpace quasiexp_from_json(const Json& j) {
    std::vector<QuasiExpSpace::Component> comps;
    for (const auto& e : j) {
        QuasiExpSpace::Component comp;
        comp.b = rational_from_json(e.at("b"));
        for (const auto& pj : e.at("polys")) comp.polys.push_back(poly_from_json(pj));
        comps.push_back(std::move(comp));
    }
    return QuasiExpSpace(std::move(comps));
}

Json to_json(const DiffOperator& d) {
    Json arr = Json::array();
    for (const auto& [ij, a] : d.coeffs) {
        Json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["coeff"] = to_json(a);
        arr.push_back(std::move(e));
    }
    return arr;
}

DiffOperator diffop_from_json(const Json& j) {
    DiffOperator d;
    for (const auto& e : j) d.add(e.at("i").get<int>(), e.at("j").get<int>(), rational_from_json(e.at("coeff")));
    return d;
}

Json to_json(const ExponentSet& e) {
    Json out;
    out["at"] = e.location.has_value() ? to_json(*e.location) : Json("inf");
    out["exponents"] = e.exps;
    return out;
}

}  // namespace cmgr
