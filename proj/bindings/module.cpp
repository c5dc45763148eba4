#include "cmgr/suites.hpp"
#include "cmgr/symfun.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace cmgr;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list l;
            for (const auto& e : j) l.append(json_to_py(e));
            return l;
        }
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        default:
            throw std::invalid_argument("unsupported json value");
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json arr = Json::array();
        for (const auto& e : obj) arr.push_back(py_to_json(e));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json d = Json::object();
        for (const auto& kv : obj.cast<py::dict>())
            d[kv.first.cast<std::string>()] = py_to_json(kv.second);
        return d;
    }
    throw std::invalid_argument("unsupported python value in document");
}

Partition part_of(const py::handle& obj) { return partition_from_json(py_to_json(obj)); }

CMPoint point_of(const py::handle& obj) { return cmpoint_from_json(py_to_json(obj)); }

std::vector<Partition> mu_of(const py::handle& obj) {
    std::vector<Partition> mu;
    for (const auto& e : obj) mu.push_back(part_of(e));
    return mu;
}

TransformKind kind_of(const std::string& s) {
    if (s == "bispectral") return TransformKind::Bispectral;
    if (s == "star") return TransformKind::Star;
    if (s == "negate") return TransformKind::Negate;
    if (s == "translate") return TransformKind::Translate;
    if (s == "scale") return TransformKind::Scale;
    if (s == "fourier") return TransformKind::Fourier;
    throw std::invalid_argument("unknown transform kind: " + s);
}

}  // namespace

PYBIND11_MODULE(_cmgr, m) {
    m.doc() = "exact Calogero-Moser / Schubert cell / quasi-exponential toolkit";

    // exact core
    m.def("rref", [](py::handle rows) {
        RrefResult r = rref(qmatrix_from_json(py_to_json(rows)));
        py::dict out;
        out["r"] = json_to_py(to_json(r.r));
        out["pivots"] = json_to_py(Json(r.pivots));
        out["rank"] = r.rank;
        return out;
    });
    m.def("charpoly", [](py::handle rows) {
        return json_to_py(to_json(charpoly(qmatrix_from_json(py_to_json(rows)))));
    });
    m.def("rational_roots", [](py::handle coeffs) {
        RootMultiset rm = rational_root_multiset(poly_from_json(py_to_json(coeffs)));
        py::dict out;
        py::list roots;
        for (const auto& [r, mult] : rm.roots) {
            py::list pair;
            pair.append(py::str(rat_to_string(r)));
            pair.append(mult);
            roots.append(pair);
        }
        out["roots"] = roots;
        out["nonsplit"] = json_to_py(to_json(rm.nonsplit));
        return out;
    });
    m.def("solve_sylvester", [](py::handle y, py::handle rhs) -> py::object {
        auto sol = solve_sylvester(qmatrix_from_json(py_to_json(y)), qmatrix_from_json(py_to_json(rhs)));
        if (!sol) return py::none();
        py::dict out;
        out["particular"] = json_to_py(to_json(sol->particular));
        py::list kernel;
        for (const auto& k : sol->kernel) kernel.append(json_to_py(to_json(k)));
        out["kernel"] = kernel;
        return out;
    });

    // partitions and symmetric functions
    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& p : partitions_of(n)) out.append(json_to_py(to_json(p)));
        return out;
    });
    m.def("transpose", [](py::handle p) { return json_to_py(to_json(part_of(p).transpose())); });
    m.def("frobenius_form", [](py::handle p) {
        py::list out;
        for (auto [n, r] : frobenius_form(part_of(p))) {
            py::list pair;
            pair.append(n);
            pair.append(r);
            out.append(pair);
        }
        return out;
    });
    m.def("contents_residue", [](py::handle p) {
        ContentsResidue cr = contents_residue(part_of(p));
        py::dict out;
        out["contents"] = json_to_py(Json(cr.contents));
        py::dict res;
        for (const auto& [e, c] : cr.residue) res[py::int_(e)] = c;
        out["residue"] = res;
        return out;
    });
    m.def("pivot_set",
          [](py::handle p, int window) { return json_to_py(Json(pivot_set(part_of(p), window))); });
    m.def("box_complement",
          [](py::handle p, int n) { return json_to_py(to_json(box_complement(part_of(p), n))); });
    m.def("dim_irrep", [](py::handle p) { return dim_irrep(part_of(p)); });
    m.def("schur_in_t",
          [](py::handle p, int mvars) { return json_to_py(to_json(schur_in_t(part_of(p), mvars))); });
    m.def("lr_multiplicity",
          [](py::handle target, py::handle factors) { return lr_multiplicity(part_of(target), mu_of(factors)); });
    m.def("character",
          [](py::handle lam, py::handle rho) { return character(part_of(lam), part_of(rho)); });
    m.def("hom_dim_characters", [](py::handle lam, py::handle blocks, py::handle mu, bool twist) {
        std::vector<int> b;
        for (const auto& e : blocks) b.push_back(e.cast<int>());
        return hom_dim_characters(part_of(lam), b, mu_of(mu), twist);
    });

    // calogero-moser points
    m.def("validate", [](py::handle x, py::handle y) {
        return json_to_py(to_json(cm_validate(qmatrix_from_json(py_to_json(x)),
                                              qmatrix_from_json(py_to_json(y)))));
    });
    m.def("fixed_point", [](py::handle p) { return json_to_py(to_json(fixed_point(part_of(p)))); });
    m.def("rho", [](py::handle p) {
        SpectralData s = rho(point_of(p));
        py::dict out;
        out["charpoly"] = json_to_py(to_json(s.charpoly_z));
        py::list roots;
        for (const auto& [r, mult] : s.roots.roots) {
            py::list pair;
            pair.append(py::str(rat_to_string(r)));
            pair.append(mult);
            roots.append(pair);
        }
        out["roots"] = roots;
        out["nonsplit"] = json_to_py(to_json(s.roots.nonsplit));
        return out;
    });
    m.def("spectra", [](py::handle p) {
        Spectra s = spectra(point_of(p));
        py::dict out;
        out["charpoly_y"] = json_to_py(to_json(s.charpoly_y));
        out["charpoly_x"] = json_to_py(to_json(s.charpoly_x));
        out["pi"] = s.pi ? json_to_py(to_json(*s.pi)) : py::object(py::none());
        return out;
    });
    m.def("tau_cm", [](py::handle p, int mvars) { return json_to_py(to_json(tau_cm(point_of(p), mvars))); });
    m.def(
        "transform",
        [](py::handle p, const std::string& kind, const std::string& param) {
            return json_to_py(to_json(transform(point_of(p), kind_of(kind), rat_from_string(param))));
        },
        py::arg("point"), py::arg("kind"), py::arg("param") = "0");
    m.def("sample_cm", [](py::handle y, std::uint64_t seed) -> py::object {
        auto p = sample_cm(qmatrix_from_json(py_to_json(y)), seed);
        if (!p) return py::none();
        return json_to_py(to_json(*p));
    });
    m.def("factorize", [](py::handle p) {
        py::list out;
        for (const auto& [b, blk] : factorize(point_of(p))) {
            py::list pair;
            pair.append(py::str(rat_to_string(b)));
            pair.append(json_to_py(to_json(blk)));
            out.append(pair);
        }
        return out;
    });
    m.def("daha_z1_matrix", [](py::handle a) {
        std::vector<Rational> v;
        for (const auto& e : a) v.push_back(rational_from_json(py_to_json(e)));
        return json_to_py(to_json(daha_z1_matrix(v)));
    });

    // window model
    m.def("cell_of_window",
          [](py::handle w) { return json_to_py(to_json(cell_of_window(window_from_json(py_to_json(w))))); });
    m.def("sample_window_cell", [](py::handle p, const std::string& b, std::uint64_t seed) {
        return json_to_py(to_json(sample_window_cell(part_of(p), rat_from_string(b), seed)));
    });
    m.def("eta", [](py::handle w) { return json_to_py(to_json(eta(window_from_json(py_to_json(w))))); });
    m.def("pluecker", [](py::handle w) {
        PlueckerVector pv = pluecker(window_from_json(py_to_json(w)));
        py::list out;
        for (const auto& [mu, c] : pv.coords) {
            py::dict e;
            e["parts"] = json_to_py(to_json(mu));
            e["coeff"] = py::str(rat_to_string(c));
            out.append(e);
        }
        return out;
    });
    m.def("schubert_member", [](py::handle basis, py::handle flag, py::handle lam) {
        std::vector<Poly> v;
        for (const auto& e : basis) v.push_back(poly_from_json(py_to_json(e)));
        return schubert_member(v, flagspec_from_json(py_to_json(flag)), part_of(lam));
    });
    m.def("omega_mu_q_member", [](py::handle basis, py::handle mu) {
        std::vector<Poly> v;
        for (const auto& e : basis) v.push_back(poly_from_json(py_to_json(e)));
        return omega_mu_q_member(v, multipartition_from_json(py_to_json(mu)));
    });

    // quasi-exponential spaces
    m.def("wronskian", [](py::handle c) {
        WronskianResult w = wronskian(quasiexp_from_json(py_to_json(c)));
        py::dict out;
        out["wronskian"] = json_to_py(to_json(w.wr));
        out["degree"] = w.degree;
        out["canonical"] = w.canonical;
        return out;
    });
    m.def(
        "exponents",
        [](py::handle c, py::handle at) {
            std::optional<Rational> loc;
            if (!at.is_none()) loc = rational_from_json(py_to_json(at));
            return json_to_py(to_json(exponents(quasiexp_from_json(py_to_json(c)), loc)));
        },
        py::arg("space"), py::arg("at") = py::none());
    m.def("tau_qe",
          [](py::handle c, int mvars) { return json_to_py(to_json(tau_qe(quasiexp_from_json(py_to_json(c)), mvars))); });
    m.def("dual_cell_data", [](py::handle c) {
        DualCellData d = dual_cell_data(quasiexp_from_json(py_to_json(c)));
        py::list sing;
        for (const auto& [pt, es] : d.singular) {
            py::dict e;
            e["point"] = py::str(rat_to_string(pt));
            e["exponents"] = json_to_py(Json(es.exps));
            sing.append(e);
        }
        py::dict out;
        out["singular"] = sing;
        out["nonsplit_wronskian"] = json_to_py(to_json(d.nonsplit_wronskian));
        return out;
    });
    m.def("pair_qe", [](const std::string& b, py::handle g, py::handle f) {
        return py::str(rat_to_string(
            pair_qe(rat_from_string(b), poly_from_json(py_to_json(g)), poly_from_json(py_to_json(f)))));
    });

    // baker operators
    m.def("psi_pol", [](py::handle p) { return json_to_py(to_json(psi_pol(point_of(p)).g)); });
    m.def("diff_op", [](py::handle p) {
        return json_to_py(to_json(diff_op(point_of(p))));
    });
    m.def("apply_op", [](py::handle op, const std::string& b, py::handle g) {
        return json_to_py(to_json(
            apply_op(diffop_from_json(py_to_json(op)), rat_from_string(b), poly_from_json(py_to_json(g)))));
    });
    m.def("solution_space",
          [](py::handle p) { return json_to_py(to_json(solution_space(point_of(p)))); });
    m.def("cperp_span", [](py::handle p, int depth) {
        return json_to_py(to_json(cperp_span(point_of(p), depth)));
    });
    m.def("classify_cell",
          [](py::handle p) { return json_to_py(to_json(classify_cell(point_of(p)))); });
    m.def("is_fuchsian", [](py::handle p) { return is_fuchsian(point_of(p)); });

    // verification
    m.def("intersect_dims", [](py::handle lam, py::handle blocks, py::handle mu) {
        std::vector<int> b;
        for (const auto& e : blocks) b.push_back(e.cast<int>());
        return json_to_py(intersect_dims(part_of(lam), b, mu_of(mu)).to_json());
    });
    m.def(
        "run_suite",
        [](const std::string& name, int n_max, std::uint64_t seed, int samples) {
            return json_to_py(run_suite(name, n_max, seed, samples).to_json());
        },
        py::arg("name"), py::arg("n_max") = 4, py::arg("seed") = 42, py::arg("samples") = 10);
    m.def("suite_names", [] {
        py::list out;
        for (const auto& n : suite_names()) out.append(py::str(n));
        return out;
    });

    m.attr("__version__") = "1.0.0";
}
