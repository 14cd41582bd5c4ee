#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homint/interpolate.hpp"
#include "homint/json_io.hpp"

namespace py = pybind11;
using namespace homint;

namespace {

// Arbitrary-precision integers cross the boundary through their
// decimal representation; both sides are exact.
Int to_int(py::handle obj) { return int_from_string(py::str(obj)); }

py::object from_int(const Int& x) {
    return py::module_::import("builtins").attr("int")(x.get_str());
}

std::vector<Point> to_points(const std::vector<std::vector<py::object>>& pts) {
    std::vector<Point> out;
    for (const auto& row : pts) {
        Point p;
        for (const auto& c : row) p.coords.push_back(to_int(c));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Int> to_ints(const std::vector<py::object>& xs) {
    std::vector<Int> out;
    for (const auto& x : xs) out.push_back(to_int(x));
    return out;
}

py::dict poly_to_dict(const HomogeneousPoly& f) {
    py::dict d;
    d["n"] = f.var_count();
    d["degree"] = f.degree();
    py::list terms;
    for (const auto& [e, c] : f.terms()) {
        py::dict t;
        t["exps"] = e;
        t["coeff"] = from_int(c);
        terms.append(std::move(t));
    }
    d["terms"] = std::move(terms);
    if (f.modulus()) d["modulus"] = from_int(*f.modulus());
    return d;
}

HomogeneousPoly poly_from_dict(const py::dict& d) {
    int n = d["n"].cast<int>();
    std::uint64_t degree = d["degree"].cast<std::uint64_t>();
    std::optional<Int> modulus;
    if (d.contains("modulus")) modulus = to_int(d["modulus"]);
    std::vector<std::pair<Exponents, Int>> terms;
    for (auto t : d["terms"]) {
        py::dict td = t.cast<py::dict>();
        terms.emplace_back(td["exps"].cast<Exponents>(), to_int(td["coeff"]));
    }
    return HomogeneousPoly::from_terms(n, degree, terms, modulus);
}

InterpolationInstance make_instance(
    const std::vector<std::vector<py::object>>& pts,
    const std::optional<std::vector<py::object>>& targets) {
    std::vector<Point> points = to_points(pts);
    if (points.empty()) throw std::invalid_argument("need at least one point");
    int n = points.front().dim();
    if (targets)
        return InterpolationInstance::make(std::move(points), n,
                                           to_ints(*targets));
    return InterpolationInstance::all_ones(std::move(points), n);
}

IntMatrix to_matrix(const std::vector<std::vector<py::object>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    IntMatrix M(static_cast<long>(rows.size()),
                static_cast<long>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size())
            throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            M.at(static_cast<long>(i), static_cast<long>(j)) = to_int(rows[i][j]);
    }
    return M;
}

py::list matrix_to_list(const IntMatrix& M) {
    py::list rows;
    for (long i = 0; i < M.rows; ++i) {
        py::list row;
        for (long j = 0; j < M.cols; ++j) row.append(from_int(M.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::dict result_to_dict(const FeasibilityResult& r) {
    py::dict d;
    switch (r.verdict) {
        case Verdict::feasible: d["verdict"] = "feasible"; break;
        case Verdict::infeasible_at_degree:
            d["verdict"] = "infeasible_at_degree";
            break;
        case Verdict::infeasible_all_degrees:
            d["verdict"] = "infeasible_all_degrees";
            break;
        default: d["verdict"] = "unknown";
    }
    if (r.degree) d["degree"] = *r.degree;
    if (r.witness) d["witness"] = poly_to_dict(*r.witness);
    if (r.certificate) {
        Json j = certificate_to_json(*r.certificate);
        d["certificate"] =
            py::module_::import("json").attr("loads")(j.dump());
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_homint, m) {
    m.doc() = "Homogeneous polynomial interpolation over the integers";

    m.def(
        "construct_witness",
        [](const std::vector<std::vector<py::object>>& pts,
           std::uint64_t degree_budget) {
            std::vector<Point> points = to_points(pts);
            if (points.empty())
                throw std::invalid_argument("need at least one point");
            PointSet S = PointSet::canonicalize(std::move(points),
                                                static_cast<int>(pts[0].size()));
            WitnessOptions opts;
            opts.degree_budget = degree_budget;
            return poly_to_dict(construct_witness(S, opts));
        },
        py::arg("points"), py::arg("degree_budget") = 50000,
        "All-ones witness: nonconstant homogeneous f with f(P) = 1 for "
        "every point");

    m.def(
        "feasible_degree",
        [](const std::vector<std::vector<py::object>>& pts,
           const std::optional<std::vector<py::object>>& targets,
           std::uint64_t degree) {
            return result_to_dict(
                feasible_degree(make_instance(pts, targets), degree));
        },
        py::arg("points"), py::arg("targets"), py::arg("degree"));

    m.def(
        "min_degree",
        [](const std::vector<std::vector<py::object>>& pts,
           const std::optional<std::vector<py::object>>& targets,
           std::uint64_t max_degree) {
            return result_to_dict(
                min_degree(make_instance(pts, targets), max_degree));
        },
        py::arg("points"), py::arg("targets"), py::arg("max_degree"));

    m.def(
        "periodic_obstruction",
        [](const std::vector<std::vector<py::object>>& pts,
           const std::optional<std::vector<py::object>>& targets,
           const std::vector<py::object>& primes,
           std::uint64_t budget) -> py::object {
            auto cert = periodic_obstruction(make_instance(pts, targets),
                                             to_ints(primes), budget);
            if (!cert) return py::none();
            Json j = certificate_to_json(*cert);
            return py::module_::import("json").attr("loads")(j.dump());
        },
        py::arg("points"), py::arg("targets"), py::arg("primes"),
        py::arg("budget") = 64);

    m.def(
        "mod_witness",
        [](py::object modulus, const std::vector<std::vector<py::object>>& pts) {
            Int m = to_int(modulus);
            FactoredInteger mf = factor(m);
            std::vector<std::vector<Int>> rows;
            for (const auto& p : to_points(pts)) rows.push_back(p.coords);
            return poly_to_dict(mod_witness(mf, ResiduePointSet::make(m, rows)));
        },
        py::arg("modulus"), py::arg("points"));

    m.def(
        "evaluate",
        [](const py::dict& poly, const std::vector<py::object>& point) {
            return from_int(poly_from_dict(poly).evaluate(to_ints(point)));
        },
        py::arg("poly"), py::arg("point"));

    m.def(
        "snf",
        [](const std::vector<std::vector<py::object>>& rows) {
            SNFDecomposition s = snf(to_matrix(rows));
            return py::make_tuple(matrix_to_list(s.U), matrix_to_list(s.D),
                                  matrix_to_list(s.V));
        },
        py::arg("matrix"), "Smith Normal Form: returns (U, D, V) with U*M*V = D");

    m.def(
        "solve_diophantine",
        [](const std::vector<std::vector<py::object>>& rows,
           const std::vector<py::object>& b) -> py::object {
            auto x = solve_diophantine(to_matrix(rows), to_ints(b));
            if (!x) return py::none();
            py::list out;
            for (const Int& v : *x) out.append(from_int(v));
            return out;
        },
        py::arg("matrix"), py::arg("b"));

    m.def(
        "in_image",
        [](const std::vector<std::vector<py::object>>& rows,
           const std::vector<py::object>& b) {
            return in_image(to_matrix(rows), to_ints(b));
        },
        py::arg("matrix"), py::arg("b"));

    m.def(
        "factor",
        [](py::object x) {
            FactoredInteger f = factor(to_int(x));
            py::dict d;
            for (const auto& [p, e] : f.factors) d[from_int(p)] = e;
            return d;
        },
        py::arg("x"));

    m.def(
        "totient",
        [](py::object x) { return from_int(totient(factor(to_int(x)))); },
        py::arg("x"));
}
