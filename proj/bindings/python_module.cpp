#include "negtype/errors.hpp"
#include "negtype/json_io.hpp"
#include "negtype/reports.hpp"
#include "negtype/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace negtype;

namespace {

py::object fraction(const Rational& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_fraction_string(q));
}

Rational scalar_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
    if (py::isinstance<py::float_>(h)) return Rational(h.cast<double>());
    std::string text = py::str(h).cast<std::string>();
    auto parsed = parse_rational(text);
    if (!parsed) throw ValidationError("cannot parse scalar '" + text + "'");
    return *parsed;
}

bool scalar_is_exact(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) {
        double v = h.cast<double>();
        return v == static_cast<long long>(v);
    }
    return true; // ints, strings and Fractions are exact
}

// teams come in as [(label, weight), ...]
WeightedSimplex simplex_from_py(const SemiMetricSpace& s, const py::iterable& a,
                                const py::iterable& b) {
    auto team = [&](const py::iterable& entries) {
        std::vector<WeightedPoint> out;
        for (const auto& item : entries) {
            auto pair = item.cast<py::sequence>();
            out.push_back({s.index_of(pair[0].cast<std::string>()), scalar_from_py(pair[1])});
        }
        return out;
    };
    return WeightedSimplex(team(a), team(b));
}

py::list team_to_py(const SemiMetricSpace& s, const std::vector<WeightedPoint>& team) {
    py::list out;
    for (const auto& e : team) out.append(py::make_tuple(s.label(e.point), fraction(e.weight)));
    return out;
}

py::dict json_to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

GapOptions make_opts(unsigned seed, int restarts, int cutoff) {
    GapOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.exact_cutoff = cutoff;
    return opts;
}

} // namespace

PYBIND11_MODULE(_negtype, m) {
    m.doc() = "p-negative type gaps and combinations of finite semi-metric spaces";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<SemiMetricSpace>(m, "Space")
        .def_static(
            "from_matrix",
            [](const std::vector<std::string>& labels, const py::iterable& matrix) {
                std::vector<std::vector<Rational>> rows;
                bool exact = true;
                for (const auto& row : matrix) {
                    std::vector<Rational> r;
                    for (const auto& entry : row.cast<py::iterable>()) {
                        exact = exact && scalar_is_exact(entry);
                        r.push_back(scalar_from_py(entry));
                    }
                    rows.push_back(std::move(r));
                }
                return SemiMetricSpace::from_matrix(labels, rows, exact, true);
            },
            py::arg("labels"), py::arg("matrix"))
        .def_static(
            "from_graph",
            [](const std::vector<std::string>& vertices, const py::iterable& edges) {
                WeightedGraph g;
                g.vertices = vertices;
                for (const auto& item : edges) {
                    auto e = item.cast<py::sequence>();
                    g.exact_lengths = g.exact_lengths && scalar_is_exact(e[2]);
                    g.edges.push_back(
                        {e[0].cast<std::string>(), e[1].cast<std::string>(), scalar_from_py(e[2])});
                }
                return space_from_graph(g);
            },
            py::arg("vertices"), py::arg("edges"))
        .def_static("from_json",
                    [](const std::string& text) { return space_from_json(parse_json_text(text)); })
        .def_property_readonly("labels", &SemiMetricSpace::labels)
        .def_property_readonly("size", &SemiMetricSpace::size)
        .def_property_readonly("is_metric", &SemiMetricSpace::is_metric)
        .def_property_readonly("exact", &SemiMetricSpace::exact)
        .def("distance",
             [](const SemiMetricSpace& s, const std::string& u, const std::string& v) {
                 return fraction(s.dist(s.index_of(u), s.index_of(v)));
             })
        .def("power",
             [](const SemiMetricSpace& s, const py::handle& c) {
                 return power_transform(s, scalar_from_py(c));
             },
             py::arg("c"))
        .def("diameter", [](const SemiMetricSpace& s) { return fraction(diameter(s)); })
        .def("min_distance",
             [](const SemiMetricSpace& s) { return fraction(min_nonzero_distance(s)); })
        .def("to_json", [](const SemiMetricSpace& s) { return space_to_json(s).dump(); })
        .def("__repr__", [](const SemiMetricSpace& s) {
            return "<Space of " + std::to_string(s.size()) + " points>";
        });

    m.def(
        "check",
        [](const SemiMetricSpace& s, double p, double tol) {
            return json_to_py(check_report(s, p, tol));
        },
        py::arg("space"), py::arg("p"), py::arg("tol") = 1e-9,
        "Decide p-negative type via the restricted eigenvalue test.");

    m.def(
        "gap",
        [](const SemiMetricSpace& s, double p, unsigned seed, int restarts, int cutoff) {
            GapResult r = gap(s, p, make_opts(seed, restarts, cutoff));
            py::dict out;
            out["p"] = r.p;
            out["gap"] = r.gap;
            out["gap_exact"] = r.gap_exact ? fraction(*r.gap_exact) : py::none().cast<py::object>();
            out["certified_tol"] = r.certified_tol;
            out["negative_type_holds"] = r.negative_type_holds;
            out["witness_a"] = team_to_py(s, r.witness.a_team());
            out["witness_b"] = team_to_py(s, r.witness.b_team());
            return out;
        },
        py::arg("space"), py::arg("p") = 1.0, py::arg("seed") = 0, py::arg("restarts") = 32,
        py::arg("cutoff") = 12, "Minimize gamma over normalized simplices.");

    m.def(
        "supremal",
        [](const SemiMetricSpace& s, double p_max, double tol) -> py::object {
            auto v = supremal_p(s, p_max, tol);
            if (!v) return py::float_(std::numeric_limits<double>::infinity());
            return py::float_(*v);
        },
        py::arg("space"), py::arg("p_max") = 8.0, py::arg("tol") = 1e-6,
        "Supremal p-negative type; +inf when negative type still holds at p_max.");

    m.def(
        "gamma",
        [](const SemiMetricSpace& s, const py::iterable& a, const py::iterable& b,
           const py::handle& p) -> py::object {
            WeightedSimplex d = simplex_from_py(s, a, b);
            Rational pq = scalar_from_py(p);
            if (s.exact() && is_integer(pq) && pq >= 0)
                return fraction(gamma_exact(s, d, numerator(pq).convert_to<unsigned>()));
            return py::float_(gamma(s, d, to_double(pq)));
        },
        py::arg("space"), py::arg("a"), py::arg("b"), py::arg("p") = 1,
        "Simplex gap function; exact on exact spaces at integer p.");

    m.def(
        "refine",
        [](const SemiMetricSpace& s, const py::iterable& a, const py::iterable& b) {
            auto r = refine(simplex_from_py(s, a, b));
            py::dict out;
            out["a"] = team_to_py(s, r.simplex.a_team());
            out["b"] = team_to_py(s, r.simplex.b_team());
            out["weight"] = fraction(r.weight);
            return out;
        },
        py::arg("space"), py::arg("a"), py::arg("b"),
        "Canonical refinement and weight of a simplex.");

    m.def(
        "equivalent",
        [](const SemiMetricSpace& s, const py::iterable& a1, const py::iterable& b1,
           const py::iterable& a2, const py::iterable& b2) {
            return equivalent(simplex_from_py(s, a1, b1), simplex_from_py(s, a2, b2));
        },
        py::arg("space"), py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));

    m.def(
        "compose_gaps",
        [](const py::iterable& gaps) {
            std::vector<Rational> values;
            bool exact = true;
            for (const auto& g : gaps) {
                exact = exact && scalar_is_exact(g);
                values.push_back(scalar_from_py(g));
            }
            Rational composed = compose_gaps(values);
            if (exact) return py::object(fraction(composed));
            return py::object(py::float_(to_double(composed)));
        },
        py::arg("gaps"), "Harmonic-style composition (sum of reciprocals)^-1.");

    m.def(
        "tree_gap",
        [](const std::vector<std::string>& vertices, const py::iterable& edges) {
            WeightedGraph g;
            g.vertices = vertices;
            for (const auto& item : edges) {
                auto e = item.cast<py::sequence>();
                g.edges.push_back(
                    {e[0].cast<std::string>(), e[1].cast<std::string>(), scalar_from_py(e[2])});
            }
            return fraction(tree_gap(g));
        },
        py::arg("vertices"), py::arg("edges"),
        "Gap of a weighted tree: reciprocal of the summed reciprocal edge lengths.");

    m.def(
        "combine",
        [](const std::string& plan_text, unsigned seed, int restarts, bool emit_space,
           bool emit_extremal) {
            GluePlan plan = plan_from_json(parse_json_text(plan_text));
            return json_to_py(
                combine_report(plan, make_opts(seed, restarts, 12), emit_space, emit_extremal));
        },
        py::arg("plan"), py::arg("seed") = 0, py::arg("restarts") = 32,
        py::arg("emit_space") = true, py::arg("emit_extremal") = true,
        "Build a combination space from a JSON plan and analyze it.");

    m.def(
        "bound",
        [](const std::string& doc_text, double p, unsigned seed, int restarts) {
            return json_to_py(bound_report(parse_json_text(doc_text), p, make_opts(seed, restarts, 12)));
        },
        py::arg("doc"), py::arg("p") = 1.0, py::arg("seed") = 0, py::arg("restarts") = 32,
        "Lower bounds on the supremal p for a space or plan document.");
}
