#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nivatlab/io.hpp"

namespace py = pybind11;
using namespace nivatlab;

namespace {

using PointPair = std::pair<Int, Int>;

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LatticePoint point(PointPair p) { return {p.first, p.second}; }

std::vector<PointPair> pairs(const std::vector<LatticePoint>& pts) {
    std::vector<PointPair> out;
    out.reserve(pts.size());
    for (auto g : pts) out.emplace_back(g.x, g.y);
    return out;
}

std::vector<LatticePoint> points(const std::vector<PointPair>& pts) {
    std::vector<LatticePoint> out;
    out.reserve(pts.size());
    for (auto p : pts) out.push_back(point(p));
    return out;
}

OrientedLine line_of(const py::object& o) {
    if (py::isinstance<OrientedLine>(o)) return o.cast<OrientedLine>();
    return parse_line(o.cast<std::string>());
}

ConvexLatticeSet shape_of(const py::object& o) {
    if (py::isinstance<ConvexLatticeSet>(o)) return o.cast<ConvexLatticeSet>();
    if (py::isinstance<py::str>(o)) return parse_shape(o.cast<std::string>());
    return ConvexLatticeSet::hull_of(points(o.cast<std::vector<PointPair>>()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pattern complexity and periodicity of two-dimensional configurations";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<UnknownLetterError>(m, "UnknownLetterError", PyExc_KeyError);

    py::class_<OrientedLine>(m, "Line")
        .def(py::init([](PointPair d, Int offset) { return OrientedLine(point(d), offset); }), py::arg("direction"),
             py::arg("offset") = 0)
        .def_static("parse", &parse_line)
        .def_static("horizontal", &OrientedLine::horizontal)
        .def_property_readonly("direction", [](const OrientedLine& l) { return PointPair{l.direction().x, l.direction().y}; })
        .def_property_readonly("offset", &OrientedLine::offset)
        .def("reversed", &OrientedLine::reversed)
        .def("contains", [](const OrientedLine& l, PointPair p) { return l.contains(point(p)); })
        .def("__eq__", [](const OrientedLine& a, const OrientedLine& b) { return a == b; })
        .def("__repr__", [](const OrientedLine& l) {
            return "Line((" + std::to_string(l.direction().x) + ", " + std::to_string(l.direction().y) + "), " +
                   std::to_string(l.offset()) + ")";
        });

    py::class_<ConvexLatticeSet>(m, "Shape")
        .def_static("rectangle", &ConvexLatticeSet::rectangle, py::arg("n"), py::arg("k"))
        .def_static("hull", [](const std::vector<PointPair>& p) { return ConvexLatticeSet::hull_of(points(p)); })
        .def_static("parse", &parse_shape)
        .def_property_readonly("points", [](const ConvexLatticeSet& s) { return pairs(s.points()); })
        .def_property_readonly("vertices", [](const ConvexLatticeSet& s) { return pairs(s.vertices()); })
        .def_property_readonly("positive_area", &ConvexLatticeSet::has_positive_area)
        .def("contains", [](const ConvexLatticeSet& s, PointPair p) { return s.contains(point(p)); })
        .def("to_dict", [](const ConvexLatticeSet& s) { return to_py(to_json(s)); })
        .def("__len__", &ConvexLatticeSet::size)
        .def("__eq__", [](const ConvexLatticeSet& a, const ConvexLatticeSet& b) { return a == b; })
        .def("__repr__", [](const ConvexLatticeSet& s) { return "Shape(" + to_json(s.vertices()).dump() + ")"; });

    py::class_<Configuration>(m, "Configuration")
        .def_static("diagonal_family", &Configuration::diagonal_family, py::arg("black") = 'b',
                    py::arg("white") = 'w')
        .def_static(
            "tile",
            [](const std::string& alphabet, const std::vector<std::string>& rows, std::optional<PointPair> b1,
               std::optional<PointPair> b2) {
                if (b1.has_value() != b2.has_value()) throw DomainError("give both periods or neither");
                if (!b1) return Configuration::doubly_periodic_tile(Alphabet(alphabet), rows);
                return Configuration::doubly_periodic_tile(Alphabet(alphabet), point(*b1), point(*b2), rows);
            },
            py::arg("alphabet"), py::arg("rows"), py::arg("b1") = py::none(), py::arg("b2") = py::none())
        .def_static(
            "finite_defect",
            [](const std::string& alphabet, char background, const std::map<PointPair, char>& defects) {
                std::map<LatticePoint, char> d;
                for (const auto& [p, c] : defects) d[point(p)] = c;
                return Configuration::finite_defect(Alphabet(alphabet), background, d);
            },
            py::arg("alphabet"), py::arg("background"), py::arg("defects"))
        .def_static(
            "window",
            [](const std::string& alphabet, const std::vector<std::string>& rows, PointPair origin) {
                return Configuration::window(Alphabet(alphabet), point(origin), rows);
            },
            py::arg("alphabet"), py::arg("rows"), py::arg("origin") = PointPair{0, 0})
        .def_static("from_text", [](const std::string& text) { return parse_configuration(text); })
        .def_static("load", &load_configuration)
        .def_property_readonly("kind", &Configuration::kind)
        .def_property_readonly("alphabet", [](const Configuration& c) { return c.alphabet().letters(); })
        .def("letter_at", [](const Configuration& c, Int x, Int y) { return c.letter_at({x, y}); })
        .def("__repr__", [](const Configuration& c) {
            return "Configuration(" + c.kind() + ", '" + c.alphabet().letters() + "')";
        });

    m.def(
        "complexity",
        [](const Configuration& eta, const py::object& shape) { return complexity(eta, shape_of(shape).points()).count; },
        py::arg("config"), py::arg("shape"), "Number of distinct patterns of the shape.");
    m.def(
        "complexity_report",
        [](const Configuration& eta, const py::object& shape) {
            return to_py(to_json(complexity(eta, shape_of(shape).points())));
        },
        py::arg("config"), py::arg("shape"));
    m.def(
        "complexity_table",
        [](const Configuration& eta, Int n_max, Int k_max) { return to_py(to_json(complexity_table(eta, n_max, k_max))); },
        py::arg("config"), py::arg("n_max"), py::arg("k_max"));
    m.def(
        "quasi_regular",
        [](const py::object& shape) {
            auto s = shape_of(shape);
            return to_py(to_json(is_quasi_regular(s), s));
        },
        py::arg("shape"));

    m.def(
        "mh_check",
        [](const std::string& word, Int n0, bool two_sided, std::optional<Int> alphabet_size) {
            return to_py(to_json(mh_check(parse_word(word), n0, two_sided ? Sidedness::TwoSided : Sidedness::OneSided,
                                          alphabet_size)));
        },
        py::arg("word"), py::arg("n0"), py::arg("two_sided") = false, py::arg("alphabet_size") = py::none());
    m.def(
        "fine_wilf",
        [](const std::string& word, Int p, Int q) { return to_py(to_json(fine_wilf(parse_word(word), p, q))); },
        py::arg("word"), py::arg("p"), py::arg("q"));
    m.def(
        "periods",
        [](const Configuration& eta, Int bound) { return to_py(to_json(detect_periods_2d(eta, bound))); },
        py::arg("config"), py::arg("bound") = 8);
    m.def(
        "null_area_period",
        [](const Configuration& eta, const py::object& shape) {
            return to_py(to_json(null_area_period(eta, shape_of(shape))));
        },
        py::arg("config"), py::arg("shape"));

    m.def(
        "generating_set",
        [](const Configuration& eta, const py::object& shape, const py::object& line) {
            ComplexityEngine engine(eta);
            auto u = shape_of(shape);
            if (line.is_none()) return to_py(to_json(find_generating_set(engine, u)));
            return to_py(to_json(find_directional_generating_set(engine, u, line_of(line))));
        },
        py::arg("config"), py::arg("shape"), py::arg("line") = py::none());
    m.def(
        "mlc_set",
        [](const Configuration& eta, const py::object& shape) {
            ComplexityEngine engine(eta);
            return to_py(to_json(find_mlc_set(engine, shape_of(shape))));
        },
        py::arg("config"), py::arg("shape"));
    m.def(
        "balanced_set",
        [](const Configuration& eta, const py::object& shape, const py::object& line, Int witness_radius) {
            ComplexityEngine engine(eta);
            BalancedOptions opts;
            opts.witness_radius = witness_radius;
            return to_py(to_json(construct_balanced_set(engine, shape_of(shape), line_of(line), opts)));
        },
        py::arg("config"), py::arg("shape"), py::arg("line"), py::arg("witness_radius") = 2);
    m.def(
        "phi",
        [](const Configuration& eta, const py::object& shape, const py::object& line, Int p) {
            ComplexityEngine engine(eta);
            return to_py(to_json(phi(engine, shape_of(shape), line_of(line), p)));
        },
        py::arg("config"), py::arg("shape"), py::arg("line"), py::arg("p"));
    m.def(
        "strip_lemma",
        [](const Configuration& eta, const py::object& shape, const py::object& line, Int p, Int window) {
            ComplexityEngine engine(eta);
            return to_py(to_json(verify_strip_lemma(engine, shape_of(shape), line_of(line), p, window)));
        },
        py::arg("config"), py::arg("shape"), py::arg("line"), py::arg("p"), py::arg("window") = 64);
    m.def(
        "expansive_witness",
        [](const Configuration& eta, const py::object& line, Int radius) {
            ComplexityEngine engine(eta);
            return to_py(to_json(expansive_witness(engine, line_of(line), radius)));
        },
        py::arg("config"), py::arg("line"), py::arg("radius") = 2);

    m.def(
        "nivat_check",
        [](const Configuration& eta, const py::object& shape) { return to_py(to_json(nivat_check(eta, shape_of(shape)))); },
        py::arg("config"), py::arg("shape"));
    m.def(
        "example_suite", [](Int max_sum, Int half_max) { return to_py(to_json(example_suite(max_sum, half_max))); },
        py::arg("max_sum") = 14, py::arg("half_max") = 12);
    m.def("diagonal_closed_form", &diagonal_closed_form, py::arg("n"), py::arg("k"));
}
