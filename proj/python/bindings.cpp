#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/insulin.hpp"
#include "hurwitz/insulin_demo.hpp"
#include "hurwitz/json_io.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace hurwitz;

namespace {

Mode mode_from(const std::string& s) {
    if (s == "exact") return Mode::Exact;
    if (s == "float") return Mode::Float;
    throw Error(ErrorCode::InvalidInput, "mode must be 'exact' or 'float'");
}

Tolerance tol_for(Mode mode, std::optional<double> eps) {
    if (!eps) return Tolerance::for_mode(mode);
    return Tolerance{*eps};
}

Scalar scalar_from(const py::handle& obj, Mode mode) {
    if (mode == Mode::Exact) {
        if (py::isinstance<py::str>(obj) || py::isinstance<py::int_>(obj)) {
            return Scalar::parse_exact(py::str(obj).cast<std::string>());
        }
        throw Error(ErrorCode::InvalidInput, "exact entries must be str 'p/q' or int");
    }
    return Scalar::real(obj.cast<double>());
}

Vector vector_from(const py::sequence& seq, Mode mode) {
    Vector v;
    v.reserve(seq.size());
    for (const auto& e : seq) v.push_back(scalar_from(e, mode));
    return v;
}

py::object scalar_to_py(const Scalar& s) {
    if (s.is_exact()) return py::str(s.to_string());
    return py::float_(s.value());
}

py::list vector_to_py(const Vector& v) {
    py::list out;
    for (const auto& s : v) out.append(scalar_to_py(s));
    return out;
}

Matrix matrix_from(const py::sequence& rows, const std::string& mode) {
    std::vector<Vector> converted;
    for (const auto& r : rows) converted.push_back(vector_from(r.cast<py::sequence>(), mode_from(mode)));
    return Matrix::from_rows(converted);
}

std::string dump(const Json& j) { return canonical_dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hurwitz stability certification for symmetric and Metzler matrices";

    py::register_exception<Error>(m, "HurwitzError");

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from), py::arg("rows"), py::arg("mode") = "float")
        .def_static("from_json", [](const std::string& text) { return matrix_from_json(Json::parse(text)); })
        .def_property_readonly("n", &Matrix::size)
        .def_property_readonly("mode", [](const Matrix& a) { return std::string(to_string(a.mode())); })
        .def("entries",
             [](const Matrix& a) {
                 py::list rows;
                 for (std::size_t i = 0; i < a.size(); ++i) rows.append(vector_to_py(a.row(i)));
                 return rows;
             })
        .def("to_float", &Matrix::to_float)
        .def("to_json", [](const Matrix& a) { return dump(to_json(a)); })
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& a) { return "Matrix(" + dump(to_json(a)) + ")"; });

    m.def("insulin_a7", &insulin_a7);
    m.def("insulin_b6", &insulin_b6);

    m.def("is_symmetric", [](const Matrix& a, std::optional<double> tol) {
        return is_symmetric(a, tol_for(a.mode(), tol));
    }, py::arg("a"), py::arg("tol") = py::none());
    m.def("is_metzler", [](const Matrix& a, std::optional<double> tol, bool strict) {
        return is_metzler(a, tol_for(a.mode(), tol), strict);
    }, py::arg("a"), py::arg("tol") = py::none(), py::arg("strict") = false);
    m.def("schur_reduce", [](const Matrix& a, std::optional<double> tol) {
        return schur_reduce(partition(a), tol_for(a.mode(), tol));
    }, py::arg("a"), py::arg("tol") = py::none());
    m.def("char_poly", [](const Matrix& a) { return vector_to_py(char_poly(a)); });
    m.def("solve_linear", [](const Matrix& a, const py::sequence& rhs, std::optional<double> tol) {
        return vector_to_py(solve_linear(a, vector_from(rhs, a.mode()), tol_for(a.mode(), tol)));
    }, py::arg("a"), py::arg("rhs"), py::arg("tol") = py::none());

    m.def("_certify", [](const Matrix& a, const std::string& kind, std::optional<double> tol, bool oracles) {
        const MatrixKind k = kind == "metzler" ? MatrixKind::Metzler : MatrixKind::Symmetric;
        const Tolerance t = tol_for(a.mode(), tol);
        return dump(to_json(oracles ? certify_with_oracles(a, k, t) : certify(a, k, t)));
    }, py::arg("a"), py::arg("kind"), py::arg("tol") = py::none(), py::arg("oracles") = true);

    m.def("phi", [](const Matrix& a, std::optional<double> tol) {
        ChartPoint p = phi(a, tol_for(Mode::Float, tol));
        return py::make_tuple(p.base, p.k);
    }, py::arg("a"), py::arg("tol") = py::none());
    m.def("phi_inverse", [](const Matrix& base, std::vector<double> k, std::optional<double> tol) {
        return phi_inverse(ChartPoint{base, std::move(k)}, tol_for(Mode::Float, tol));
    }, py::arg("base"), py::arg("k"), py::arg("tol") = py::none());
    m.def("lift_symmetric", [](const Matrix& base, const py::sequence& k_row, const py::object& d,
                               std::optional<double> tol) {
        DirectLiftParams p{vector_from(k_row, base.mode()), scalar_from(d, base.mode())};
        return lift_symmetric_direct(base, p, tol_for(base.mode(), tol));
    }, py::arg("base"), py::arg("k_row"), py::arg("d"), py::arg("tol") = py::none());
    m.def("lift_metzler", [](const Matrix& base, const py::sequence& h, const py::sequence& k, const py::object& d,
                             std::optional<double> k_n, std::optional<double> tol) {
        MetzlerLiftParams p{vector_from(h, base.mode()), vector_from(k, base.mode()), ChartCorner{}};
        if (!d.is_none()) {
            p.corner = DirectCorner{scalar_from(d, base.mode())};
        } else if (k_n) {
            p.corner = ChartCorner{*k_n};
        } else {
            throw Error(ErrorCode::InvalidInput, "lift_metzler needs d or k_n");
        }
        return lift_metzler(base, p, tol_for(base.mode(), tol));
    }, py::arg("base"), py::arg("h"), py::arg("k"), py::arg("d") = py::none(), py::arg("k_n") = py::none(),
       py::arg("tol") = py::none());
    m.def("random_hurwitz_symmetric", [](std::size_t n, std::uint64_t seed) {
        return random_hurwitz_symmetric(n, seed, Tolerance::floating());
    }, py::arg("n"), py::arg("seed"));

    m.def("_sample_ball_family", [](const std::string& config) {
        const BallFamilyConfig cfg = ball_family_config_from_json(Json::parse(config));
        return dump(to_json(sample_ball_family(cfg.spec, cfg.bounds, cfg.tol)));
    });
    m.def("_equilibrium", [](const Matrix& a, const py::sequence& b, std::optional<double> tol) {
        PositiveLinearSystem sys{a, vector_from(b, a.mode())};
        return dump(to_json(equilibrium(sys, tol_for(a.mode(), tol))));
    }, py::arg("a"), py::arg("b"), py::arg("tol") = py::none());
    m.def("simulate", [](const Matrix& a, const py::sequence& b, std::vector<double> x0, double dt,
                         std::size_t steps) {
        Trajectory traj = simulate(PositiveLinearSystem{a, vector_from(b, a.mode())}, x0, dt, steps);
        return py::make_tuple(traj.t, traj.states);
    }, py::arg("a"), py::arg("b"), py::arg("x0"), py::arg("dt"), py::arg("steps"));
    m.def("insulin_demo_ok", [](std::size_t family_count, std::uint64_t seed) {
        return run_insulin_demo(insulin_a7_json(), InsulinDemoOptions{family_count, seed}).ok();
    }, py::arg("family_count") = 500, py::arg("seed") = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
