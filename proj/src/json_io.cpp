#include "hurwitz/json_io.hpp"

#include <cmath>
#include <cstdint>

namespace hurwitz {

namespace {

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {  // std::map ordering: sorted keys
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                dump_into(value, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_into(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: out += format_double(j.get<double>()); break;
        default: out += j.dump(); break;
    }
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

Mode mode_from_json(const Json& j) {
    if (!j.is_string()) bad("\"mode\" must be a string");
    const auto s = j.get<std::string>();
    if (s == "exact") return Mode::Exact;
    if (s == "float") return Mode::Float;
    bad("unknown mode '" + s + "'");
}

double number_from_json(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) bad(std::string(what) + " must be finite");
    return x;
}

}  // namespace

std::string canonical_dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

Json to_json(const Scalar& s) {
    if (s.is_exact()) return s.to_string();
    return s.value();
}

Scalar scalar_from_json(const Json& j, Mode mode) {
    if (mode == Mode::Exact) {
        if (j.is_string()) return Scalar::parse_exact(j.get<std::string>());
        if (j.is_number_integer()) return Scalar::parse_exact(j.dump());
        bad("exact entries must be strings \"p/q\" or integers, got " + j.dump());
    }
    return Scalar::real(number_from_json(j, "float entry"));
}

Json to_json(const Vector& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(to_json(s));
    return arr;
}

Vector vector_from_json(const Json& j, Mode mode) {
    if (!j.is_array()) bad("expected an array of scalars");
    Vector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(scalar_from_json(e, mode));
    return v;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(to_json(m.row(i)));
    return Json{{"n", m.size()}, {"mode", std::string(to_string(m.mode()))}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    const Json& n_json = require_key(j, "n");
    if (!n_json.is_number_integer() || n_json.get<std::int64_t>() < 1 || n_json.get<std::int64_t>() > 64) {
        throw Error(ErrorCode::DimensionOutOfRange, "\"n\" must be an integer in [1, 64]");
    }
    const auto n = n_json.get<std::size_t>();
    const Mode mode = mode_from_json(require_key(j, "mode"));
    const Json& entries = require_key(j, "entries");
    if (!entries.is_array() || entries.size() != n) bad("\"entries\" must hold n rows");
    std::vector<Vector> rows;
    rows.reserve(n);
    for (const auto& r : entries) {
        if (!r.is_array() || r.size() != n) bad("every row must hold n entries");
        rows.push_back(vector_from_json(r, mode));
    }
    return Matrix::from_rows(rows);
}

Json to_json(const Certificate& c) {
    return Json{{"kind", std::string(to_string(c.kind))},
                {"verdict", std::string(to_string(c.verdict))},
                {"pivots", to_json(c.pivots)},
                {"failure_stage", c.failure_stage ? Json(*c.failure_stage) : Json(nullptr)}};
}

Json to_json(const StabilityVerdict& v) {
    Json j = to_json(v.certificate);
    Json oracles = Json::object();
    if (v.oracle_agreement) {
        for (const auto& [name, ok] : *v.oracle_agreement) oracles[name] = ok;
    }
    j["oracles"] = std::move(oracles);
    return j;
}

Json to_json(const ChartPoint& p) { return Json{{"base", to_json(p.base)}, {"k", p.k}}; }

ChartPoint chart_point_from_json(const Json& j) {
    ChartPoint p{matrix_from_json(require_key(j, "base")), {}};
    const Json& k = require_key(j, "k");
    if (!k.is_array()) bad("\"k\" must be an array");
    for (const auto& e : k) p.k.push_back(number_from_json(e, "chart coordinate"));
    return p;
}

Json to_json(const DirectLiftParams& p) { return Json{{"k_row", to_json(p.k_row)}, {"d", to_json(p.d)}}; }

DirectLiftParams direct_lift_params_from_json(const Json& j, Mode mode) {
    return DirectLiftParams{vector_from_json(require_key(j, "k_row"), mode),
                            scalar_from_json(require_key(j, "d"), mode)};
}

MetzlerLiftParams metzler_lift_params_from_json(const Json& j, Mode mode) {
    MetzlerLiftParams p{vector_from_json(require_key(j, "h"), mode), vector_from_json(require_key(j, "k"), mode),
                        ChartCorner{}};
    const bool has_d = j.contains("d"), has_kn = j.contains("k_n");
    if (has_d == has_kn) bad("Metzler lift params need exactly one of \"d\" or \"k_n\"");
    if (has_d) {
        p.corner = DirectCorner{scalar_from_json(j.at("d"), mode)};
    } else {
        p.corner = ChartCorner{number_from_json(j.at("k_n"), "\"k_n\"")};
    }
    return p;
}

Json to_json(const LiftConditionReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json e{{"kind", std::string(to_string(v.kind))}, {"i", v.i + 1}};
        if (v.kind == LiftViolation::Kind::OffDiagonal) e["j"] = v.j + 1;
        violations.push_back(std::move(e));
    }
    return Json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

Json to_json(const FamilyReport& r) {
    Json rejected = Json::object();
    for (RejectReason reason : {RejectReason::NotMetzler, RejectReason::NotHurwitz, RejectReason::ConditionViolated,
                                RejectReason::NotSymmetric}) {
        const auto it = r.rejected.find(reason);
        rejected[std::string(to_string(reason))] = it == r.rejected.end() ? 0 : it->second;
    }
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return Json{{"total", r.total},
                {"accepted", r.accepted},
                {"rejected_reasons", std::move(rejected)},
                {"lift_failures", r.lift_failures},
                {"witnesses", std::move(witnesses)}};
}

BallFamilyConfig ball_family_config_from_json(const Json& j) {
    BallFamilyConfig cfg{BallFamilySpec{Matrix(1, Mode::Float)}, {}, Tolerance::floating()};
    if (j.contains("center")) {
        cfg.spec.center = matrix_from_json(j.at("center")).to_float();
    } else {
        const Json& n = require_key(j, "n");
        if (!n.is_number_integer() || n.get<std::int64_t>() < 1 || n.get<std::int64_t>() > 64) {
            throw Error(ErrorCode::DimensionOutOfRange, "\"n\" must be an integer in [1, 64]");
        }
        cfg.spec.center = Matrix(n.get<std::size_t>(), Mode::Float);
    }
    cfg.spec.radius = number_from_json(require_key(j, "radius"), "\"radius\"");
    const Json& count = require_key(j, "count");
    if (!count.is_number_integer() || count.get<std::int64_t>() < 1) bad("\"count\" must be an integer >= 1");
    cfg.spec.count = count.get<std::size_t>();
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) bad("\"seed\" must be a nonnegative integer");
        cfg.spec.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("lift_k")) {
        const Json& b = j.at("lift_k");
        if (!b.is_array() || b.size() != 2) bad("\"lift_k\" must be [lo, hi]");
        cfg.bounds = LiftBounds{number_from_json(b[0], "lift_k lo"), number_from_json(b[1], "lift_k hi")};
    }
    if (j.contains("tol")) cfg.tol = Tolerance::floating(number_from_json(j.at("tol"), "\"tol\""));
    return cfg;
}

PositiveLinearSystem system_from_json(const Json& j) {
    Matrix a = matrix_from_json(require_key(j, "A"));
    Vector b = vector_from_json(require_key(j, "b"), a.mode());
    return PositiveLinearSystem{std::move(a), std::move(b)};
}

Json to_json(const PositiveLinearSystem& sys) { return Json{{"A", to_json(sys.a)}, {"b", to_json(sys.b)}}; }

Json to_json(const Equilibrium& eq) {
    return Json{{"x_bar", to_json(eq.x_bar)}, {"residual", eq.residual}, {"strictly_positive", eq.strictly_positive}};
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t";
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    for (std::size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (std::size_t s = 0; s < traj.t.size(); ++s) {
        out += format_double(traj.t[s]);
        for (double x : traj.states[s]) {
            out += ',';
            out += format_double(x);
        }
        out += '\n';
    }
    return out;
}

}  // namespace hurwitz
