// hurwitz-kit: command-line front end. Every command parses JSON, calls one
// library operation and serializes the result canonically.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/insulin.hpp"
#include "hurwitz/insulin_demo.hpp"
#include "hurwitz/json_io.hpp"

namespace {

using namespace hurwitz;

constexpr int kExitOk = 0;
constexpr int kExitNotHurwitz = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + out_path + "'");
    out << text;
}

void emit_json(const Json& j, const std::string& out_path) { emit(canonical_dump(j) + "\n", out_path); }

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::TolDisagreement:
        case ErrorCode::Inconclusive:
        case ErrorCode::OracleDisagreement:
        case ErrorCode::Internal: return kExitInconclusive;
        default: return kExitInput;
    }
}

/// exact forces eps = 0; float requires eps > 0.
Tolerance resolve_tolerance(Mode mode, const std::optional<double>& tol) {
    if (mode == Mode::Exact) {
        if (tol && *tol != 0.0) throw Error(ErrorCode::InvalidTolerance, "--tol must be 0 (or omitted) in exact mode");
        return Tolerance::exact();
    }
    const double eps = tol.value_or(Tolerance::kDefaultFloatEps);
    if (!(eps > 0.0)) throw Error(ErrorCode::InvalidTolerance, "--tol must be positive in float mode");
    return Tolerance::floating(eps);
}

std::optional<Mode> parse_mode(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s == "exact" ? Mode::Exact : Mode::Float;
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("HURWITZ_KIT_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, std::string("HURWITZ_KIT_SEED='") + env + "' is not an integer");
        }
    }
    return flag_seed;
}

struct Options {
    std::string input, out, kind = "symmetric", mode, base, params, config, system, x0, data;
    std::string direction, lift_kind;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double dt = 0.01;
    std::size_t steps = 1000;
    std::size_t family_count = 500;
};

int cmd_certify(const Options& o) {
    Matrix a = matrix_from_json(read_json(o.input));
    const Mode mode = parse_mode(o.mode).value_or(a.mode());
    a = a.to_mode(mode);
    const Tolerance tol = resolve_tolerance(mode, o.tol);
    const MatrixKind kind = o.kind == "metzler" ? MatrixKind::Metzler : MatrixKind::Symmetric;
    try {
        const StabilityVerdict v = certify_with_oracles(a, kind, tol);
        emit_json(to_json(v), o.out);
        return v.hurwitz ? kExitOk : kExitNotHurwitz;
    } catch (const OracleDisagreementError& e) {
        StabilityVerdict partial{e.certificate().verdict == Verdict::Hurwitz, e.certificate(), e.oracles()};
        emit_json(to_json(partial), o.out);
        throw;
    }
}

int cmd_reduce(const Options& o) {
    const Matrix a = matrix_from_json(read_json(o.input));
    const Tolerance tol = resolve_tolerance(a.mode(), o.tol);
    emit_json(to_json(schur_reduce(partition(a), tol)), o.out);
    return kExitOk;
}

int cmd_lift(const Options& o) {
    const Matrix base = matrix_from_json(read_json(o.base));
    const Json params = read_json(o.params);
    const Tolerance tol = resolve_tolerance(base.mode(), o.tol);
    if (o.lift_kind == "symmetric") {
        emit_json(to_json(lift_symmetric_direct(base, direct_lift_params_from_json(params, base.mode()), tol)), o.out);
    } else {
        try {
            emit_json(to_json(lift_metzler(base, metzler_lift_params_from_json(params, base.mode()), tol)), o.out);
        } catch (const ConditionViolatedError& e) {
            LiftConditionReport report{false, e.violations()};
            std::cerr << canonical_dump(to_json(report)) << "\n";
            throw;
        }
    }
    return kExitOk;
}

int cmd_chart(const Options& o) {
    const Json in = read_json(o.input);
    const Tolerance tol = resolve_tolerance(Mode::Float, o.tol);
    if (o.direction == "forward") {
        emit_json(to_json(phi(matrix_from_json(in).to_float(), tol)), o.out);
    } else {
        emit_json(to_json(phi_inverse(chart_point_from_json(in), tol)), o.out);
    }
    return kExitOk;
}

int cmd_sample(const Options& o) {
    BallFamilyConfig cfg = ball_family_config_from_json(read_json(o.config));
    if (o.seed_given) cfg.spec.seed = o.seed;
    cfg.spec.seed = resolve_seed(cfg.spec.seed);
    if (o.tol) cfg.tol = resolve_tolerance(Mode::Float, o.tol);
    emit_json(to_json(sample_ball_family(cfg.spec, cfg.bounds, cfg.tol)), o.out);
    return kExitOk;
}

int cmd_equilibrium(const Options& o) {
    const PositiveLinearSystem sys = system_from_json(read_json(o.system));
    const Tolerance tol = resolve_tolerance(sys.a.mode(), o.tol);
    emit_json(to_json(equilibrium(sys, tol)), o.out);
    return kExitOk;
}

int cmd_simulate(const Options& o) {
    const PositiveLinearSystem sys = system_from_json(read_json(o.system));
    const Vector x0 = vector_from_json(read_json(o.x0), sys.a.mode());
    std::vector<double> start;
    for (const auto& s : x0) start.push_back(s.to_double());
    emit(trajectory_csv(simulate(sys, start, o.dt, o.steps)), o.out);
    return kExitOk;
}

int cmd_insulin_demo(const Options& o) {
    const std::string data = o.data.empty() ? std::string(insulin_a7_json()) : read_text(o.data);
    InsulinDemoOptions opts;
    opts.family_count = o.family_count;
    opts.seed = resolve_seed(o.seed);
    const InsulinDemoReport report = run_insulin_demo(data, opts);

    std::ostringstream out;
    for (const auto& s : report.stages) {
        const char* status = s.status == DemoStage::Status::Pass   ? "PASS"
                             : s.status == DemoStage::Status::Fail ? "FAIL"
                                                                   : "SKIPPED";
        out << "stage " << s.index << " " << s.name << ": " << status;
        if (s.index == 1 && s.status == DemoStage::Status::Pass) out << " B6(6,6) = " << (*report.b6)(5, 5).to_string();
        if (s.index == 3 && report.family) {
            const auto it = report.family->rejected.find(RejectReason::ConditionViolated);
            out << " members=" << report.family->accepted << " stability_failures=" << report.family->lift_failures
                << " condition_rejections=" << (it == report.family->rejected.end() ? 0 : it->second);
        }
        if (!s.detail.empty()) out << " (" << s.detail << ")";
        out << "\n";
    }
    if (report.equilibrium) {
        out << "equilibrium x_bar (b = e2):";
        for (const auto& x : report.equilibrium->x_bar) out << " " << x.to_string();
        out << "\nequilibrium x_bar (float):";
        for (double x : report.equilibrium_float) out << " " << format_double(x);
        out << "\nstrictly_positive: " << (report.equilibrium->strictly_positive ? "true" : "false") << "\n";
    }
    emit(out.str(), o.out);
    if (const DemoStage* f = report.failure()) {
        std::cerr << "insulin-demo failed at stage " << f->index << " (" << f->name << "): " << f->detail << "\n";
        return kExitInconclusive;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz stability certification for symmetric and Metzler matrices"};
    app.require_subcommand(1);
    Options o;

    auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "Float-mode tolerance eps"); };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write output to FILE instead of stdout"); };

    auto* certify_cmd = app.add_subcommand("certify", "Certify Hurwitz stability with a pivot chain and oracles");
    certify_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"symmetric", "metzler"}))->required();
    certify_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "float"}));
    certify_cmd->add_option("--input", o.input)->required();
    add_tol(certify_cmd);
    add_out(certify_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Schur complement around the last row/column");
    reduce_cmd->add_option("--input", o.input)->required();
    add_tol(reduce_cmd);
    add_out(reduce_cmd);

    auto* lift_cmd = app.add_subcommand("lift", "Lift an (n-1) x (n-1) base to an n x n matrix");
    lift_cmd->add_option("kind", o.lift_kind)->check(CLI::IsMember({"symmetric", "metzler"}))->required();
    lift_cmd->add_option("--base", o.base)->required();
    lift_cmd->add_option("--params", o.params)->required();
    add_tol(lift_cmd);
    add_out(lift_cmd);

    auto* chart_cmd = app.add_subcommand("chart", "Product-manifold chart of a Hurwitz symmetric matrix");
    chart_cmd->add_option("direction", o.direction)->check(CLI::IsMember({"forward", "inverse"}))->required();
    chart_cmd->add_option("--input", o.input, "Input file, or - for stdin")->required();
    add_tol(chart_cmd);
    add_out(chart_cmd);

    auto* sample_cmd = app.add_subcommand("sample", "Sample a Frobenius-ball family and lift it");
    sample_cmd->add_option("--config", o.config)->required();
    sample_cmd->add_option("--seed", o.seed)->each([&](const std::string&) { o.seed_given = true; });
    add_tol(sample_cmd);
    add_out(sample_cmd);

    auto* eq_cmd = app.add_subcommand("equilibrium", "Equilibrium -A^{-1} b of a positive linear system");
    eq_cmd->add_option("--system", o.system)->required();
    add_tol(eq_cmd);
    add_out(eq_cmd);

    auto* sim_cmd = app.add_subcommand("simulate", "RK4 trajectory of x' = A x + b as CSV");
    sim_cmd->add_option("--system", o.system)->required();
    sim_cmd->add_option("--x0", o.x0)->required();
    sim_cmd->add_option("--dt", o.dt)->required();
    sim_cmd->add_option("--steps", o.steps)->required();
    add_out(sim_cmd);

    auto* demo_cmd = app.add_subcommand("insulin-demo", "End-to-end insulin subsystem analysis");
    demo_cmd->add_option("--family-count", o.family_count);
    demo_cmd->add_option("--seed", o.seed);
    demo_cmd->add_option("--data", o.data, "Replace the bundled A7 data file");
    add_out(demo_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (certify_cmd->parsed()) return cmd_certify(o);
        if (reduce_cmd->parsed()) return cmd_reduce(o);
        if (lift_cmd->parsed()) return cmd_lift(o);
        if (chart_cmd->parsed()) return cmd_chart(o);
        if (sample_cmd->parsed()) return cmd_sample(o);
        if (eq_cmd->parsed()) return cmd_equilibrium(o);
        if (sim_cmd->parsed()) return cmd_simulate(o);
        if (demo_cmd->parsed()) return cmd_insulin_demo(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
