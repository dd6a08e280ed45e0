// Acceptance gate. `hurwitz_kit_acceptance [AC1 ... AC10 | all]` prints one
// PASS/FAIL line per criterion and exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/insulin.hpp"
#include "hurwitz/insulin_demo.hpp"
#include "hurwitz/json_io.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

const std::string kCli = HURWITZ_KIT_CLI;
const std::string kA7 = HURWITZ_KIT_SOURCE_DIR "/data/insulin_a7.json";

const Tolerance kExact = Tolerance::exact();
const Tolerance kFloat = Tolerance::floating();  // eps = 1e-9

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. reduce on bundled A7 reproduces B6 bit-exactly.
Outcome insulin_reduction() {
    const RunResult r = run_cli(kCli, "reduce --input '" + kA7 + "'");
    if (r.exit_code != 0) return {false, "reduce exited " + std::to_string(r.exit_code) + ": " + r.err};
    const Matrix b6 = matrix_from_json(Json::parse(r.out));
    const Matrix& a7 = insulin_a7();
    if (b6.size() != 6 || b6.mode() != Mode::Exact) return {false, "B6 is not a 6 x 6 exact matrix"};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const Scalar expected = (i == 5 && j == 5) ? Scalar::exact(-23158, 13875) : a7(i, j);
            if (b6(i, j) != expected) {
                return {false, "B6(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                                   b6(i, j).to_string()};
            }
        }
    return {true, "B6(6,6) = " + b6(5, 5).to_string() + ", other 35 entries equal A6"};
}

// 2. certify --kind metzler --mode exact on A7.
Outcome insulin_certification() {
    const RunResult r = run_cli(kCli, "certify --kind metzler --mode exact --input '" + kA7 + "'");
    if (r.exit_code != 0) return {false, "certify exited " + std::to_string(r.exit_code)};
    const Json j = Json::parse(r.out);
    const auto& pivots = j.at("pivots");
    if (pivots.size() != 7) return {false, std::to_string(pivots.size()) + " pivots"};
    for (const auto& p : pivots) {
        if (Scalar::parse_exact(p.get<std::string>()).sign() >= 0) return {false, "pivot " + p.dump() + " is not negative"};
    }
    if (pivots[0] != "-111/1000") return {false, "first pivot " + pivots[0].dump()};
    if (j.at("oracles") != Json{{"mmatrix", true}, {"routh", true}}) return {false, "oracles " + j.at("oracles").dump()};
    return {true, "exit 0, 7 negative pivots, first -111/1000, mmatrix and routh agree"};
}

// 3. Nominal lift reproduces A7 byte-for-byte.
Outcome nominal_recovery() {
    Vector h(6, Scalar::exact(0)), k(6, Scalar::exact(0));
    h[5] = Scalar::exact(91, 200);
    k[5] = Scalar::exact(1, 20);
    const Matrix lifted = lift_metzler(insulin_b6(), {h, k, DirectCorner{Scalar::exact(-111, 1000)}}, kExact);
    const std::string got = canonical_dump(to_json(lifted));
    const std::string want = canonical_dump(to_json(matrix_from_json(Json::parse(insulin_a7_json()))));
    if (got != want) return {false, "canonical JSON differs"};
    return {true, std::to_string(got.size()) + " identical bytes"};
}

// 4. Recursive certifier vs oracles on random instances.
struct OracleTally {
    std::size_t checked = 0, skipped = 0, disagreements = 0, hurwitz = 0;
};

void check_instance(const Matrix& a, MatrixKind kind, Tolerance tol, OracleTally& tally) {
    const bool is_float = a.mode() == Mode::Float;
    StabilityVerdict v;
    bool routh = false, other = false;
    try {
        v = certify(a, kind, tol);
        routh = oracle_routh_hurwitz(a, tol);
        other = kind == MatrixKind::Symmetric ? oracle_sylvester(a, tol) : oracle_mmatrix(a, tol);
    } catch (const Error& e) {
        if (is_float && (e.code() == ErrorCode::TolDisagreement || e.code() == ErrorCode::Inconclusive)) {
            ++tally.skipped;
            return;
        }
        throw;
    }
    if (is_float) {
        // Margin filter: every pivot and every minor the oracle inspects is away from zero.
        Matrix probe = a;
        if (kind == MatrixKind::Metzler) {
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j) probe.set(i, j, -a(i, j));
        }
        bool marginal = false;
        for (const auto& p : v.certificate.pivots) marginal |= std::abs(p.value()) <= 1e-6;
        for (const auto& m : leading_principal_minors(probe)) marginal |= std::abs(m.value()) <= 1e-6;
        if (marginal) {
            ++tally.skipped;
            return;
        }
    }
    ++tally.checked;
    tally.hurwitz += v.hurwitz;
    if (routh != v.hurwitz || other != v.hurwitz) ++tally.disagreements;
}

Outcome oracle_equivalence() {
    OracleTally tally;
    for (Mode mode : {Mode::Float, Mode::Exact}) {
        const Tolerance tol = Tolerance::for_mode(mode);
        for (std::size_t n = 2; n <= 7; ++n) {
            std::mt19937_64 rng(1000 * n + (mode == Mode::Exact));
            for (int i = 0; i < 1000; ++i) check_instance(random_symmetric_instance(n, rng, mode), MatrixKind::Symmetric, tol, tally);
            for (int i = 0; i < 1000; ++i) check_instance(random_metzler_instance(n, rng, mode), MatrixKind::Metzler, tol, tally);
        }
    }
    return {tally.disagreements == 0 && tally.checked > 0,
            std::to_string(tally.checked) + " checked (" + std::to_string(tally.hurwitz) + " Hurwitz), " +
                std::to_string(tally.skipped) + " marginal skipped, " + std::to_string(tally.disagreements) +
                " disagreements"};
}

// 5. Chart roundtrip and re-certification.
Outcome chart_roundtrip() {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> fiber(-10.0, 10.0);
    std::size_t failures = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const Matrix a = random_hurwitz_symmetric(n, seed, kFloat);
        const ChartPoint p = phi(a, kFloat);
        if (!certify_symmetric(p.base, kFloat).hurwitz) ++failures;
        const Matrix back = phi_inverse(p, kFloat);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double y = a(i, j).value();
                worst = std::max(worst, std::abs(back(i, j).value() - y) / std::max(1.0, std::abs(y)));
            }
        ChartPoint q{p.base, std::vector<double>(n)};
        for (auto& k : q.k) k = fiber(rng);
        if (!certify_symmetric(phi_inverse(q, kFloat), kFloat).hurwitz) ++failures;
    }
    const bool pass = failures == 0 && worst <= 1e-9;
    return {pass, "500 matrices, worst relative roundtrip error " + fmt(worst) + " (limit 1e-09), " +
                      std::to_string(failures) + " certification failures"};
}

// 6. Metzler lifts over random bases, exact mode.
Outcome family_soundness() {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> num(0, 32);
    std::uniform_int_distribution<int> corner(1, 64);
    std::size_t lifted = 0, draws = 0, failures = 0, not_sections = 0;
    while (lifted < 1000) {
        ++draws;
        const std::size_t m = 2 + draws % 5;
        const Matrix base = random_metzler_hurwitz(m, rng, Mode::Exact);
        MetzlerLiftParams p{Vector(m, Scalar::exact(0)), Vector(m, Scalar::exact(0)),
                            DirectCorner{Scalar::exact(-corner(rng), 16)}};
        for (std::size_t i = 0; i < m; ++i) {
            p.h[i] = Scalar::exact(num(rng), 64);
            p.k[i] = Scalar::exact(num(rng), 64);
        }
        if (!check_metzler_lift_conditions(base, p, kExact).ok) continue;
        ++lifted;
        const Matrix a = lift_metzler(base, p, kExact);
        try {
            if (!certify_with_oracles(a, MatrixKind::Metzler, kExact).hurwitz) ++failures;
        } catch (const Error&) {
            ++failures;
        }
        if (!(schur_reduce(partition(a), kExact) == base)) ++not_sections;
    }
    return {failures == 0 && not_sections == 0,
            "1000 lifts from " + std::to_string(draws) + " draws, " + std::to_string(failures) +
                " certification failures, " + std::to_string(not_sections) + " inexact reductions"};
}

// 7. Restricted insulin family.
Outcome insulin_family() {
    std::size_t metzler = 0, spectral = 0;
    const FamilyReport r = sample_insulin_family(insulin_b6(), 500, 7, kFloat, [&](const Matrix& m) {
        metzler += is_metzler(m, kFloat);
        spectral += spectral_abscissa(m) < 0.0;
    });
    const bool pass = r.accepted == 500 && r.lift_failures == 0 && metzler == 500 && spectral == 500;
    return {pass, std::to_string(r.accepted) + "/500 certified Metzler Hurwitz (" + std::to_string(spectral) +
                      " with negative spectral abscissa), " + std::to_string(r.total - 500) +
                      " draws rejected by the lift conditions"};
}

// 8. Equilibria.
Outcome equilibria() {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> input(0.0, 1.0);
    double worst_residual = 0.0;
    std::size_t negative = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const Matrix a = random_metzler_hurwitz(n, rng, Mode::Float);
        Vector b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(Scalar::real(input(rng)));
        const Equilibrium eq = equilibrium({a, b}, kFloat);
        worst_residual = std::max(worst_residual, eq.residual);
        for (const auto& x : eq.x_bar) negative += x.value() < 0.0;
    }
    const InsulinDemoReport demo = run_insulin_demo(insulin_a7_json(), {0, 0});
    double insulin_gap = INFINITY;
    if (demo.ok() && demo.equilibrium) {
        insulin_gap = 0.0;
        for (std::size_t i = 0; i < 7; ++i) {
            insulin_gap =
                std::max(insulin_gap, std::abs(demo.equilibrium_float[i] - demo.equilibrium->x_bar[i].to_double()));
        }
    }
    const bool pass = worst_residual <= 1e-10 && negative == 0 && insulin_gap <= 1e-12;
    return {pass, "worst residual " + fmt(worst_residual) + " (limit 1e-10), " + std::to_string(negative) +
                      " negative components, insulin float vs exact " + fmt(insulin_gap) + " (limit 1e-12)"};
}

// 9. Simulation convergence.
Outcome simulation_convergence() {
    const PositiveLinearSystem sys{insulin_a7().to_float(), default_insulin_input(Mode::Float)};
    const Vector x_bar = equilibrium({insulin_a7(), default_insulin_input(Mode::Exact)}, kExact).x_bar;
    const Trajectory traj = simulate(sys, std::vector<double>(7, 0.0), 0.01, 10000);
    double gap = 0.0;
    for (std::size_t i = 0; i < 7; ++i) gap = std::max(gap, std::abs(traj.states.back()[i] - x_bar[i].to_double()));

    const Trajectory scalar = simulate({Matrix::from_doubles({{-1.0}}), {Scalar::real(1.0)}}, {0.0}, 0.001, 10000);
    double scalar_err = 0.0;
    for (std::size_t s = 0; s < scalar.t.size(); ++s) {
        scalar_err = std::max(scalar_err, std::abs(scalar.states[s][0] - (1.0 - std::exp(-scalar.t[s]))));
    }
    const bool pass = gap <= 1e-6 && scalar_err <= 1e-8;
    return {pass, "insulin |x(100) - x_bar| = " + fmt(gap) + " (limit 1e-06, slowest mode " +
                      fmt(spectral_abscissa(insulin_a7())) + "), scalar closed-form error " + fmt(scalar_err) +
                      " (limit 1e-08)"};
}

// 10. Seeded commands are byte-identical across runs.
Outcome reproducibility() {
    const ScratchDir tmp;
    tmp.file("ball.json", R"({"n":3,"radius":1.5,"count":200,"lift_k":[-3,3]})");
    tmp.file("centered.json",
             R"({"center":{"n":3,"mode":"float","entries":[[-5,0,0],[0,-5,0],[0,0,-5]]},"radius":0.1,"count":100})");
    tmp.file("sys.json", canonical_dump(Json{{"A", to_json(insulin_a7())}, {"b", to_json(default_insulin_input(Mode::Exact))}}));
    tmp.file("x0.json", "[0,0,0,0,0,0,0]");
    const std::string dir = "'" + (tmp / "").string();
    const std::vector<std::string> commands = {
        "sample --config " + dir + "ball.json' --seed 11",
        "sample --config " + dir + "centered.json' --seed 12",
        "insulin-demo --family-count 100 --seed 13",
        "certify --kind metzler --mode float --input '" + kA7 + "'",
        "reduce --input '" + kA7 + "'",
        "equilibrium --system " + dir + "sys.json'",
        "simulate --system " + dir + "sys.json' --x0 " + dir + "x0.json' --dt 0.01 --steps 500",
    };
    std::size_t mismatches = 0;
    for (const auto& c : commands) {
        const RunResult a = run_cli(kCli, c), b = run_cli(kCli, c);
        if (a.exit_code != 0 || a.out.empty() || a.out != b.out || a.exit_code != b.exit_code) {
            ++mismatches;
            std::cerr << "  not reproducible or failing: " << c << " (exit " << a.exit_code << ")\n";
        }
    }
    const RunResult env_a = run_cli(kCli, "sample --config " + dir + "ball.json' --seed 1", "HURWITZ_KIT_SEED=11");
    if (env_a.out != run_cli(kCli, commands[0]).out) ++mismatches;
    return {mismatches == 0, std::to_string(commands.size() + 1) + " seeded commands, " + std::to_string(mismatches) +
                                 " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {"AC1", "insulin reduction", 1.0, insulin_reduction},
        {"AC2", "insulin certification", 1.0, insulin_certification},
        {"AC3", "nominal recovery", 1.0, nominal_recovery},
        {"AC4", "oracle equivalence", 30.0, oracle_equivalence},
        {"AC5", "chart roundtrip", 10.0, chart_roundtrip},
        {"AC6", "Metzler family soundness", 20.0, family_soundness},
        {"AC7", "restricted insulin family", 10.0, insulin_family},
        {"AC8", "equilibrium", 5.0, equilibria},
        {"AC9", "simulation convergence", 5.0, simulation_convergence},
        {"AC10", "reproducibility", 10.0, reproducibility},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    const bool all = wanted.empty() || (wanted.size() == 1 && wanted[0] == "all");

    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!all && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.limit_seconds;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::cout << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail << " ["
                  << fmt(elapsed) << " s, limit " << fmt(c.limit_seconds) << " s" << (in_time ? "" : ", TOO SLOW")
                  << "]" << std::endl;
    }
    if (ran == 0) {
        std::cerr << "no criterion matched\n";
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
