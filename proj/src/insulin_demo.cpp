#include "hurwitz/insulin_demo.hpp"

#include <cmath>

#include "hurwitz/json_io.hpp"

namespace hurwitz {

bool InsulinDemoReport::ok() const { return failure() == nullptr; }

const DemoStage* InsulinDemoReport::failure() const {
    for (const auto& s : stages) {
        if (s.status == DemoStage::Status::Fail) return &s;
    }
    return nullptr;
}

namespace {

const Scalar kExpectedCorner = Scalar::exact(-23158, 13875);

std::string stage_reduce(InsulinDemoReport& report, std::string_view a7_json, Matrix& a7) {
    a7 = matrix_from_json(Json::parse(a7_json));
    if (a7.size() != 7 || a7.mode() != Mode::Exact) return "A7 must be a 7 x 7 exact matrix";
    Matrix b6 = schur_reduce(partition(a7), Tolerance::exact());
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == 5 && j == 5) continue;
            if (b6(i, j) != a7(i, j)) {
                return "B6(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs from A6";
            }
        }
    }
    if (b6(5, 5) != kExpectedCorner) {
        return "B6(6,6) = " + b6(5, 5).to_string() + ", expected " + kExpectedCorner.to_string();
    }
    report.b6 = std::move(b6);
    return {};
}

std::string stage_nominal(const InsulinDemoReport& report, const Matrix& a7) {
    const Matrix rebuilt = restricted_insulin_family(*report.b6, nominal_insulin_params(), Tolerance::exact());
    if (canonical_dump(to_json(rebuilt)) != canonical_dump(to_json(a7))) return "nominal lift differs from A7";
    return {};
}

std::string stage_family(InsulinDemoReport& report, const InsulinDemoOptions& options) {
    const Tolerance tol = Tolerance::floating();
    std::size_t negative_equilibria = 0;
    const Vector b = default_insulin_input(Mode::Float);
    report.family = sample_insulin_family(*report.b6, options.family_count, options.seed, tol,
                                          [&](const Matrix& member) {
                                              try {
                                                  equilibrium(PositiveLinearSystem{member, b}, tol);
                                              } catch (const Error&) {
                                                  ++negative_equilibria;
                                              }
                                          });
    if (report.family->lift_failures != 0) {
        return std::to_string(report.family->lift_failures) + " family members failed certification";
    }
    if (negative_equilibria != 0) {
        return std::to_string(negative_equilibria) + " family members lack a nonnegative equilibrium";
    }
    return {};
}

std::string stage_equilibrium(InsulinDemoReport& report, const Matrix& a7) {
    const StabilityVerdict v = certify_with_oracles(a7, MatrixKind::Metzler, Tolerance::exact());
    if (!v.hurwitz) return "A7 does not certify as Metzler Hurwitz";
    report.equilibrium = equilibrium(PositiveLinearSystem{a7, default_insulin_input(Mode::Exact)}, Tolerance::exact());
    const Equilibrium approx =
        equilibrium(PositiveLinearSystem{a7.to_float(), default_insulin_input(Mode::Float)}, Tolerance::floating());
    double worst = 0.0;
    report.equilibrium_float.clear();
    for (std::size_t i = 0; i < approx.x_bar.size(); ++i) {
        const double x = approx.x_bar[i].value();
        report.equilibrium_float.push_back(x);
        worst = std::max(worst, std::abs(x - report.equilibrium->x_bar[i].to_double()));
    }
    if (worst > 1e-12) return "float equilibrium deviates from exact by " + format_double(worst);
    return {};
}

}  // namespace

InsulinDemoReport run_insulin_demo(std::string_view a7_json, const InsulinDemoOptions& options) {
    InsulinDemoReport report;
    Matrix a7(1, Mode::Exact);

    auto run = [&](int index, const char* name, auto&& body) {
        DemoStage stage{index, name, DemoStage::Status::Pass, {}};
        try {
            stage.detail = body();
            if (!stage.detail.empty()) stage.status = DemoStage::Status::Fail;
        } catch (const std::exception& e) {
            stage.status = DemoStage::Status::Fail;
            stage.detail = e.what();
        }
        report.stages.push_back(stage);
        return stage.status != DemoStage::Status::Fail;
    };

    if (!run(1, "reduce", [&] { return stage_reduce(report, a7_json, a7); })) return report;
    if (!run(2, "nominal-recovery", [&] { return stage_nominal(report, a7); })) return report;
    if (options.family_count == 0) {
        report.stages.push_back({3, "family", DemoStage::Status::Skipped, "family-count is 0"});
    } else if (!run(3, "family", [&] { return stage_family(report, options); })) {
        return report;
    }
    run(4, "equilibrium", [&] { return stage_equilibrium(report, a7); });
    return report;
}

}  // namespace hurwitz
