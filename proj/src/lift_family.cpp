#include "hurwitz/lift_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hurwitz/insulin.hpp"

namespace hurwitz {

std::string_view to_string(LiftViolation::Kind kind) {
    switch (kind) {
        case LiftViolation::Kind::NegativeH: return "negative_h";
        case LiftViolation::Kind::NegativeK: return "negative_k";
        case LiftViolation::Kind::NonNegativeCorner: return "nonnegative_corner";
        case LiftViolation::Kind::OffDiagonal: return "off_diagonal";
    }
    return "unknown";
}

std::string_view to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::NotMetzler: return "NotMetzler";
        case RejectReason::NotHurwitz: return "NotHurwitz";
        case RejectReason::ConditionViolated: return "ConditionViolated";
        case RejectReason::NotSymmetric: return "NotSymmetric";
    }
    return "Unknown";
}

namespace {

std::string describe(const std::vector<LiftViolation>& violations) {
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += ", ";
        s += std::string(to_string(v.kind)) + "@" + std::to_string(v.i + 1);
        if (v.kind == LiftViolation::Kind::OffDiagonal) s += "," + std::to_string(v.j + 1);
    }
    return s;
}

}  // namespace

ConditionViolatedError::ConditionViolatedError(std::vector<LiftViolation> violations)
    : Error(ErrorCode::ConditionViolated, "lift conditions fail: " + describe(violations)),
      violations_(std::move(violations)) {}

Scalar corner_value(const Corner& corner, Mode mode) {
    if (const auto* chart = std::get_if<ChartCorner>(&corner)) {
        if (mode == Mode::Exact) {
            throw Error(ErrorCode::ModeMismatch, "a chart corner -e^{k_n} has no exact value");
        }
        return Scalar::real(-std::exp(chart->k_n));
    }
    const Scalar& d = std::get<DirectCorner>(corner).d;
    if (d.mode() != mode) throw Error(ErrorCode::ModeMismatch, "corner mode differs from base mode");
    return d;
}

LiftConditionReport check_metzler_lift_conditions(const Matrix& base, const MetzlerLiftParams& p, Tolerance tol) {
    const std::size_t m = base.size();
    if (p.h.size() != m || p.k.size() != m) {
        throw Error(ErrorCode::InvalidInput, "h and k need " + std::to_string(m) + " entries each");
    }
    require_tolerance(base.mode(), tol);
    LiftConditionReport report;
    auto flag = [&](LiftViolation::Kind kind, std::size_t i, std::size_t j = 0) {
        report.ok = false;
        report.violations.push_back({kind, i, j});
    };
    for (std::size_t i = 0; i < m; ++i) {
        if (p.h[i].sign(tol) < 0) flag(LiftViolation::Kind::NegativeH, i);
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (p.k[i].sign(tol) < 0) flag(LiftViolation::Kind::NegativeK, i);
    }
    const Scalar corner = corner_value(p.corner, base.mode());
    if (corner.sign(tol) >= 0) {
        flag(LiftViolation::Kind::NonNegativeCorner, m);
        return report;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Scalar scaled = p.h[i] / corner;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if ((base(i, j) + scaled * p.k[j]).sign(tol) < 0) flag(LiftViolation::Kind::OffDiagonal, i, j);
        }
    }
    return report;
}

Matrix lift_metzler(const Matrix& base, const MetzlerLiftParams& p, Tolerance tol) {
    require_tolerance(base.mode(), tol);
    if (!is_metzler(base, tol)) throw Error(ErrorCode::NotMetzler, "lift base is not Metzler");
    bool hurwitz = false;
    try {
        hurwitz = certify_metzler(base, tol).hurwitz;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TolDisagreement) throw;
    }
    if (!hurwitz) throw Error(ErrorCode::BaseNotHurwitz, "lift base is not a certified Hurwitz matrix");

    LiftConditionReport report = check_metzler_lift_conditions(base, p, tol);
    if (!report.ok) throw ConditionViolatedError(std::move(report.violations));
    return lift(base, p.h, p.k, corner_value(p.corner, base.mode()));
}

InsulinFamilyParams nominal_insulin_params() {
    return InsulinFamilyParams{Scalar::exact(0), Scalar::exact(91, 200), Scalar::exact(0), Scalar::exact(1, 20),
                               DirectCorner{Scalar::exact(-111, 1000)}};
}

Matrix restricted_insulin_family(const Matrix& b6, const InsulinFamilyParams& params, Tolerance tol) {
    if (b6.size() != 6) throw Error(ErrorCode::InvalidInput, "insulin base must be 6 x 6");
    const Mode mode = std::holds_alternative<ChartCorner>(params.corner) ? Mode::Float : params.h2.mode();
    const Matrix base = b6.to_mode(mode);
    MetzlerLiftParams p{Vector(6, Scalar::zero(mode)), Vector(6, Scalar::zero(mode)), params.corner};
    p.h[1] = params.h2;
    p.h[5] = params.h6;
    p.k[1] = params.k2;
    p.k[5] = params.k6;
    return lift_metzler(base, p, tol);
}

Matrix restricted_insulin_family(const InsulinFamilyParams& params, Tolerance tol) {
    return restricted_insulin_family(insulin_b6(), params, tol);
}

FamilyReport sample_ball_family(const BallFamilySpec& spec, LiftBounds bounds, Tolerance tol) {
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) {
        throw Error(ErrorCode::InvalidInput, "ball radius must be positive");
    }
    if (spec.count < 1) throw Error(ErrorCode::InvalidInput, "ball family needs count >= 1");
    if (!(bounds.lo <= bounds.hi) || !std::isfinite(bounds.lo) || !std::isfinite(bounds.hi)) {
        throw Error(ErrorCode::InvalidInput, "lift bounds must satisfy lo <= hi");
    }
    const Matrix center = spec.center.to_float();
    require_tolerance(Mode::Float, tol);
    if (!is_symmetric(center, tol)) throw Error(ErrorCode::NotSymmetric, "ball center must be symmetric");

    const std::size_t m = center.size();
    const std::size_t dim = m * (m + 1) / 2;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    FamilyReport report;
    report.total = spec.count;
    for (std::size_t draw = 0; draw < spec.count; ++draw) {
        std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                          static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> fiber(bounds.lo, bounds.hi);

        // Coordinates y with |y|_2 = Frobenius norm: diagonal as-is, off-diagonal scaled by sqrt(2).
        std::vector<double> y(dim);
        double norm2 = 0.0;
        for (auto& v : y) {
            v = gauss(rng);
            norm2 += v * v;
        }
        const double radius = spec.radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
        const double scale = norm2 > 0.0 ? radius / std::sqrt(norm2) : 0.0;

        Matrix base = center;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                double v = y[idx++] * scale;
                if (i != j) v *= inv_sqrt2;
                base.set(i, j, base(i, j) + Scalar::real(v));
                if (i != j) base.set(j, i, base(j, i) + Scalar::real(v));
            }
        }

        bool base_ok = false;
        try {
            base_ok = certify_symmetric(base, tol).hurwitz;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TolDisagreement) throw;
        }
        if (!base_ok) {
            ++report.rejected[RejectReason::NotHurwitz];
            continue;
        }

        ChartPoint point{base, std::vector<double>(m + 1)};
        for (auto& k : point.k) k = fiber(rng);
        Matrix lifted = phi_inverse(point, tol);
        bool lift_ok = false;
        try {
            lift_ok = certify_symmetric(lifted, tol).hurwitz;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TolDisagreement) throw;
        }
        if (!lift_ok) {
            ++report.rejected[RejectReason::NotHurwitz];
            ++report.lift_failures;
            continue;
        }
        ++report.accepted;
        if (report.witnesses.size() < FamilyReport::kMaxWitnesses) report.witnesses.push_back(std::move(lifted));
    }
    if (report.accepted == 0) {
        throw Error(ErrorCode::EmptyFamily, "no Hurwitz draw among " + std::to_string(spec.count) + " samples");
    }
    return report;
}

}  // namespace hurwitz

namespace hurwitz {

FamilyReport sample_insulin_family(const Matrix& b6, std::size_t count, std::uint64_t seed, Tolerance tol,
                                   const std::function<void(const Matrix&)>& on_member) {
    require_tolerance(Mode::Float, tol);
    const Matrix base = b6.to_float();
    const std::size_t max_attempts = 1000 * std::max<std::size_t>(count, 1);

    FamilyReport report;
    std::size_t members = 0;
    for (std::size_t draw = 0; members < count; ++draw) {
        if (draw >= max_attempts) {
            throw Error(ErrorCode::EmptyFamily, "too few parameter draws satisfy the lift conditions");
        }
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> coupling(0.0, 2.0);
        std::uniform_real_distribution<double> log_corner(-3.0, 1.0);
        InsulinFamilyParams params{Scalar::real(coupling(rng)), Scalar::real(coupling(rng)),
                                   Scalar::real(coupling(rng)), Scalar::real(coupling(rng)),
                                   ChartCorner{log_corner(rng)}};
        ++report.total;
        Matrix member(1, Mode::Float);
        try {
            member = restricted_insulin_family(base, params, tol);
        } catch (const ConditionViolatedError&) {
            ++report.rejected[RejectReason::ConditionViolated];
            continue;
        }
        ++members;
        if (!is_metzler(member, tol)) {
            ++report.rejected[RejectReason::NotMetzler];
            ++report.lift_failures;
            continue;
        }
        bool hurwitz = false;
        try {
            hurwitz = certify_with_oracles(member, MatrixKind::Metzler, tol).hurwitz;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TolDisagreement && e.code() != ErrorCode::Inconclusive &&
                e.code() != ErrorCode::OracleDisagreement) {
                throw;
            }
        }
        if (!hurwitz) {
            ++report.rejected[RejectReason::NotHurwitz];
            ++report.lift_failures;
            continue;
        }
        ++report.accepted;
        if (on_member) on_member(member);
        if (report.witnesses.size() < FamilyReport::kMaxWitnesses) report.witnesses.push_back(std::move(member));
    }
    return report;
}

}  // namespace hurwitz
