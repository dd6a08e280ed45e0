#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/bundle_maps.hpp"

namespace hurwitz {

/// Corner written in chart form, value -e^{k_n}. Float mode only.
struct ChartCorner {
    double k_n = 0.0;
};

/// Corner given directly; must be negative.
struct DirectCorner {
    Scalar d;
};

using Corner = std::variant<ChartCorner, DirectCorner>;

/// Corner as a scalar in `mode` (ChartCorner forces Float).
Scalar corner_value(const Corner& corner, Mode mode);

/// Border and corner of a Metzler lift: last column h, last row k.
struct MetzlerLiftParams {
    Vector h;
    Vector k;
    Corner corner;
};

struct LiftViolation {
    enum class Kind { NegativeH, NegativeK, NonNegativeCorner, OffDiagonal };
    Kind kind;
    std::size_t i = 0;  // 0-based
    std::size_t j = 0;  // 0-based; only meaningful for OffDiagonal
};

std::string_view to_string(LiftViolation::Kind kind);

struct LiftConditionReport {
    bool ok = true;
    std::vector<LiftViolation> violations;
};

class ConditionViolatedError : public Error {
public:
    explicit ConditionViolatedError(std::vector<LiftViolation> violations);
    const std::vector<LiftViolation>& violations() const { return violations_; }

private:
    std::vector<LiftViolation> violations_;
};

/// h >= 0, k >= 0, corner < 0 and b_ij + h_i k_j / corner >= -eps for i != j.
LiftConditionReport check_metzler_lift_conditions(const Matrix& base, const MetzlerLiftParams& p, Tolerance tol);

/// The n x n member of the fiber over a Metzler Hurwitz base selected by p.
/// Throws NotMetzler, BaseNotHurwitz or ConditionViolatedError.
Matrix lift_metzler(const Matrix& base, const MetzlerLiftParams& p, Tolerance tol);

/// Free parameters of the insulin fiber with the zero pattern
/// k1 = k3 = k4 = k5 = 0, h1 = h3 = h4 = h5 = 0. All scalars share one mode
/// (Float whenever the corner is a ChartCorner).
struct InsulinFamilyParams {
    Scalar h2, h6, k2, k6;
    Corner corner;
};

/// Nominal parameters that reproduce A7: h2 = k2 = 0, h6 = 91/200, k6 = 1/20, d = -111/1000.
InsulinFamilyParams nominal_insulin_params();

/// 7 x 7 member of the restricted insulin family over B6.
Matrix restricted_insulin_family(const InsulinFamilyParams& params, Tolerance tol);
Matrix restricted_insulin_family(const Matrix& b6, const InsulinFamilyParams& params, Tolerance tol);

struct BallFamilySpec {
    Matrix center;
    double radius = 1.0;
    std::size_t count = 1;
    std::uint64_t seed = 0;
};

/// Uniform bounds for every fiber coordinate k_1..k_n.
struct LiftBounds {
    double lo = -1.0;
    double hi = 1.0;
};

enum class RejectReason { NotMetzler, NotHurwitz, ConditionViolated, NotSymmetric };
std::string_view to_string(RejectReason reason);

struct FamilyReport {
    std::size_t total = 0;
    std::size_t accepted = 0;
    std::map<RejectReason, std::size_t> rejected;
    /// Draws whose base certified but whose lift did not.
    std::size_t lift_failures = 0;
    std::vector<Matrix> witnesses;

    static constexpr std::size_t kMaxWitnesses = 10;
};

/// Symmetric draws from the Frobenius ball around spec.center, kept when
/// Hurwitz and lifted through phi_inverse with uniform k. Draw i uses its own
/// generator seeded by (spec.seed, i). Throws EmptyFamily when nothing is accepted.
FamilyReport sample_ball_family(const BallFamilySpec& spec, LiftBounds bounds, Tolerance tol);

/// Draws insulin-family parameters (h2, h6, k2, k6 uniform on [0, 2], chart
/// corner k7 uniform on [-3, 1]) until `count` of them satisfy the lift
/// conditions, lifts each over `b6` in Float mode and certifies it as Metzler
/// Hurwitz with oracles. Condition failures land in rejected[ConditionViolated]
/// and are not counted toward `count`; `on_member` sees every certified member.
FamilyReport sample_insulin_family(const Matrix& b6, std::size_t count, std::uint64_t seed, Tolerance tol,
                                   const std::function<void(const Matrix&)>& on_member = {});

}  // namespace hurwitz
