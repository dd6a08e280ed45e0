#pragma once

#include <string>

#include <json.hpp>

#include "hurwitz/bundle_maps.hpp"
#include "hurwitz/certify.hpp"
#include "hurwitz/lift_family.hpp"
#include "hurwitz/positive_systems.hpp"

namespace hurwitz {

using Json = nlohmann::json;

/// Compact JSON with sorted keys and floats printed to 17 significant digits.
/// Identical values always serialize to identical bytes.
std::string canonical_dump(const Json& j);

Json to_json(const Scalar& s);
/// Exact: string "p/q" / "p" or JSON integer. Float: JSON number.
Scalar scalar_from_json(const Json& j, Mode mode);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, Mode mode);

/// {"entries": [[...]], "mode": "exact"|"float", "n": int}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"failure_stage": int|null, "kind": ..., "oracles": {...}, "pivots": [...], "verdict": ...}
Json to_json(const StabilityVerdict& v);
Json to_json(const Certificate& c);

/// {"base": <Matrix>, "k": [numbers]}
Json to_json(const ChartPoint& p);
ChartPoint chart_point_from_json(const Json& j);

/// {"d": "p/q"|number, "k_row": [...]}
Json to_json(const DirectLiftParams& p);
DirectLiftParams direct_lift_params_from_json(const Json& j, Mode mode);

/// {"h": [...], "k": [...], "d": "p/q"|number} or {..., "k_n": number}
MetzlerLiftParams metzler_lift_params_from_json(const Json& j, Mode mode);

Json to_json(const LiftConditionReport& r);
Json to_json(const FamilyReport& r);

struct BallFamilyConfig {
    BallFamilySpec spec;
    LiftBounds bounds;
    Tolerance tol = Tolerance::floating();
};

/// {"center": <Matrix>} or {"n": int} for a zero center of that size, plus
/// "radius", "count", optional "lift_k": [lo, hi], "tol", "seed".
BallFamilyConfig ball_family_config_from_json(const Json& j);

/// {"A": <Matrix>, "b": [...]}
PositiveLinearSystem system_from_json(const Json& j);
Json to_json(const PositiveLinearSystem& sys);

/// {"residual": number, "strictly_positive": bool, "x_bar": [...]}
Json to_json(const Equilibrium& eq);

/// Header "t,x1,...,xn", one row per sample.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace hurwitz
