#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "hurwitz/matrix.hpp"

namespace hurwitz {

enum class MatrixKind { Symmetric, Metzler };
enum class Verdict { Hurwitz, NotHurwitz };

std::string_view to_string(MatrixKind kind);
std::string_view to_string(Verdict verdict);

/// Pivot chain of the recursive last-row/last-column reduction.
///
/// pivots[0] is a_nn of the input, pivots[1] the corner of the first Schur
/// complement, and so on down to the 1x1 stage. A Hurwitz certificate holds
/// n pivots, all strictly negative. A NotHurwitz certificate stops at the
/// first nonnegative pivot; `failure_stage` is its 1-based position and equals
/// pivots.size().
struct Certificate {
    MatrixKind kind = MatrixKind::Symmetric;
    std::vector<Scalar> pivots;
    Verdict verdict = Verdict::NotHurwitz;
    std::optional<std::size_t> failure_stage;
};

using OracleVerdicts = std::map<std::string, bool>;

struct StabilityVerdict {
    bool hurwitz = false;
    Certificate certificate;
    std::optional<OracleVerdicts> oracle_agreement;
};

/// Raised by certify_with_oracles when any oracle contradicts the pivot chain.
class OracleDisagreementError : public Error {
public:
    OracleDisagreementError(Certificate cert, OracleVerdicts oracles);

    const Certificate& certificate() const { return cert_; }
    const OracleVerdicts& oracles() const { return oracles_; }

private:
    Certificate cert_;
    OracleVerdicts oracles_;
};

StabilityVerdict certify_symmetric(const Matrix& a, Tolerance tol);
StabilityVerdict certify_metzler(const Matrix& a, Tolerance tol);
StabilityVerdict certify(const Matrix& a, MatrixKind kind, Tolerance tol);

/// Re-runs the reduction along `cert` and checks each recorded pivot
/// (exactly in Exact mode, to eps in Float mode).
bool replay_certificate(const Matrix& a, const Certificate& cert, Tolerance tol);

/// Leading principal minors Delta_1..Delta_n, each by its own fraction-free
/// (Bareiss) elimination with row pivoting.
Vector leading_principal_minors(const Matrix& a);

/// Sylvester: symmetric A is negative definite iff (-1)^k Delta_k > 0 for all k.
bool oracle_sylvester(const Matrix& a, Tolerance tol);

/// Routh array over char_poly(A). Throws Inconclusive if a first-column entry
/// lies within eps of zero in Float mode.
bool oracle_routh_hurwitz(const Matrix& a, Tolerance tol);
bool routh_hurwitz_stable(const Vector& poly, Tolerance tol);

/// Metzler A is Hurwitz iff every leading principal minor of -A is positive.
bool oracle_mmatrix(const Matrix& a, Tolerance tol);

/// Pivot-chain certificate plus every applicable oracle. Throws
/// OracleDisagreementError on any mismatch.
StabilityVerdict certify_with_oracles(const Matrix& a, MatrixKind kind, Tolerance tol);

}  // namespace hurwitz
