#include "hurwitz/certify.hpp"

#include <utility>

namespace hurwitz {

std::string_view to_string(MatrixKind kind) {
    return kind == MatrixKind::Symmetric ? "symmetric" : "metzler";
}

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Hurwitz ? "hurwitz" : "not_hurwitz";
}

namespace {

std::string describe(const OracleVerdicts& oracles) {
    std::string s;
    for (const auto& [name, ok] : oracles) {
        if (!s.empty()) s += ", ";
        s += name + "=" + (ok ? "true" : "false");
    }
    return s;
}

Certificate run_chain(const Matrix& a, MatrixKind kind, Tolerance tol) {
    Certificate cert;
    cert.kind = kind;
    Matrix current = a;
    for (;;) {
        const std::size_t n = current.size();
        const Scalar& pivot = current(n - 1, n - 1);
        const int s = pivot.sign(tol);
        cert.pivots.push_back(pivot);
        if (s == 0 && current.mode() == Mode::Float) {
            throw Error(ErrorCode::TolDisagreement,
                        "pivot " + pivot.to_string() + " at stage " + std::to_string(cert.pivots.size()) +
                            " is within eps of zero");
        }
        if (s >= 0) {
            cert.verdict = Verdict::NotHurwitz;
            cert.failure_stage = cert.pivots.size();
            return cert;
        }
        if (n == 1) {
            cert.verdict = Verdict::Hurwitz;
            return cert;
        }
        current = schur_reduce(partition(current), tol);
    }
}

StabilityVerdict to_verdict(Certificate cert) {
    StabilityVerdict v;
    v.hurwitz = cert.verdict == Verdict::Hurwitz;
    v.certificate = std::move(cert);
    return v;
}

Scalar bareiss_determinant(const Matrix& a, Tolerance tol) {
    const std::size_t n = a.size();
    const Mode mode = a.mode();
    std::vector<Vector> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = a.row(i);

    bool negate = false;
    Scalar prev = Scalar::one(mode);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w[r][col].abs() > w[best][col].abs()) best = r;
        }
        if (w[best][col].sign(tol) == 0) return Scalar::zero(mode);
        if (best != col) {
            std::swap(w[best], w[col]);
            negate = !negate;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                w[i][j] = (w[i][j] * w[col][col] - w[i][col] * w[col][j]) / prev;
            }
            w[i][col] = Scalar::zero(mode);
        }
        prev = w[col][col];
    }
    return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

}  // namespace

OracleDisagreementError::OracleDisagreementError(Certificate cert, OracleVerdicts oracles)
    : Error(ErrorCode::OracleDisagreement,
            "certificate says " + std::string(to_string(cert.verdict)) + " but oracles report " +
                describe(oracles)),
      cert_(std::move(cert)),
      oracles_(std::move(oracles)) {}

StabilityVerdict certify_symmetric(const Matrix& a, Tolerance tol) {
    require_tolerance(a.mode(), tol);
    if (!is_symmetric(a, tol)) throw Error(ErrorCode::NotSymmetric, "input matrix is not symmetric");
    return to_verdict(run_chain(a, MatrixKind::Symmetric, tol));
}

StabilityVerdict certify_metzler(const Matrix& a, Tolerance tol) {
    require_tolerance(a.mode(), tol);
    if (!is_metzler(a, tol)) throw Error(ErrorCode::NotMetzler, "input matrix has a negative off-diagonal entry");
    return to_verdict(run_chain(a, MatrixKind::Metzler, tol));
}

StabilityVerdict certify(const Matrix& a, MatrixKind kind, Tolerance tol) {
    return kind == MatrixKind::Symmetric ? certify_symmetric(a, tol) : certify_metzler(a, tol);
}

bool replay_certificate(const Matrix& a, const Certificate& cert, Tolerance tol) {
    if (cert.pivots.empty() || cert.pivots.size() > a.size()) return false;
    Matrix current = a;
    for (std::size_t stage = 0; stage < cert.pivots.size(); ++stage) {
        const std::size_t n = current.size();
        const Scalar& recorded = cert.pivots[stage];
        if (recorded.mode() != current.mode()) return false;
        if ((current(n - 1, n - 1) - recorded).sign(tol) != 0) return false;
        const bool last = stage + 1 == cert.pivots.size();
        if (last) break;
        if (recorded.sign(tol) >= 0 || n == 1) return false;
        current = schur_reduce(partition(current), tol);
    }
    const bool all_negative = [&] {
        for (const auto& p : cert.pivots)
            if (p.sign(tol) >= 0) return false;
        return true;
    }();
    if (cert.verdict == Verdict::Hurwitz) {
        return all_negative && cert.pivots.size() == a.size() && !cert.failure_stage;
    }
    return !all_negative && cert.failure_stage == cert.pivots.size();
}

Vector leading_principal_minors(const Matrix& a) {
    // Float-mode minors use an exact zero test here; callers apply eps to the result.
    const Tolerance tol{0.0};
    Vector minors;
    minors.reserve(a.size());
    for (std::size_t k = 1; k <= a.size(); ++k) minors.push_back(bareiss_determinant(a.leading(k), tol));
    return minors;
}

bool oracle_sylvester(const Matrix& a, Tolerance tol) {
    require_tolerance(a.mode(), tol);
    const Vector minors = leading_principal_minors(a);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        // Delta_{k+1} must carry sign (-1)^{k+1}.
        const Scalar signed_minor = (k % 2 == 0) ? -minors[k] : minors[k];
        if (signed_minor.sign(tol) <= 0) return false;
    }
    return true;
}

bool routh_hurwitz_stable(const Vector& poly, Tolerance tol) {
    if (poly.empty()) throw Error(ErrorCode::InvalidInput, "empty polynomial");
    const Mode mode = poly[0].mode();
    const std::size_t degree = poly.size() - 1;
    Vector coeffs = poly;
    if (coeffs[0].sign() < 0) {
        for (auto& c : coeffs) c = -c;
    }
    const std::size_t width = degree / 2 + 1;
    auto row_from = [&](std::size_t offset) {
        Vector r(width, Scalar::zero(mode));
        for (std::size_t j = 0; offset + 2 * j <= degree; ++j) r[j] = coeffs[offset + 2 * j];
        return r;
    };
    Vector upper = row_from(0);
    Vector lower = degree >= 1 ? row_from(1) : Vector{};

    auto check = [&](const Scalar& first, std::size_t row) {
        const int s = first.sign(tol);
        if (s == 0 && mode == Mode::Float) {
            throw Error(ErrorCode::Inconclusive,
                        "Routh first-column entry " + first.to_string() + " in row " + std::to_string(row) +
                            " is within eps of zero");
        }
        return s > 0;
    };

    if (!check(upper[0], 0)) return false;
    for (std::size_t row = 1; row <= degree; ++row) {
        if (!check(lower[0], row)) return false;
        Vector next(width, Scalar::zero(mode));
        for (std::size_t j = 0; j + 1 < width; ++j) {
            next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
        }
        upper = std::move(lower);
        lower = std::move(next);
    }
    return true;
}

bool oracle_routh_hurwitz(const Matrix& a, Tolerance tol) {
    require_tolerance(a.mode(), tol);
    return routh_hurwitz_stable(char_poly(a), tol);
}

bool oracle_mmatrix(const Matrix& a, Tolerance tol) {
    require_tolerance(a.mode(), tol);
    if (!is_metzler(a, tol)) throw Error(ErrorCode::NotMetzler, "M-matrix oracle needs a Metzler input");
    Matrix neg(a.size(), a.mode());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) neg.set(i, j, -a(i, j));
    for (const auto& minor : leading_principal_minors(neg)) {
        if (minor.sign(tol) <= 0) return false;
    }
    return true;
}

StabilityVerdict certify_with_oracles(const Matrix& a, MatrixKind kind, Tolerance tol) {
    StabilityVerdict v = certify(a, kind, tol);
    OracleVerdicts oracles;
    if (kind == MatrixKind::Symmetric) {
        oracles["sylvester"] = oracle_sylvester(a, tol);
    } else {
        oracles["mmatrix"] = oracle_mmatrix(a, tol);
    }
    oracles["routh"] = oracle_routh_hurwitz(a, tol);
    for (const auto& [name, ok] : oracles) {
        if (ok != v.hurwitz) throw OracleDisagreementError(v.certificate, oracles);
    }
    v.oracle_agreement = std::move(oracles);
    return v;
}

}  // namespace hurwitz
