#include "hurwitz/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace hurwitz {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::SingularPivot: return "SingularPivot";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotMetzler: return "NotMetzler";
        case ErrorCode::NotHurwitz: return "NotHurwitz";
        case ErrorCode::TolDisagreement: return "TolDisagreement";
        case ErrorCode::Inconclusive: return "Inconclusive";
        case ErrorCode::OracleDisagreement: return "OracleDisagreement";
        case ErrorCode::NonNegativeDiagonal: return "NonNegativeDiagonal";
        case ErrorCode::NonNegativeCorner: return "NonNegativeCorner";
        case ErrorCode::BaseNotHurwitz: return "BaseNotHurwitz";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::EmptyFamily: return "EmptyFamily";
        case ErrorCode::NonPositiveStep: return "NonPositiveStep";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

void require_tolerance(Mode mode, Tolerance tol) {
    if (mode == Mode::Exact && tol.eps != 0.0) {
        throw Error(ErrorCode::InvalidTolerance, "exact mode requires eps = 0");
    }
    if (mode == Mode::Float && !(tol.eps >= 0.0 && std::isfinite(tol.eps))) {
        throw Error(ErrorCode::InvalidTolerance, "float mode requires a finite eps >= 0");
    }
}

std::string format_double(double x) {
    if (x == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Scalar Scalar::exact(const mpq_class& q) {
    mpq_class r(q);
    r.canonicalize();
    return Scalar(std::move(r));
}

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::parse_exact(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorCode::InvalidInput, "malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return Scalar(std::move(r));
}

Scalar Scalar::exact_from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "non-finite value");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Scalar(std::move(q));
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(ErrorCode::ModeMismatch, "rational() on a float scalar");
}

double Scalar::value() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    throw Error(ErrorCode::ModeMismatch, "value() on an exact scalar");
}

double Scalar::to_double() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    return std::get<mpq_class>(value_).get_d();
}

Scalar Scalar::to_mode(Mode mode) const {
    if (mode == this->mode()) return *this;
    return mode == Mode::Float ? to_float() : exact_from_double(value());
}

int Scalar::sign(Tolerance tol) const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
    const double d = std::get<double>(value_);
    if (std::abs(d) <= tol.eps) return 0;
    return d > 0 ? 1 : -1;
}

Scalar Scalar::abs() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(::abs(*q)));
    return Scalar(std::abs(std::get<double>(value_)));
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
    return format_double(std::get<double>(value_));
}

void Scalar::require_same_mode(const Scalar& other) const {
    if (value_.index() != other.value_.index()) {
        throw Error(ErrorCode::ModeMismatch, "mixed exact/float arithmetic");
    }
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_mode(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) += std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_mode(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) -= std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_mode(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) *= std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_mode(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        const auto& d = std::get<mpq_class>(rhs.value_);
        if (d == 0) throw Error(ErrorCode::SingularPivot, "division by exact zero");
        *q /= d;
    } else {
        std::get<double>(value_) /= std::get<double>(rhs.value_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_mode(b);
    if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    return std::get<double>(a.value_) == std::get<double>(b.value_);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.require_same_mode(b);
    if (a.is_exact()) {
        const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
        return c < 0 ? std::partial_ordering::less
             : c > 0 ? std::partial_ordering::greater
                     : std::partial_ordering::equivalent;
    }
    return std::get<double>(a.value_) <=> std::get<double>(b.value_);
}

}  // namespace hurwitz
