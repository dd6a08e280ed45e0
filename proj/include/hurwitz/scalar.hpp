#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "hurwitz/errors.hpp"

namespace hurwitz {

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);

/// Absolute threshold for Float-mode sign and equality tests.
///
/// Exact-mode computations carry eps = 0; Float-mode computations carry a
/// nonnegative eps (1e-9 unless the caller says otherwise).
struct Tolerance {
    double eps = 0.0;

    static constexpr double kDefaultFloatEps = 1e-9;

    static constexpr Tolerance exact() { return Tolerance{0.0}; }
    static constexpr Tolerance floating(double eps = kDefaultFloatEps) { return Tolerance{eps}; }
    static constexpr Tolerance for_mode(Mode mode) {
        return mode == Mode::Exact ? exact() : floating();
    }
};

/// Throws InvalidTolerance unless `tol` is legal for `mode`.
void require_tolerance(Mode mode, Tolerance tol);

/// A real number held either as a reduced rational or as a double.
///
/// Arithmetic between an Exact and a Float scalar throws ModeMismatch; use
/// `to_float()` / `Scalar::exact_from_double()` to convert explicitly.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar exact(const mpq_class& q);
    static Scalar exact(long num, long den = 1);
    static Scalar real(double x) { return Scalar(x); }
    static Scalar zero(Mode mode) { return mode == Mode::Exact ? exact(0) : real(0.0); }
    static Scalar one(Mode mode) { return mode == Mode::Exact ? exact(1) : real(1.0); }

    /// Parses "p", "-p", "p/q" into a reduced Exact scalar.
    static Scalar parse_exact(std::string_view text);

    /// The exact binary value of a finite double as a rational.
    static Scalar exact_from_double(double x);

    Mode mode() const { return std::holds_alternative<mpq_class>(value_) ? Mode::Exact : Mode::Float; }
    bool is_exact() const { return mode() == Mode::Exact; }

    const mpq_class& rational() const;
    double value() const;
    double to_double() const;

    Scalar to_float() const { return Scalar(to_double()); }
    Scalar to_mode(Mode mode) const;

    /// -1, 0 or +1; Float values within eps of zero report 0.
    int sign(Tolerance tol = {}) const;
    Scalar abs() const;

    /// "p/q" or "p" for Exact; 17 significant digits for Float.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Same-mode exact comparison (no tolerance). Throws ModeMismatch across modes.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    explicit Scalar(double x) : value_(x) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}

    void require_same_mode(const Scalar& other) const;

    std::variant<mpq_class, double> value_;
};

/// Formats a double with 17 significant digits (round-trip safe, canonical).
std::string format_double(double x);

}  // namespace hurwitz
