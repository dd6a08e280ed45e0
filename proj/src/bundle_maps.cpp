#include "hurwitz/bundle_maps.hpp"

#include <cmath>
#include <random>

namespace hurwitz {

namespace {

void require_hurwitz_symmetric_base(const Matrix& base, Tolerance tol) {
    bool ok = false;
    try {
        ok = certify_symmetric(base, tol).hurwitz;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSymmetric && e.code() != ErrorCode::TolDisagreement) throw;
    }
    if (!ok) throw Error(ErrorCode::BaseNotHurwitz, "base is not a certified Hurwitz symmetric matrix");
}

}  // namespace

ChartPoint phi(const Matrix& a, Tolerance tol) {
    if (a.mode() != Mode::Float) {
        throw Error(ErrorCode::ModeMismatch, "the chart map needs float mode for its log coordinate");
    }
    require_tolerance(a.mode(), tol);
    const std::size_t n = a.size();
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "chart map needs n >= 2");
    const double corner = a(n - 1, n - 1).value();
    if (!(corner < -tol.eps)) {
        throw Error(ErrorCode::NonNegativeDiagonal, "a_nn = " + format_double(corner) + " has no log coordinate");
    }
    if (!certify_symmetric(a, tol).hurwitz) throw Error(ErrorCode::NotHurwitz, "input is not Hurwitz");

    const BlockPartition p = partition(a);
    ChartPoint out{schur_reduce(p, tol), {}};
    out.k.reserve(n);
    for (const auto& c : p.c_row) out.k.push_back(c.value());
    out.k.push_back(std::log(-corner));
    return out;
}

Matrix phi_inverse(const ChartPoint& p, Tolerance tol) {
    const std::size_t m = p.base.size();
    if (p.k.size() != m + 1) {
        throw Error(ErrorCode::InvalidInput, "chart point needs " + std::to_string(m + 1) + " fiber coordinates");
    }
    for (double x : p.k) {
        if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "non-finite fiber coordinate");
    }
    const Matrix base = p.base.to_float();
    require_hurwitz_symmetric_base(base, tol);
    Vector border;
    border.reserve(m);
    for (std::size_t i = 0; i < m; ++i) border.push_back(Scalar::real(p.k[i]));
    return lift(base, border, border, Scalar::real(-std::exp(p.k[m])));
}

Matrix lift_symmetric_direct(const Matrix& base, const DirectLiftParams& p, Tolerance tol) {
    if (p.d.sign(tol) >= 0) throw Error(ErrorCode::NonNegativeCorner, "corner " + p.d.to_string() + " is not negative");
    if (p.d.mode() != base.mode()) throw Error(ErrorCode::ModeMismatch, "corner mode differs from base mode");
    require_hurwitz_symmetric_base(base, tol);
    return lift(base, p.k_row, p.k_row, p.d);
}

Matrix random_hurwitz_symmetric(std::size_t n, std::uint64_t seed, Tolerance tol) {
    if (n < 1 || n > kMaxDimension) throw Error(ErrorCode::DimensionOutOfRange, "n outside [1, 64]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> seed_mag(0.1, 10.0);
    std::uniform_real_distribution<double> border(-1.0, 1.0);
    std::uniform_real_distribution<double> corner(-10.0, -0.1);

    Matrix a = Matrix::from_doubles({{-seed_mag(rng)}});
    for (std::size_t m = 1; m < n; ++m) {
        DirectLiftParams p;
        p.k_row.reserve(m);
        for (std::size_t i = 0; i < m; ++i) p.k_row.push_back(Scalar::real(border(rng)));
        p.d = Scalar::real(corner(rng));
        a = lift_symmetric_direct(a, p, tol);
    }
    return a;
}

}  // namespace hurwitz
