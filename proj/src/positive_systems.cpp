#include "hurwitz/positive_systems.hpp"

#include <cmath>

namespace hurwitz {

void validate(const PositiveLinearSystem& sys, Tolerance tol) {
    require_tolerance(sys.a.mode(), tol);
    if (sys.b.size() != sys.a.size()) throw Error(ErrorCode::InvalidInput, "input vector length does not match A");
    if (!is_metzler(sys.a, tol)) throw Error(ErrorCode::NotMetzler, "system matrix is not Metzler");
    for (std::size_t i = 0; i < sys.b.size(); ++i) {
        if (sys.b[i].mode() != sys.a.mode()) throw Error(ErrorCode::ModeMismatch, "input mode differs from A");
        if (sys.b[i].sign(tol) < 0) {
            throw Error(ErrorCode::NegativeInput, "b[" + std::to_string(i) + "] is negative");
        }
    }
}

Equilibrium equilibrium(const PositiveLinearSystem& sys, Tolerance tol) {
    validate(sys, tol);
    bool hurwitz = false;
    try {
        hurwitz = certify_metzler(sys.a, tol).hurwitz;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TolDisagreement) throw;
    }
    if (!hurwitz) throw Error(ErrorCode::NotHurwitz, "no positive equilibrium: A is not Hurwitz");

    Vector rhs;
    rhs.reserve(sys.b.size());
    for (const auto& v : sys.b) rhs.push_back(-v);
    Equilibrium eq;
    try {
        eq.x_bar = solve_linear(sys.a, rhs, tol);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMatrix) throw;
        throw Error(ErrorCode::Internal, std::string("certified Hurwitz matrix reported singular: ") + e.what());
    }

    Vector residual = multiply(sys.a, eq.x_bar);
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += sys.b[i];
    eq.residual = max_norm(residual);

    eq.strictly_positive = true;
    for (std::size_t i = 0; i < eq.x_bar.size(); ++i) {
        const int s = eq.x_bar[i].sign(tol);
        if (s < 0) {
            throw Error(ErrorCode::Internal, "equilibrium component " + std::to_string(i + 1) + " = " +
                                                 eq.x_bar[i].to_string() + " is negative");
        }
        if (s == 0) eq.strictly_positive = false;
    }
    return eq;
}

Trajectory simulate(const PositiveLinearSystem& sys, const std::vector<double>& x0, double dt, std::size_t steps) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorCode::NonPositiveStep, "dt must be positive");
    const std::size_t n = sys.a.size();
    if (x0.size() != n || sys.b.size() != n) throw Error(ErrorCode::InvalidInput, "state length does not match A");
    if (!is_metzler(sys.a, Tolerance::for_mode(sys.a.mode()))) {
        throw Error(ErrorCode::NotMetzler, "system matrix is not Metzler");
    }
    for (double v : x0) {
        if (!(v >= 0.0)) throw Error(ErrorCode::NegativeInput, "initial state must be nonnegative");
    }

    std::vector<double> a(n * n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = sys.b[i].to_double();
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = sys.a(i, j).to_double();
    }
    auto rhs = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = b[i];
            for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
            out[i] = acc;
        }
    };

    Trajectory traj;
    traj.t.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.t.push_back(0.0);
    traj.states.push_back(x0);

    std::vector<double> x = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (std::size_t s = 1; s <= steps; ++s) {
        rhs(x, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        rhs(tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        rhs(tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
        rhs(tmp, k4);
        for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        traj.t.push_back(static_cast<double>(s) * dt);
        traj.states.push_back(x);
    }
    return traj;
}

Vector default_insulin_input(Mode mode) {
    Vector b(7, Scalar::zero(mode));
    b[1] = Scalar::one(mode);
    return b;
}

}  // namespace hurwitz
