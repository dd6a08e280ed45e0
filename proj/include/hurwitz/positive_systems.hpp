#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/certify.hpp"

namespace hurwitz {

/// x' = A x + b with A Metzler and b >= 0.
struct PositiveLinearSystem {
    Matrix a;
    Vector b;
};

/// Throws NotMetzler / NegativeInput / InvalidInput when the invariants fail.
void validate(const PositiveLinearSystem& sys, Tolerance tol);

struct Equilibrium {
    Vector x_bar;
    double residual = 0.0;  ///< max-norm of A x_bar + b
    bool strictly_positive = false;
};

/// x_bar = -A^{-1} b. Requires A certified Metzler Hurwitz (else NotHurwitz);
/// nonnegativity of x_bar is checked and a violation raises Internal.
Equilibrium equilibrium(const PositiveLinearSystem& sys, Tolerance tol);

struct Trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> states;
};

/// Fixed-step RK4 in double precision; returns steps + 1 samples including x0.
Trajectory simulate(const PositiveLinearSystem& sys, const std::vector<double>& x0, double dt, std::size_t steps);

/// Unit input at compartment 2 (heart) of the 7-compartment insulin model.
Vector default_insulin_input(Mode mode);

}  // namespace hurwitz
