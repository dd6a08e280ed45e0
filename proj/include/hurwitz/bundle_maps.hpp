#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/certify.hpp"

namespace hurwitz {

/// Product-manifold coordinates of an n x n Hurwitz symmetric matrix:
/// its Schur complement plus (a_n1, ..., a_n,n-1, ln(-a_nn)).
struct ChartPoint {
    Matrix base;
    std::vector<double> k;
};

/// Fiber coordinates with the corner given directly (d < 0), usable in Exact mode.
struct DirectLiftParams {
    Vector k_row;
    Scalar d;
};

/// Forward chart. Float mode only. Throws NonNegativeDiagonal, NotHurwitz.
ChartPoint phi(const Matrix& a, Tolerance tol);

/// Inverse chart: corner -e^{k_n}, border k_1..k_{n-1}. Throws BaseNotHurwitz.
Matrix phi_inverse(const ChartPoint& p, Tolerance tol);

/// Symmetric lift with border k_row and corner d. Throws BaseNotHurwitz, NonNegativeCorner.
Matrix lift_symmetric_direct(const Matrix& base, const DirectLiftParams& p, Tolerance tol);

/// Random Hurwitz symmetric n x n matrix grown by n-1 direct lifts from a
/// negative 1 x 1 seed. Deterministic per (n, seed).
Matrix random_hurwitz_symmetric(std::size_t n, std::uint64_t seed, Tolerance tol);

}  // namespace hurwitz
