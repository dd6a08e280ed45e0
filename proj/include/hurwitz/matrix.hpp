#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace hurwitz {

using Vector = std::vector<Scalar>;

inline constexpr std::size_t kMaxDimension = 64;

/// Dense square matrix of same-mode scalars, 1 <= n <= 64, row-major.
class Matrix {
public:
    /// n x n zero matrix.
    Matrix(std::size_t n, Mode mode);

    /// Builds from rows; throws on ragged input, non-square shape, mixed modes or n out of range.
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_doubles(const std::vector<std::vector<double>>& rows);
    static Matrix identity(std::size_t n, Mode mode);
    static Matrix diagonal(const Vector& diag);

    std::size_t size() const { return n_; }
    Mode mode() const { return mode_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar value);

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    /// Leading k x k block.
    Matrix leading(std::size_t k) const;

    Matrix to_mode(Mode mode) const;
    Matrix to_float() const { return to_mode(Mode::Float); }

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t n_;
    Mode mode_;
    std::vector<Scalar> data_;
};

/// The block split A = [a_sub b_col; c_row^T d] around the last row/column.
struct BlockPartition {
    Matrix a_sub;
    Vector b_col;
    Vector c_row;
    Scalar d;
};

bool is_symmetric(const Matrix& a, Tolerance tol);
bool is_metzler(const Matrix& a, Tolerance tol, bool strict = false);

BlockPartition partition(const Matrix& a);
Matrix reassemble(const BlockPartition& p);

/// D = a_sub - b_col c_row^T / d. Throws SingularPivot if |d| <= eps.
Matrix schur_reduce(const BlockPartition& p, Tolerance tol);

/// Inverse of schur_reduce for a chosen border: returns the n x n matrix whose
/// partition has the given b, c, d and whose Schur complement is `base`.
Matrix lift(const Matrix& base, const Vector& b_col, const Vector& c_row, const Scalar& d);

/// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
/// pivot magnitude is <= eps.
Vector solve_linear(const Matrix& a, const Vector& rhs, Tolerance tol);

/// Monic characteristic polynomial det(lambda I - A), highest degree first:
/// returns (1, c_1, ..., c_n). Faddeev-LeVerrier recursion.
Vector char_poly(const Matrix& a);

Vector multiply(const Matrix& a, const Vector& x);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Max-norm of a vector as a double.
double max_norm(const Vector& v);
/// Max row-sum norm.
double inf_norm(const Matrix& a);

Vector to_mode(const Vector& v, Mode mode);

}  // namespace hurwitz
