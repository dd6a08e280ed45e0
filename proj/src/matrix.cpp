#include "hurwitz/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace hurwitz {

namespace {

void require_dimension(std::size_t n) {
    if (n < 1 || n > kMaxDimension) {
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(n) + " outside [1, 64]");
    }
}

void require_mode(const Scalar& s, Mode mode) {
    if (s.mode() != mode) throw Error(ErrorCode::ModeMismatch, "entry mode differs from matrix mode");
}

}  // namespace

Matrix::Matrix(std::size_t n, Mode mode) : n_(n), mode_(mode) {
    require_dimension(n);
    data_.assign(n * n, Scalar::zero(mode));
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    const std::size_t n = rows.size();
    require_dimension(n);
    if (rows[0].empty()) throw Error(ErrorCode::InvalidInput, "empty row");
    Matrix m(n, rows[0][0].mode());
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has length " +
                                                     std::to_string(rows[i].size()) + ", expected " +
                                                     std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_doubles(const std::vector<std::vector<double>>& rows) {
    std::vector<Vector> converted;
    converted.reserve(rows.size());
    for (const auto& r : rows) {
        Vector v;
        v.reserve(r.size());
        for (double x : r) v.push_back(Scalar::real(x));
        converted.push_back(std::move(v));
    }
    return from_rows(converted);
}

Matrix Matrix::identity(std::size_t n, Mode mode) {
    Matrix m(n, mode);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
    return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
    if (diag.empty()) throw Error(ErrorCode::DimensionOutOfRange, "empty diagonal");
    Matrix m(diag.size(), diag[0].mode());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    require_mode(value, mode_);
    data_[i * n_ + j] = std::move(value);
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::leading(std::size_t k) const {
    if (k < 1 || k > n_) throw Error(ErrorCode::DimensionOutOfRange, "leading block size out of range");
    Matrix m(k, mode_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.data_[i * k + j] = (*this)(i, j);
    return m;
}

Matrix Matrix::to_mode(Mode mode) const {
    if (mode == mode_) return *this;
    Matrix m(n_, mode);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].to_mode(mode);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_ || a.mode_ != b.mode_) return false;
    return a.data_ == b.data_;
}

bool is_symmetric(const Matrix& a, Tolerance tol) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((a(i, j) - a(j, i)).sign(tol) != 0) return false;
        }
    }
    return true;
}

bool is_metzler(const Matrix& a, Tolerance tol, bool strict) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int s = a(i, j).sign(tol);
            if (strict ? s <= 0 : s < 0) return false;
        }
    }
    return true;
}

BlockPartition partition(const Matrix& a) {
    const std::size_t n = a.size();
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "partition needs n >= 2");
    const std::size_t m = n - 1;
    BlockPartition p{a.leading(m), {}, {}, a(m, m)};
    p.b_col.reserve(m);
    p.c_row.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        p.b_col.push_back(a(i, m));
        p.c_row.push_back(a(m, i));
    }
    return p;
}

Matrix reassemble(const BlockPartition& p) {
    const std::size_t m = p.a_sub.size();
    if (p.b_col.size() != m || p.c_row.size() != m) {
        throw Error(ErrorCode::InvalidInput, "border length does not match block size");
    }
    Matrix a(m + 1, p.a_sub.mode());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a.set(i, j, p.a_sub(i, j));
        a.set(i, m, p.b_col[i]);
        a.set(m, i, p.c_row[i]);
    }
    a.set(m, m, p.d);
    return a;
}

Matrix schur_reduce(const BlockPartition& p, Tolerance tol) {
    require_tolerance(p.a_sub.mode(), tol);
    if (p.d.sign(tol) == 0) {
        throw Error(ErrorCode::SingularPivot, "pivot " + p.d.to_string() + " is zero within tolerance");
    }
    const std::size_t m = p.a_sub.size();
    Matrix out(m, p.a_sub.mode());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.set(i, j, p.a_sub(i, j) - (p.b_col[i] * p.c_row[j]) / p.d);
    return out;
}

Matrix lift(const Matrix& base, const Vector& b_col, const Vector& c_row, const Scalar& d) {
    const std::size_t m = base.size();
    if (b_col.size() != m || c_row.size() != m) {
        throw Error(ErrorCode::InvalidInput, "border length does not match base dimension");
    }
    if (d.sign() == 0) throw Error(ErrorCode::SingularPivot, "lift corner is zero");
    BlockPartition p{Matrix(m, base.mode()), b_col, c_row, d};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) p.a_sub.set(i, j, base(i, j) + (b_col[i] * c_row[j]) / d);
    return reassemble(p);
}

Vector solve_linear(const Matrix& a, const Vector& rhs, Tolerance tol) {
    const Mode mode = a.mode();
    require_tolerance(mode, tol);
    const std::size_t n = a.size();
    if (rhs.size() != n) throw Error(ErrorCode::InvalidInput, "rhs length does not match matrix");

    // Augmented working copy.
    std::vector<Vector> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = a.row(i);
        w[i].push_back(rhs[i]);
        for (const auto& s : w[i]) require_mode(s, mode);
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        Scalar best_abs = w[col][col].abs();
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar cand = w[r][col].abs();
            if (cand > best_abs) {
                best = r;
                best_abs = std::move(cand);
            }
        }
        if (best_abs.sign(tol) == 0) {
            throw Error(ErrorCode::SingularMatrix, "pivot in column " + std::to_string(col) + " vanishes");
        }
        std::swap(w[col], w[best]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w[r][col].sign() == 0) continue;
            const Scalar factor = w[r][col] / w[col][col];
            for (std::size_t c = col; c <= n; ++c) w[r][c] -= factor * w[col][c];
        }
    }

    Vector x(n, Scalar::zero(mode));
    for (std::size_t i = n; i-- > 0;) {
        Scalar acc = w[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= w[i][j] * x[j];
        x[i] = acc / w[i][i];
    }
    return x;
}

Vector char_poly(const Matrix& a) {
    const std::size_t n = a.size();
    const Mode mode = a.mode();
    Vector coeffs{Scalar::one(mode)};
    coeffs.reserve(n + 1);
    Matrix m = Matrix::identity(n, mode);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix am = multiply(a, m);
        Scalar trace = Scalar::zero(mode);
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        Scalar c = -trace / Scalar::exact(static_cast<long>(k)).to_mode(mode);
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) am.set(i, i, am(i, i) + c);
            m = std::move(am);
        }
        coeffs.push_back(std::move(c));
    }
    return coeffs;
}

Vector multiply(const Matrix& a, const Vector& x) {
    const std::size_t n = a.size();
    if (x.size() != n) throw Error(ErrorCode::InvalidInput, "vector length does not match matrix");
    Vector y(n, Scalar::zero(a.mode()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::InvalidInput, "dimension mismatch in product");
    Matrix c(n, a.mode());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = Scalar::zero(a.mode());
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            c.set(i, j, std::move(acc));
        }
    }
    return c;
}

double max_norm(const Vector& v) {
    double m = 0.0;
    for (const auto& s : v) m = std::max(m, std::abs(s.to_double()));
    return m;
}

double inf_norm(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) row += std::abs(a(i, j).to_double());
        m = std::max(m, row);
    }
    return m;
}

Vector to_mode(const Vector& v, Mode mode) {
    Vector out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.to_mode(mode));
    return out;
}

}  // namespace hurwitz
