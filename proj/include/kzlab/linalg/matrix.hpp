#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kzlab/errors.hpp"
#include "kzlab/number/cyclotomic.hpp"
#include "kzlab/number/rational.hpp"

namespace kzlab {

// Scalar hooks used by Matrix<T>. Overloads exist for the exact types and
// for double / std::complex<double>.
inline Rational conj_of(const Rational& x) { return x; }
inline CyclotomicNumber conj_of(const CyclotomicNumber& x) { return x.conj(); }
inline double conj_of(double x) { return x; }
inline std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

inline bool is_zero_of(const Rational& x) { return x.is_zero(); }
inline bool is_zero_of(const CyclotomicNumber& x) { return x.is_zero(); }
inline bool is_zero_of(double x) { return x == 0.0; }
inline bool is_zero_of(const std::complex<double>& x) { return x == 0.0; }

inline std::complex<double> to_complex_of(const Rational& x) { return x.to_double(); }
inline std::complex<double> to_complex_of(const CyclotomicNumber& x) { return x.approx_complex(); }
inline std::complex<double> to_complex_of(double x) { return x; }
inline std::complex<double> to_complex_of(const std::complex<double>& x) { return x; }

inline std::string to_string_of(const Rational& x) { return x.to_string(); }
inline std::string to_string_of(const CyclotomicNumber& x) { return x.to_string(); }
inline std::string to_string_of(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
inline std::string to_string_of(const std::complex<double>& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

/// Dense row-major matrix over an exact or floating field.
///
/// Elimination-based routines (rank, nullspace, inverse, determinant) test
/// pivots for exact zero, so they are only reliable for the exact types.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InvalidArgument("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_of(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (is_zero_of(y)) continue;
          r(i, j) = r(i, j) + x * y;
        }
      }
    }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) {
      if (!is_zero_of(x)) x = s * x;
    }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (is_zero_of((*this)(i, j)) || is_zero_of(v[j])) continue;
        out[i] = out[i] + (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conj_transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conj_of((*this)(i, j));
    return r;
  }

  Matrix conjugate() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = conj_of(x);
    return r;
  }

  bool is_hermitian() const { return is_square() && *this == conj_transpose(); }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
    return t;
  }

  Matrix pow(long long e) const {
    if (!is_square()) throw InvalidArgument("power of non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Characteristic polynomial det(xI - A), coefficients low degree first
  /// (monic, size n+1), via the Faddeev-LeVerrier recursion.
  std::vector<T> charpoly() const {
    if (!is_square()) throw InvalidArgument("charpoly of non-square matrix");
    const std::size_t n = rows_;
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix mk = (*this) * m;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k + 1];
      m = mk;
      T t = ((*this) * m).trace();
      c[n - k] = -(t / T(static_cast<int>(k)));
    }
    return c;
  }

  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && is_zero_of((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      T inv = T(1) / (*this)(row, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (!is_zero_of((*this)(row, j))) (*this)(row, j) = (*this)(row, j) * inv;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || is_zero_of((*this)(i, c))) continue;
        T f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          if (!is_zero_of((*this)(row, j))) (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
        }
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  /// Basis of {x : A x = 0}.
  std::vector<std::vector<T>> nullspace() const {
    Matrix m = *this;
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<T> v(cols_, T(0));
      v[free] = T(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Solves A x = b; throws DegenerateConfiguration when A is singular.
  std::vector<T> solve(const std::vector<T>& b) const {
    if (!is_square() || b.size() != rows_) throw InvalidArgument("solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref_in_place();
    if (pivots.size() < cols_ || pivots.back() >= cols_) throw DegenerateConfiguration("singular linear system");
    std::vector<T> x(cols_);
    for (std::size_t i = 0; i < cols_; ++i) x[i] = aug(i, cols_);
    return x;
  }

  Matrix inverse() const {
    if (!is_square()) throw InvalidArgument("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1);
    }
    auto pivots = aug.rref_in_place();
    if (pivots.size() < n || pivots[n - 1] >= n) throw DivisionByZero("matrix is singular");
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
  }

  T determinant() const {
    if (!is_square()) throw InvalidArgument("determinant of non-square matrix");
    Matrix m = *this;
    T det(1);
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && is_zero_of(m(p, c))) ++p;
      if (p == n) return T(0);
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det = det * m(c, c);
      T inv = T(1) / m(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        if (is_zero_of(m(i, c))) continue;
        T f = m(i, c) * inv;
        for (std::size_t j = c; j < n; ++j) {
          if (!is_zero_of(m(c, j))) m(i, j) = m(i, j) - f * m(c, j);
        }
      }
    }
    return det;
  }

  Eigen::MatrixXcd to_eigen() const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_complex_of((*this)(i, j));
    return m;
  }

  /// Hash over entries, for exact element sets.
  std::size_t hash() const {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& x : data_) h = h * 1000003u ^ std::hash<T>{}(x);
    return h;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string_of((*this)(i, j));
    }
    os << "]";
    return os.str();
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<CyclotomicNumber>;

/// Real 2n x 2n form of a complex matrix acting on (Re x, Im x).
inline Eigen::MatrixXd realify(const Eigen::MatrixXcd& m) {
  const auto r = m.rows(), c = m.cols();
  Eigen::MatrixXd out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.real();
  out.topRightCorner(r, c) = -m.imag();
  out.bottomLeftCorner(r, c) = m.imag();
  out.bottomRightCorner(r, c) = m.real();
  return out;
}

/// Re-embeds every entry into Q(zeta_N); equal matrices then share a hash.
inline ExactMatrix embed_matrix(const ExactMatrix& m, int conductor) {
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).embed(conductor);
  return r;
}

}  // namespace kzlab

template <typename T>
struct std::hash<kzlab::Matrix<T>> {
  std::size_t operator()(const kzlab::Matrix<T>& m) const { return m.hash(); }
};
