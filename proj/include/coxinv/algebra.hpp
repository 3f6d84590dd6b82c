#pragma once

// Exact scalars and small dense linear algebra.
//
// Two scalar fields are provided: Rational (GMP rationals, always in lowest
// terms) and Golden, the quadratic field Q(phi) with phi^2 = phi + 1. Every
// group-theoretic decision in the library is made over one of these; doubles
// only appear in to_double() for sanity checks.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxinv/error.hpp"

namespace coxinv {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign(const Rational& q) { return sgn(q); }
inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw PreconditionError("inverse of zero");
  return Rational(1) / q;
}
inline double to_double(const Rational& q) { return q.get_d(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// a + b*phi with phi = (1 + sqrt 5) / 2. The pair (a, b) is the canonical form.
class Golden {
 public:
  Golden() = default;
  Golden(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Golden(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Golden phi() { return Golden(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& phi_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }

  Golden operator-() const { return Golden(Rational(-a_), Rational(-b_)); }

  Golden& operator+=(const Golden& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Golden& operator-=(const Golden& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Golden& operator*=(const Golden& o) {
    if (is_rational() && o.is_rational()) {
      a_ *= o.a_;
      return *this;
    }
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ + bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Golden& operator/=(const Golden& o) { return *this *= o.inverse(); }

  /// Conjugate under phi -> 1 - phi.
  Golden conjugate() const { return Golden(Rational(a_ + b_), Rational(-b_)); }

  /// Field norm a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  Golden inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    if (is_rational()) return Golden(Rational(1 / a_));
    Rational n = norm();
    Golden c = conjugate();
    c.a_ /= n;
    c.b_ /= n;
    return c;
  }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign of the real number a + b*phi.
  int sign() const {
    // 2(a + b phi) = x + y sqrt5 with x = 2a + b, y = b
    Rational x = 2 * a_ + b_;
    int sx = sgn(x);
    int sy = sgn(b_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    int cmp_sq = ::cmp(Rational(x * x), Rational(5 * b_ * b_));
    return cmp_sq > 0 ? sx : (cmp_sq < 0 ? sy : 0);
  }

  double to_double() const {
    static const double kPhi = 1.6180339887498948482;
    return a_.get_d() + b_.get_d() * kPhi;
  }

  std::string to_string() const {
    if (is_rational()) return a_.get_str();
    std::ostringstream os;
    if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? "+" : "");
    if (b_ == 1) {
      os << "phi";
    } else if (b_ == -1) {
      os << "-phi";
    } else {
      os << b_.get_str() << "*phi";
    }
    return os.str();
  }

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }

  friend bool operator==(const Golden& x, const Golden& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// Numeric order on the real line.
  friend std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Cheap structural order on (a, b); a valid total order for map keys but not numeric.
  friend bool structural_less(const Golden& x, const Golden& y) {
    int c = ::cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    return ::cmp(x.b_, y.b_) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Golden& g) { return os << g.to_string(); }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline bool is_zero(const Golden& g) { return g.is_zero(); }
inline int sign(const Golden& g) { return g.sign(); }
inline Golden inverse(const Golden& g) { return g.inverse(); }
inline double to_double(const Golden& g) { return g.to_double(); }
inline std::string to_string(const Golden& g) { return g.to_string(); }

template <class F>
concept ExactField = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { sign(a) } -> std::convertible_to<int>;
};

static_assert(ExactField<Golden>);

template <class F>
using Vector = std::vector<F>;

template <ExactField F>
F dot(const Vector<F>& x, const Vector<F>& y) {
  assert(x.size() == y.size());
  F s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i]) && !is_zero(y[i])) s += F(x[i] * y[i]);
  }
  return s;
}

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vector<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<F> row(std::size_t r) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector<F> operator*(const Vector<F>& v) const {
    if (v.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
    Vector<F> out(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += F((*this)(r, c) * v[c]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) out(i, j) += F(a(i, k) * b(k, j));
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = F(-x);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Rank by fraction-free (Bareiss) elimination, row pivots chosen top-down.
template <ExactField F>
std::size_t rank(Matrix<F> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  F prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const F pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const F lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        F v = pivot * m(i, j);
        if (!is_zero(lead) && !is_zero(m(r, j))) v -= F(lead * m(r, j));
        m(i, j) = v / prev;
      }
      m(i, c) = F(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

template <ExactField F>
F trace(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw PreconditionError("trace of a non-square matrix");
  F t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <ExactField F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const F inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F(m(r, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= F(f * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of {x : m x = 0}.
template <ExactField F>
std::vector<Vector<F>> nullspace(Matrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> x(m.cols(), F(0));
    x[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F(-m(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Incrementally maintained echelon basis of a subspace; answers span membership exactly.
template <ExactField F>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Adds v; returns true when it enlarged the span.
  bool insert(Vector<F> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    const F inv = inverse(v[lead]);
    for (auto& x : v) x = F(x * inv);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(Vector<F> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
  }

 private:
  void reduce(Vector<F>& v) const {
    if (v.size() != dim_) throw PreconditionError("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F f = v[leads_[r]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= F(f * rows_[r][j]);
    }
  }

  std::size_t dim_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> leads_;
};

/// Symmetric matrix positive definiteness by exact symmetric elimination (all pivots > 0).
template <ExactField F>
bool is_positive_definite(Matrix<F> m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sign(m(k, k)) <= 0) return false;
    const F inv = inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const F f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j)
        if (!is_zero(m(k, j))) m(i, j) -= F(f * m(k, j));
    }
  }
  return true;
}

}  // namespace coxinv
