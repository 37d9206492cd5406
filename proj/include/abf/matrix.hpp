#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace abf {

/// Dense matrix over an exact scalar ring/field.
/// Scalar needs: default ctor (zero), +, -, *, ==, is_zero(); field ops
/// additionally need inverse().
template <class S>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1L);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Matrix operator*(const Matrix& o) const {
    assert(c_ == o.r_);
    Matrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const S& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) {
          const S& y = o(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] + o.a_[t];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] - o.a_[t];
    return out;
  }

  Matrix scaled(const S& f) const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] * f;
    return out;
  }

  Matrix pow(int p) const {
    Matrix out = identity(r_);
    for (int t = 0; t < p; ++t) out = out * *this;
    return out;
  }

  S trace() const {
    S t{};
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Gaussian inverse; scalar must be a field.
  Matrix inverse() const {
    assert(r_ == c_);
    Matrix a = *this, inv = identity(r_);
    for (int c = 0; c < c_; ++c) {
      int piv = c;
      while (piv < r_ && a(piv, c).is_zero()) ++piv;
      if (piv == r_) throw std::domain_error("Matrix::inverse: singular");
      for (int j = 0; j < c_; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
      S ip = a(c, c).inverse();
      for (int j = 0; j < c_; ++j) {
        a(c, j) = a(c, j) * ip;
        inv(c, j) = inv(c, j) * ip;
      }
      for (int r = 0; r < r_; ++r) {
        if (r == c || a(r, c).is_zero()) continue;
        S f = a(r, c);
        for (int j = 0; j < c_; ++j) {
          a(r, j) = a(r, j) - f * a(c, j);
          inv(r, j) = inv(r, j) - f * inv(c, j);
        }
      }
    }
    return inv;
  }

 private:
  int r_, c_;
  std::vector<S> a_;
};

}  // namespace abf
