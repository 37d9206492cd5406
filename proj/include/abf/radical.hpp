#pragma once

#include "abf/cyclotomic.hpp"

namespace abf {

/// x + y*sqrt(n) with x, y in Q(zeta_24) and a fixed positive rational n.
///
/// Field coefficients of Beltrami harmonics live here: the sine partner of a
/// cosine coefficient carries the factor 1/sqrt(<k,k>), and for generic
/// momenta (e.g. <k,k> = 5) that radical lies outside Q(zeta_24). Only ring
/// operations are ever needed on these, so no division is provided. All
/// scalars combined in one expression must share the same n; this is not
/// checked per-operation (n rides along on the owning field object).
struct RadScalar {
  CycScalar x;  // rational-in-field part
  CycScalar y;  // coefficient of sqrt(n)

  RadScalar() = default;
  explicit RadScalar(long v) : x(v) {}
  explicit RadScalar(CycScalar plain) : x(std::move(plain)) {}
  RadScalar(CycScalar x_, CycScalar y_) : x(std::move(x_)), y(std::move(y_)) {}

  static RadScalar sqrt_n() { return RadScalar(CycScalar::zero(), CycScalar::one()); }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  bool operator==(const RadScalar& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RadScalar& o) const { return !(*this == o); }

  RadScalar operator+(const RadScalar& o) const { return {x + o.x, y + o.y}; }
  RadScalar operator-(const RadScalar& o) const { return {x - o.x, y - o.y}; }
  RadScalar operator-() const { return {-x, -y}; }
  RadScalar& operator+=(const RadScalar& o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  RadScalar conj() const { return {x.conj(), y.conj()}; }  // sqrt(n) is real

  double to_double(double sqrt_n_value) const {
    return x.to_complex().real() + y.to_complex().real() * sqrt_n_value;
  }
};

/// Multiplication needs n; provided by a small context functor so that
/// Matrix<RadScalar> is still usable through MulBound wrappers if ever
/// required. Field code multiplies explicitly via this helper.
inline RadScalar rad_mul(const RadScalar& a, const RadScalar& b, const Rational& n) {
  CycScalar nn{n};
  return {a.x * b.x + nn * (a.y * b.y), a.x * b.y + a.y * b.x};
}

}  // namespace abf
