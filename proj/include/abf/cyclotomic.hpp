#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "abf/rational.hpp"

namespace abf {

/// Exact element of the cyclotomic field Q(zeta_24), zeta_24 = e^{2 pi i/24}.
///
/// Coordinates are taken w.r.t. the power basis {1, z, ..., z^7}; the minimal
/// polynomial is Phi_24(x) = x^8 - x^4 + 1, so reduction uses z^8 = z^4 - 1.
/// This single field houses every scalar that occurs in the character tables
/// and field coefficients: i = z^6, the cube root of unity w = z^8, and
/// sqrt2 = z^3 + z^{-3}, sqrt3 = z^2 + z^{-2}, sqrt6 = sqrt2*sqrt3.
class CycScalar {
 public:
  static constexpr int kDegree = 8;
  using Coords = std::array<Rational, kDegree>;

  CycScalar() = default;
  explicit CycScalar(Rational r) { c_[0] = std::move(r); }
  explicit CycScalar(long n) { c_[0] = n; }
  static CycScalar from_coords(Coords c) {
    CycScalar v;
    v.c_ = std::move(c);
    return v;
  }

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one() { return CycScalar(1L); }
  /// zeta_24^k, any integer k (reduced mod 24).
  static CycScalar zeta_pow(int k);
  static CycScalar i();
  static CycScalar omega3();  // e^{2 pi i/3}
  static CycScalar sqrt2();
  static CycScalar sqrt3();
  static CycScalar sqrt6();

  const Coords& coords() const { return c_; }
  const Rational& operator[](int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational part; only meaningful when is_rational().
  const Rational& rat() const { return c_[0]; }

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  bool operator==(const CycScalar& o) const { return c_ == o.c_; }
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  /// Total order on coordinate vectors; used for canonical sorting only.
  bool operator<(const CycScalar& o) const;

  /// Galois conjugation zeta -> zeta^{-1} (complex conjugation).
  CycScalar conj() const;

  /// Multiplicative inverse. Throws std::domain_error on zero.
  CycScalar inverse() const;

  std::complex<double> to_complex() const;

  /// "a0,a1,...,a7" with entries "num/den".
  std::string serialize() const;
  static CycScalar deserialize(const std::string& s);

 private:
  Coords c_{};  // value-initialized rationals are zero
};

inline CycScalar operator*(const Rational& r, const CycScalar& a) {
  return CycScalar(r) * a;
}

/// alpha with alpha^q = w, searched within Q(zeta_24). Exists whenever the
/// induction step it serves is realizable over the field; throws otherwise.
CycScalar cyc_root(const CycScalar& w, int q);

}  // namespace abf
