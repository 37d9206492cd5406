#include "abf/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace abf {

namespace {

// reduce a degree-<15 polynomial in zeta by z^8 = z^4 - 1
CycScalar reduce(std::array<Rational, 15>& co) {
  for (int d = 14; d >= CycScalar::kDegree; --d) {
    if (co[d] != 0) {
      co[d - 4] += co[d];
      co[d - 8] -= co[d];
      co[d] = 0;
    }
  }
  CycScalar::Coords out;
  for (int k = 0; k < CycScalar::kDegree; ++k) out[k] = std::move(co[k]);
  return CycScalar::from_coords(std::move(out));
}

}  // namespace

CycScalar CycScalar::zeta_pow(int k) {
  k %= 24;
  if (k < 0) k += 24;
  static const std::array<CycScalar, 24> table = [] {
    std::array<CycScalar, 24> t;
    for (int j = 0; j < kDegree; ++j) {
      Coords c{};
      c[j] = 1;
      t[j] = from_coords(c);
    }
    for (int j = kDegree; j < 24; ++j) t[j] = t[j - 4] - t[j - 8];  // z^8 = z^4 - 1
    return t;
  }();
  return table[k];
}

CycScalar CycScalar::i() { return zeta_pow(6); }
CycScalar CycScalar::omega3() { return zeta_pow(8); }
CycScalar CycScalar::sqrt2() { return zeta_pow(3) + zeta_pow(-3); }
CycScalar CycScalar::sqrt3() { return zeta_pow(2) + zeta_pow(-2); }
CycScalar CycScalar::sqrt6() { return sqrt2() * sqrt3(); }

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (int k = 1; k < kDegree; ++k)
    if (c_[k] != 0) return false;
  return true;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r = *this;
  r += o;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  for (int k = 0; k < kDegree; ++k) c_[k] += o.c_[k];
  return *this;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  CycScalar r = *this;
  r -= o;
  return r;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  for (int k = 0; k < kDegree; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r;
  for (int k = 0; k < kDegree; ++k) r.c_[k] = -c_[k];
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  std::array<Rational, 15> co{};
  for (int a = 0; a < kDegree; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < kDegree; ++b) {
      if (o.c_[b] == 0) continue;
      co[a + b] += c_[a] * o.c_[b];
    }
  }
  return reduce(co);
}

bool CycScalar::operator<(const CycScalar& o) const {
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  }
  return false;
}

CycScalar CycScalar::conj() const {
  CycScalar r;
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k] != 0) r += CycScalar(c_[k]) * zeta_pow(24 - k);
  }
  return r;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  // Solve (this) * x = 1 through the 8x8 rational multiplication matrix.
  std::array<std::array<Rational, kDegree + 1>, kDegree> m;
  for (int k = 0; k < kDegree; ++k) {
    CycScalar col = *this * zeta_pow(k);
    for (int r = 0; r < kDegree; ++r) m[r][k] = col.c_[r];
  }
  for (int r = 0; r < kDegree; ++r) m[r][kDegree] = (r == 0) ? 1 : 0;
  for (int c = 0; c < kDegree; ++c) {
    int piv = c;
    while (piv < kDegree && m[piv][c] == 0) ++piv;
    if (piv == kDegree) throw std::domain_error("CycScalar: singular inverse");
    std::swap(m[c], m[piv]);
    Rational p = m[c][c];
    for (int j = c; j <= kDegree; ++j) m[c][j] /= p;
    for (int r = 0; r < kDegree; ++r) {
      if (r != c && m[r][c] != 0) {
        Rational f = m[r][c];
        for (int j = c; j <= kDegree; ++j) m[r][j] -= f * m[c][j];
      }
    }
  }
  Coords out;
  for (int r = 0; r < kDegree; ++r) out[r] = m[r][kDegree];
  return from_coords(std::move(out));
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * k / 24.0;
    acc += to_double(c_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CycScalar::serialize() const {
  std::ostringstream os;
  for (int k = 0; k < kDegree; ++k) {
    if (k) os << ',';
    os << numerator(c_[k]) << '/' << denominator(c_[k]);
  }
  return os.str();
}

CycScalar CycScalar::deserialize(const std::string& s) {
  Coords out;
  size_t pos = 0;
  for (int k = 0; k < kDegree; ++k) {
    size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    size_t slash = tok.find('/');
    if (slash == std::string::npos) {
      out[k] = Rational(BigInt(tok));
    } else {
      out[k] = Rational(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
    }
    pos = (next == std::string::npos) ? s.size() : next + 1;
  }
  return from_coords(std::move(out));
}

namespace {

constexpr int kEmbedJs[8] = {1, 5, 7, 11, 13, 17, 19, 23};

std::complex<double> embed(const CycScalar& a, int j) {
  std::complex<double> acc{0.0, 0.0};
  for (int k = 0; k < CycScalar::kDegree; ++k) {
    if (a[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * j * k / 24.0;
    acc += to_double(a[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// round to a nearby rational with bounded denominator; denominators occurring
// in intertwiner scalings are divisors of small powers of 2 and 3
bool round_rational(double x, Rational* out) {
  constexpr long kDens[] = {1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 32, 36, 48, 64,
                            72, 96, 144, 192, 288, 384, 576, 1152};
  for (long d : kDens) {
    double scaled = x * static_cast<double>(d);
    double r = std::round(scaled);
    if (std::abs(scaled - r) < 1e-7 && std::abs(r) < 9e15) {
      *out = Rational(BigInt(static_cast<long long>(r)), BigInt(d));
      return true;
    }
  }
  return false;
}

}  // namespace

CycScalar cyc_root(const CycScalar& w, int q) {
  // Pick q-th roots of the eight complex embeddings consistently with complex
  // conjugation, invert the Vandermonde numerically, rationalize, and verify
  // the candidate exactly. Embeddings pair up as (j, 24-j).
  const int indep[4] = {1, 5, 7, 11};
  std::complex<double> vals[4];
  for (int t = 0; t < 4; ++t) vals[t] = embed(w, indep[t]);

  int combos = 1;
  for (int t = 0; t < 4; ++t) combos *= q;
  for (int mask = 0; mask < combos; ++mask) {
    int ks[4];
    int m = mask;
    for (int t = 0; t < 4; ++t) {
      ks[t] = m % q;
      m /= q;
    }
    std::complex<double> target[8];
    for (int t = 0; t < 4; ++t) {
      double r = std::pow(std::abs(vals[t]), 1.0 / q);
      double th = (std::arg(vals[t]) + 2.0 * std::numbers::pi * ks[t]) / q;
      std::complex<double> root = r * std::complex<double>(std::cos(th), std::sin(th));
      target[t] = root;
      target[7 - t] = std::conj(root);  // js order: 1,5,7,11,13,17,19,23
    }
    // solve sum_m a_m e^{2 pi i j m / 24} = target_j by Gaussian elimination
    std::complex<double> A[8][9];
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        double ang = 2.0 * std::numbers::pi * kEmbedJs[r] * c / 24.0;
        A[r][c] = {std::cos(ang), std::sin(ang)};
      }
      A[r][8] = target[r];
    }
    for (int c = 0; c < 8; ++c) {
      int piv = c;
      for (int r = c + 1; r < 8; ++r)
        if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
      for (int j = 0; j < 9; ++j) std::swap(A[c][j], A[piv][j]);
      for (int r = 0; r < 8; ++r) {
        if (r == c) continue;
        std::complex<double> f = A[r][c] / A[c][c];
        for (int j = c; j < 9; ++j) A[r][j] -= f * A[c][j];
      }
    }
    CycScalar::Coords coords;
    bool ok = true;
    for (int c = 0; c < 8 && ok; ++c) {
      std::complex<double> a = A[c][8] / A[c][c];
      if (std::abs(a.imag()) > 1e-6) {
        ok = false;
        break;
      }
      ok = round_rational(a.real(), &coords[c]);
    }
    if (!ok) continue;
    CycScalar cand = CycScalar::from_coords(coords);
    CycScalar p = CycScalar::one();
    for (int t = 0; t < q; ++t) p *= cand;
    if (p == w) return cand;
  }
  throw std::runtime_error("cyc_root: no q-th root in Q(zeta_24)");
}

}  // namespace abf
