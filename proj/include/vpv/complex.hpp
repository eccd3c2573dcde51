#pragma once

// Complex scalar over an arbitrary real type (double, long double or a
// Boost.Multiprecision float), plus compensated accumulation.

#include <cmath>
#include <ostream>

#include "vpv/errors.hpp"

namespace vpv {

template <class Real>
struct basic_complex {
  Real re{0};
  Real im{0};

  constexpr basic_complex() = default;
  constexpr basic_complex(Real r) : re(r), im(0) {}  // NOLINT: implicit from real is intended
  constexpr basic_complex(Real r, Real i) : re(r), im(i) {}

  template <class Other>
  explicit basic_complex(const basic_complex<Other>& o)
      : re(static_cast<Real>(o.re)), im(static_cast<Real>(o.im)) {}

  basic_complex& operator+=(const basic_complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  basic_complex& operator-=(const basic_complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  basic_complex& operator*=(const basic_complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  basic_complex& operator*=(const Real& k) {
    re *= k;
    im *= k;
    return *this;
  }
  basic_complex& operator/=(const basic_complex& o);

  friend basic_complex operator+(basic_complex a, const basic_complex& b) { return a += b; }
  friend basic_complex operator-(basic_complex a, const basic_complex& b) { return a -= b; }
  friend basic_complex operator*(basic_complex a, const basic_complex& b) { return a *= b; }
  friend basic_complex operator*(basic_complex a, const Real& k) { return a *= k; }
  friend basic_complex operator*(const Real& k, basic_complex a) { return a *= k; }
  friend basic_complex operator/(basic_complex a, const basic_complex& b) { return a /= b; }
  friend basic_complex operator-(const basic_complex& a) { return {-a.re, -a.im}; }

  friend bool operator==(const basic_complex& a, const basic_complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_complex& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

using complex_scalar = basic_complex<double>;

template <class Real>
Real abs(const basic_complex<Real>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class Real>
Real norm(const basic_complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class Real>
basic_complex<Real> conj(const basic_complex<Real>& z) {
  return {z.re, -z.im};
}

// Smith's algorithm.
template <class Real>
basic_complex<Real>& basic_complex<Real>::operator/=(const basic_complex& o) {
  using std::abs;
  if (abs(o.re) >= abs(o.im)) {
    Real r = o.im / o.re;
    Real den = o.re + o.im * r;
    Real nr = (re + im * r) / den;
    im = (im - re * r) / den;
    re = nr;
  } else {
    Real r = o.re / o.im;
    Real den = o.re * r + o.im;
    Real nr = (re * r + im) / den;
    im = (im * r - re) / den;
    re = nr;
  }
  return *this;
}

template <class Real>
basic_complex<Real> exp(const basic_complex<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch, Im in (-pi, pi].
template <class Real>
basic_complex<Real> log(const basic_complex<Real>& z) {
  using std::atan2;
  using std::log;
  return {log(abs(z)), atan2(z.im, z.re)};
}

// log(1 - w), accurate for small |w|. Requires w != 1.
template <class Real>
basic_complex<Real> log1m(const basic_complex<Real>& w) {
  using std::atan2;
  using std::log1p;
  // |1-w|^2 - 1 = -2 Re w + |w|^2
  Real q = -2 * w.re + norm(w);
  return {log1p(q) / 2, atan2(-w.im, Real(1) - w.re)};
}

// n^{-s} = exp(-s ln n) for a positive integer n, real logarithm.
template <class Real>
basic_complex<Real> inv_pow(unsigned long long n, const basic_complex<Real>& s) {
  using std::log;
  Real ln = log(Real(n));
  return exp(basic_complex<Real>(-s.re * ln, -s.im * ln));
}

template <class Real>
bool is_finite(const basic_complex<Real>& z) {
  using std::isfinite;
  return isfinite(z.re) && isfinite(z.im);
}

template <class Real>
const basic_complex<Real>& require_finite(const basic_complex<Real>& z, const char* what) {
  if (!is_finite(z)) throw numeric_error(std::string(what) + ": non-finite result");
  return z;
}

// True when z has zero imaginary part and an integral real part.
template <class Real>
bool is_integer_valued(const basic_complex<Real>& z, long long* out = nullptr) {
  using std::floor;
  if (z.im != 0 || floor(z.re) != z.re) return false;
  if (out) *out = static_cast<long long>(z.re);
  return true;
}

// Neumaier compensated sum, applied per component.
template <class Real>
class compensated_sum {
 public:
  void add(const Real& v) {
    using std::abs;
    Real t = sum_ + v;
    if (abs(sum_) >= abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

template <class Real>
class compensated_complex_sum {
 public:
  void add(const basic_complex<Real>& v) {
    re_.add(v.re);
    im_.add(v.im);
  }
  void add(const compensated_complex_sum& other) { add(other.value()); }
  basic_complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  compensated_sum<Real> re_;
  compensated_sum<Real> im_;
};

}  // namespace vpv
