#pragma once

// Brute-force full-lattice sums. Expanding each log(1 - w) of the visible
// point product and regrouping k(a,b) = (m,n) turns the left-hand side into
//
//   sum_{m,n >= 1} m^{-s} n^{-t} x^m y^n      (when s + t = 1),
//
// which is summed here directly over m+n <= cap. Nothing in this file uses
// the lattice enumeration or the product evaluators.

#include <cmath>
#include <cstdint>

#include "vpv/complex.hpp"
#include "vpv/errors.hpp"
#include "vpv/polylog.hpp"
#include "vpv/products.hpp"

namespace vpv {

namespace oracle_detail {

// sum_{d > cap} binom(d-1, dim-1) d^sigma r^d, bounded by summing terms
// until their ratio drops below 1 and closing with a geometric series.
template <class Real>
Real full_lattice_tail(int dim, const Real& sigma, const Real& r, int cap) {
  using std::exp;
  using std::log;
  if (r == 0) return Real(0);
  auto term = [&](int d) {
    Real c(1);
    for (int i = 1; i < dim; ++i) c = c * Real(d - i) / Real(i);
    return c * exp(sigma * log(Real(d)) + Real(d) * log(r));
  };
  Real acc(0);
  for (int d = cap + 1; d < cap + 100000; ++d) {
    Real cur = term(d);
    Real ratio = term(d + 1) / cur;
    // the ratio is decreasing in d, so from here on terms shrink at least
    // geometrically with this ratio
    if (ratio < 1 && d > dim) return acc + cur / (1 - ratio);
    acc += cur;
  }
  return Real(-1);
}

}  // namespace oracle_detail

// Full-lattice sum with explicit orders, m + n <= cap.
template <class Real>
series_result<Real> brute_force_log_2d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                                       const basic_complex<Real>& x, const basic_complex<Real>& y,
                                       int cap) {
  using C = basic_complex<Real>;
  if (!(abs(x) < 1) || !(abs(y) < 1)) throw domain_error("brute_force_log_2d: |x|, |y| must be < 1");
  compensated_complex_sum<Real> acc;
  C xm(1);
  for (int m = 1; m < cap; ++m) {
    xm *= x;
    C wm = xm * inv_pow(static_cast<unsigned long long>(m), s);
    C yn(1);
    for (int n = 1; m + n <= cap; ++n) {
      yn *= y;
      acc.add(wm * yn * inv_pow(static_cast<unsigned long long>(n), t));
    }
  }
  series_result<Real> out;
  out.value = acc.value();
  out.terms_used = static_cast<std::uint64_t>(cap) * (cap - 1) / 2;
  Real sigma = (s.re < 0 ? Real(-s.re) : Real(0)) + (t.re < 0 ? Real(-t.re) : Real(0));
  using std::max;
  out.tail_bound = oracle_detail::full_lattice_tail(2, sigma, max(abs(x), abs(y)), cap);
  return out;
}

template <class Real>
series_result<Real> brute_force_log_3d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                                       const basic_complex<Real>& u, const basic_complex<Real>& x,
                                       const basic_complex<Real>& y, const basic_complex<Real>& z,
                                       int cap) {
  using C = basic_complex<Real>;
  if (!(abs(x) < 1) || !(abs(y) < 1) || !(abs(z) < 1))
    throw domain_error("brute_force_log_3d: |x|, |y|, |z| must be < 1");
  compensated_complex_sum<Real> acc;
  std::uint64_t count = 0;
  C xm(1);
  for (int m = 1; m + 2 <= cap; ++m) {
    xm *= x;
    C wm = xm * inv_pow(static_cast<unsigned long long>(m), s);
    C yn(1);
    for (int n = 1; m + n + 1 <= cap; ++n) {
      yn *= y;
      C wmn = wm * yn * inv_pow(static_cast<unsigned long long>(n), t);
      C zp(1);
      for (int p = 1; m + n + p <= cap; ++p) {
        zp *= z;
        acc.add(wmn * zp * inv_pow(static_cast<unsigned long long>(p), u));
        ++count;
      }
    }
  }
  series_result<Real> out;
  out.value = acc.value();
  out.terms_used = count;
  auto neg = [](const C& v) { return v.re < 0 ? Real(-v.re) : Real(0); };
  using std::max;
  out.tail_bound = oracle_detail::full_lattice_tail(3, neg(s) + neg(t) + neg(u),
                                                    max({abs(x), abs(y), abs(z)}), cap);
  return out;
}

// Oracle for a two-dimensional identity case (t = 1 - s).
template <class Real>
series_result<Real> brute_force_log_2d(const identity_case<Real>& c, int cap) {
  if (c.dimension != 2 || c.unit_x) throw domain_error("brute_force_log_2d: needs a 2D case with |x| < 1");
  return brute_force_log_2d(c.order(0), c.order(1), c.x, c.y, cap);
}

template <class Real>
series_result<Real> brute_force_log_3d(const identity_case<Real>& c, int cap) {
  if (c.dimension != 3) throw domain_error("brute_force_log_3d: needs a 3D case");
  return brute_force_log_3d(c.order(0), c.order(1), c.order(2), c.x, c.y, c.z, cap);
}

}  // namespace vpv
