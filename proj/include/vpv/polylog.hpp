#pragma once

// Polylogarithm Li_s(z) for complex order and |z| < 1, the rational closed
// forms for non-positive integer orders, and zeta(s) for real s > 1.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>

#include "vpv/complex.hpp"
#include "vpv/config.hpp"
#include "vpv/errors.hpp"

namespace vpv {

template <class Real>
struct series_result {
  basic_complex<Real> value;
  std::uint64_t terms_used = 0;
  Real tail_bound{0};
};

namespace detail {

// Bound on sum_{k > K} r^k k^{-sigma_re} given K terms were summed.
// Consecutive ratios are at most q = r ((K+2)/(K+1))^{max(0,-sigma_re)},
// so the tail is dominated by a geometric series started at term K+1.
// Returns a negative value while q >= 1 (terms still growing).
template <class Real>
Real geometric_tail(const Real& r, const Real& sigma_re, std::uint64_t K) {
  using std::exp;
  using std::log;
  using std::pow;
  if (r == 0) return Real(0);
  Real grow = sigma_re < 0 ? -sigma_re : Real(0);
  Real k1 = Real(K + 1);
  Real q = r * pow((k1 + 1) / k1, grow);
  if (q >= 1) return Real(-1);
  Real next = exp(Real(K + 1) * log(r) - sigma_re * log(k1));
  return next / (1 - q);
}

}  // namespace detail

// Li_s(z) = sum_{k>=1} z^k k^{-s} truncated once the certified tail is
// below tol.
template <class Real>
series_result<Real> polylog(const basic_complex<Real>& s, const basic_complex<Real>& z,
                            const Real& tol, const numeric_config& cfg = default_config()) {
  if (!(tol > 0)) throw domain_error("polylog: tol must be positive");
  if (!is_finite(s) || !is_finite(z)) throw domain_error("polylog: non-finite argument");
  const Real r = abs(z);
  if (r > Real(1) - Real(cfg.domain_margin))
    throw domain_error("polylog: |z| too close to or beyond 1");

  series_result<Real> out;
  if (r == 0) {
    out.terms_used = 1;
    return out;
  }
  compensated_complex_sum<Real> acc;
  basic_complex<Real> zk(1);
  for (std::uint64_t k = 1; k <= cfg.term_cap; ++k) {
    zk *= z;
    acc.add(zk * inv_pow(k, s));
    Real bound = detail::geometric_tail(r, s.re, k);
    if (bound >= 0 && bound <= tol) {
      out.value = require_finite(acc.value(), "polylog");
      out.terms_used = k;
      out.tail_bound = bound;
      return out;
    }
  }
  throw non_convergence("polylog: term cap exceeded");
}

// Sum of a fixed number of series terms, with the tail bound that applies
// to the remainder (negative when no bound is available yet).
template <class Real>
series_result<Real> polylog_terms(const basic_complex<Real>& s, const basic_complex<Real>& z,
                                  std::uint64_t terms) {
  series_result<Real> out;
  compensated_complex_sum<Real> acc;
  basic_complex<Real> zk(1);
  for (std::uint64_t k = 1; k <= terms; ++k) {
    zk *= z;
    acc.add(zk * inv_pow(k, s));
  }
  out.value = acc.value();
  out.terms_used = terms;
  out.tail_bound = detail::geometric_tail(abs(z), s.re, terms);
  return out;
}

// Closed forms of Li_n for n in {1, 0, -1, -2, -3, -4}.
template <class Real>
basic_complex<Real> polylog_closed_form(int n, const basic_complex<Real>& z) {
  using C = basic_complex<Real>;
  if (z.re == 1 && z.im == 0) throw domain_error("polylog_closed_form: pole at z = 1");
  const C one(1);
  const C w = one - z;
  switch (n) {
    case 1:
      if (z.im == 0 && z.re >= 1) throw domain_error("polylog_closed_form: Li_1 branch cut");
      return -log1m(z);
    case 0:
      return z / w;
    case -1:
      return z / (w * w);
    case -2:
      return z * (one + z) / (w * w * w);
    case -3:
      return z * (one + C(4) * z + z * z) / (w * w * w * w);
    case -4:
      return z * (one + z) * (one + C(10) * z + z * z) / (w * w * w * w * w);
    default:
      throw domain_error("polylog_closed_form: order must be one of 1, 0, -1, -2, -3, -4");
  }
}

namespace detail {

// Numerators P_n with Li_{-n}(z) = P_n(z) / (1-z)^{n+1}, from
// P_{n+1} = z ((1-z) P_n' + (n+1) P_n), P_0 = z. Coefficients are the
// Eulerian numbers shifted by one degree; the table stops before the
// first order that would overflow 64 bits.
inline const std::vector<std::vector<std::uint64_t>>& eulerian_numerators() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t;
    t.push_back({0, 1});
    for (unsigned n = 0;; ++n) {
      const auto& p = t.back();
      // q = (1-z) p' + (n+1) p, computed with signed intermediates.
      std::vector<__int128> q(p.size(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        __int128 c = p[i];
        q[i] += c * (n + 1);
        if (i > 0) {
          q[i - 1] += c * static_cast<__int128>(i);
          q[i] -= c * static_cast<__int128>(i);
        }
      }
      std::vector<std::uint64_t> next(p.size() + 1, 0);
      bool overflow = false;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < 0 || q[i] > static_cast<__int128>(UINT64_MAX)) overflow = true;
        next[i + 1] = static_cast<std::uint64_t>(q[i]);
      }
      if (overflow) break;
      while (next.size() > 2 && next.back() == 0) next.pop_back();
      t.push_back(std::move(next));
    }
    return t;
  }();
  return table;
}

template <class Real>
basic_complex<Real> eval_numerator(unsigned n, const basic_complex<Real>& z) {
  const auto& table = eulerian_numerators();
  if (n >= table.size())
    throw domain_error("polylog_neg_int: order beyond exact coefficient table (max " +
                       std::to_string(table.size() - 1) + ")");
  const auto& c = table[n];
  basic_complex<Real> acc(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= z;
    acc += basic_complex<Real>(Real(c[i]));
  }
  return acc;
}

}  // namespace detail

// Largest n accepted by polylog_neg_int.
inline unsigned polylog_neg_int_max_order() {
  return static_cast<unsigned>(detail::eulerian_numerators().size() - 1);
}

// Integer coefficients of the numerator of Li_{-n}, lowest degree first.
inline const std::vector<std::uint64_t>& polylog_neg_int_numerator(unsigned n) {
  const auto& table = detail::eulerian_numerators();
  if (n >= table.size()) throw domain_error("polylog_neg_int: order beyond table");
  return table[n];
}

// Li_{-n}(z) for n >= 0, any z != 1.
template <class Real>
basic_complex<Real> polylog_neg_int(unsigned n, const basic_complex<Real>& z) {
  if (z.re == 1 && z.im == 0) throw domain_error("polylog_neg_int: pole at z = 1");
  const basic_complex<Real> w = basic_complex<Real>(1) - z;
  basic_complex<Real> den(1);
  for (unsigned i = 0; i <= n; ++i) den *= w;
  return require_finite(detail::eval_numerator(n, z) / den, "polylog_neg_int");
}

// Li_{-n}(1 - delta), taking the distance to the pole directly.
template <class Real>
Real polylog_neg_int_near_one(unsigned n, const Real& delta) {
  using std::pow;
  if (!(delta > 0)) throw domain_error("polylog_neg_int_near_one: delta must be positive");
  Real y = Real(1) - delta;
  Real num = detail::eval_numerator(n, basic_complex<Real>(y)).re;
  Real den(1);
  for (unsigned i = 0; i <= n; ++i) den *= delta;
  return num / den;
}

namespace detail {

// sum_{m > M} m^{-s} for real s > 1 by Euler-Maclaurin at a cut point
// K >= M+1. For f(x) = x^{-s} every odd derivative is negative, so the
// remainder after p correction terms is bounded by the first omitted one.
template <class Real>
series_result<Real> zeta_tail(const Real& s, std::uint64_t M, const Real& tol) {
  using std::abs;
  using std::exp;
  using std::log;
  std::uint64_t K = std::max<std::uint64_t>(M + 1, 12);
  for (int attempt = 0; attempt < 40; ++attempt, K *= 2) {
    compensated_sum<Real> acc;
    for (std::uint64_t m = M + 1; m < K; ++m) acc.add(exp(-s * log(Real(m))));
    const Real lnK = log(Real(K));
    const Real fK = exp(-s * lnK);
    acc.add(exp((1 - s) * lnK) / (s - 1));
    acc.add(fK / 2);
    // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * K^{-s-2j+1}
    Real rising = s;      // s(s+1)...(s+2j-2)
    Real kpow = fK / K;   // K^{-s-2j+1}
    Real fact(2);         // (2j)!
    Real prev_mag(-1);
    for (int j = 1; j < 200; ++j) {
      Real term = boost::math::bernoulli_b2n<Real>(j) / fact * rising * kpow;
      Real mag = abs(term);
      if (mag <= tol) {
        series_result<Real> out;
        out.value = basic_complex<Real>(acc.value());
        out.terms_used = (K - M - 1) + static_cast<std::uint64_t>(j);
        out.tail_bound = mag;
        return out;
      }
      if (prev_mag >= 0 && mag >= prev_mag) break;  // asymptotic series turned
      prev_mag = mag;
      acc.add(term);
      rising *= (s + 2 * j - 1) * (s + 2 * j);
      kpow /= Real(K) * Real(K);
      fact *= Real(2 * j + 1) * Real(2 * j + 2);
    }
  }
  throw non_convergence("zeta_tail: could not reach tolerance");
}

}  // namespace detail

// zeta(s) for real s > 1.
template <class Real>
series_result<Real> zeta_real(const Real& s, const Real& tol,
                              const numeric_config& cfg = default_config()) {
  using std::isfinite;
  if (!(tol > 0)) throw domain_error("zeta_real: tol must be positive");
  if (!isfinite(s) || s < Real(1) + Real(cfg.zeta_margin))
    throw domain_error("zeta_real: s must exceed 1 by the configured margin");
  return detail::zeta_tail(s, 0, tol);
}

}  // namespace vpv
