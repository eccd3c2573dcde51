#pragma once

// Truncated logarithms of visible-point products
//
//   log prod_{gcd(a,b)=1} (1 - x^a y^b)^{-a^{-s} b^{-t}}
//     = sum_{gcd(a,b)=1} -a^{-s} b^{-t} log(1 - x^a y^b)
//
// (and the three-variable analogue), their certified tail bounds, the
// polylogarithm right-hand sides and the comparison report.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "vpv/complex.hpp"
#include "vpv/config.hpp"
#include "vpv/errors.hpp"
#include "vpv/lattice.hpp"
#include "vpv/polylog.hpp"

namespace vpv {

// Where the right-hand side takes its first factor from when a case is
// evaluated in closed form. The second factor is always the rational
// closed form of Li at a non-positive integer order.
enum class constant_source {
  polylog_series,     // Li_s(x) by series
  li1_log,            // -log(1 - x)
  zeta_series,        // zeta(s) by zeta_real
  pi_squared_over_6,  // zeta(2)
  pi_fourth_over_90,  // zeta(4)
  ln2,                // Li_1(1/2)
  li2_half_value,     // pi^2/12 - (ln 2)^2 / 2
};

enum class rhs_form { polylog_product, closed_form };

template <class Real>
struct identity_case {
  using complex = basic_complex<Real>;

  std::string name;
  int dimension = 2;
  complex s;      // first order
  complex t;      // second order, 3D only; 2D uses 1 - s
  complex x, y, z;
  bool unit_x = false;  // x = 1 exactly, zeta(s) takes the place of Li_s(x)
  rhs_form form = rhs_form::polylog_product;
  constant_source constant = constant_source::polylog_series;

  // Orders of the factors, with the last one fixed by the constraint.
  complex order(int i) const {
    if (dimension == 2) return i == 0 ? s : complex(1) - s;
    if (i == 0) return s;
    if (i == 1) return t;
    return complex(1) - s - t;
  }
};

template <class Real>
identity_case<Real> make_case_2d(basic_complex<Real> s, basic_complex<Real> x,
                                 basic_complex<Real> y) {
  identity_case<Real> c;
  c.dimension = 2;
  c.s = s;
  c.x = x;
  c.y = y;
  return c;
}

template <class Real>
identity_case<Real> make_case_3d(basic_complex<Real> s, basic_complex<Real> t,
                                 basic_complex<Real> x, basic_complex<Real> y,
                                 basic_complex<Real> z) {
  identity_case<Real> c;
  c.dimension = 3;
  c.s = s;
  c.t = t;
  c.x = x;
  c.y = y;
  c.z = z;
  return c;
}

template <class Real>
struct truncation_spec {
  int degree_cap = 0;
  Real tol{0};
  Real tail_bound{0};
};

template <class Real>
struct lattice_sum {
  basic_complex<Real> value;
  std::uint64_t terms = 0;
  truncation_spec<Real> truncation;
};

template <class Real>
struct identity_report {
  basic_complex<Real> lhs_log;
  basic_complex<Real> rhs_log;
  Real abs_err{0};
  Real rel_err{0};
  truncation_spec<Real> truncation;
  std::uint64_t terms = 0;
};

inline constexpr double rel_err_floor = 1e-300;

// Bound on sum_{d > N} C(d-1, dim-1) d^sigma r^d: the number of positive
// dim-tuples with coordinate sum d, times the weight envelope. The ratio
// of consecutive terms decreases in d, so past d = N+1 it is at most
//   q = ((N+1)/(N+2-dim)) ((N+2)/(N+1))^sigma r
// and the tail is dominated by a geometric series. Negative while q >= 1.
template <class Real>
Real lattice_tail_envelope(int dim, const Real& sigma, const Real& r, int N) {
  using std::exp;
  using std::log;
  using std::pow;
  if (r == 0) return Real(0);
  if (N < dim) return Real(-1);
  const Real n1 = Real(N + 1);
  Real q = n1 / Real(N + 2 - dim) * pow((n1 + 1) / n1, sigma) * r;
  if (q >= 1) return Real(-1);
  // C(N, dim-1)
  Real count(1);
  for (int i = 1; i < dim; ++i) count = count * Real(N + 1 - i) / Real(i);
  Real first = count * exp(sigma * log(n1) + n1 * log(r));
  return first / (1 - q);
}

namespace detail {

template <class Real>
Real negative_part(const basic_complex<Real>& s) {
  return s.re < 0 ? Real(-s.re) : Real(0);
}

// Envelope times the 1/(1-|w|) factor from |log(1-w)| <= |w|/(1-|w|).
template <class Real>
Real log_product_tail(int dim, const Real& sigma, const Real& r, int N) {
  using std::pow;
  Real env = lattice_tail_envelope(dim, sigma, r, N);
  if (env < 0) return env;
  return env / (1 - pow(r, N + 1));
}

template <class Real>
std::vector<basic_complex<Real>> power_table(const basic_complex<Real>& x, int n) {
  std::vector<basic_complex<Real>> t(static_cast<std::size_t>(n) + 1);
  t[0] = basic_complex<Real>(1);
  for (int i = 1; i <= n; ++i) t[i] = t[i - 1] * x;
  return t;
}

template <class Real>
std::vector<basic_complex<Real>> weight_table(const basic_complex<Real>& s, int n) {
  std::vector<basic_complex<Real>> t(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) t[i] = inv_pow(static_cast<unsigned long long>(i), s);
  return t;
}

inline constexpr int diagonal_block = 32;

// Evaluates fn(first_diag, last_diag) over fixed blocks of diagonals and
// reduces the block sums in block order, so the result does not depend on
// the thread count.
template <class Real, class Fn>
std::pair<basic_complex<Real>, std::uint64_t> sum_diagonal_blocks(int first, int last,
                                                                  unsigned threads, Fn fn) {
  if (last < first) return {basic_complex<Real>(0), 0};
  const int nblocks = (last - first) / diagonal_block + 1;
  std::vector<compensated_complex_sum<Real>> sums(nblocks);
  std::vector<std::uint64_t> counts(nblocks, 0);
  auto run = [&](int worker, int stride) {
    for (int i = worker; i < nblocks; i += stride) {
      int lo = first + i * diagonal_block;
      int hi = std::min(last, lo + diagonal_block - 1);
      counts[i] = fn(lo, hi, sums[i]);
    }
  };
  const int nthreads = static_cast<int>(std::clamp<unsigned>(threads, 1, nblocks));
  if (nthreads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(run, w, nthreads);
    for (auto& th : pool) th.join();
  }
  compensated_complex_sum<Real> total;
  std::uint64_t n = 0;
  for (int i = 0; i < nblocks; ++i) {
    total.add(sums[i]);
    n += counts[i];
  }
  return {total.value(), n};
}

}  // namespace detail

// Tail bound of the 2D log-sum truncated at a+b <= N with orders (s, t).
template <class Real>
Real log_product_tail_2d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                         const Real& r, int N) {
  return detail::log_product_tail(2, detail::negative_part(s) + detail::negative_part(t), r, N);
}

template <class Real>
Real log_product_tail_3d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                         const basic_complex<Real>& u, const Real& r, int N) {
  Real sigma = detail::negative_part(s) + detail::negative_part(t) + detail::negative_part(u);
  return detail::log_product_tail(3, sigma, r, N);
}

// Smallest admissible cap whose tail bound meets tol.
template <class Real, class TailFn>
truncation_spec<Real> choose_degree_cap(int min_cap, const Real& tol, const numeric_config& cfg,
                                        TailFn tail) {
  Real best(-1);
  for (int N = min_cap; N <= cfg.degree_cap_max; ++N) {
    Real b = tail(N);
    if (b >= 0 && (best < 0 || b < best)) best = b;
    if (b >= 0 && b <= tol) return {N, tol, b};
  }
  double achievable = best < 0 ? HUGE_VAL : static_cast<double>(best);
  throw tail_bound_exceeds_tol("no degree cap up to " + std::to_string(cfg.degree_cap_max) +
                                   " reaches tol; best tail bound " + std::to_string(achievable),
                               achievable);
}

// sum over visible (a,b), a+b <= N of -a^{-s} b^{-t} log(1 - x^a y^b).
// The orders are taken as given, without the s+t=1 constraint.
template <class Real>
lattice_sum<Real> log_product_2d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                                 const basic_complex<Real>& x, const basic_complex<Real>& y,
                                 int N, unsigned threads = 1) {
  using C = basic_complex<Real>;
  if (N < 2) throw domain_error("log_product_2d: degree cap must be at least 2");
  if (!(abs(x) < 1) || !(abs(y) < 1)) throw domain_error("log_product_2d: |x|, |y| must be < 1");
  const auto xp = detail::power_table(x, N);
  const auto yp = detail::power_table(y, N);
  const auto ws = detail::weight_table(s, N);
  const auto wt = detail::weight_table(t, N);
  auto block = [&](int lo, int hi, compensated_complex_sum<Real>& acc) {
    std::uint64_t n = 0;
    for (const auto& p : visible_points_2d(static_cast<lattice_int>(lo),
                                           static_cast<lattice_int>(hi))) {
      C w = xp[p.a] * yp[p.b];
      acc.add(-(ws[p.a] * wt[p.b]) * log1m(w));
      ++n;
    }
    return n;
  };
  auto [value, terms] = detail::sum_diagonal_blocks<Real>(2, N, threads, block);
  lattice_sum<Real> out;
  out.value = require_finite(value, "log_product_2d");
  out.terms = terms;
  Real r = std::max(abs(x), abs(y));
  out.truncation = {N, Real(0), log_product_tail_2d(s, t, r, N)};
  return out;
}

template <class Real>
lattice_sum<Real> log_product_3d(const basic_complex<Real>& s, const basic_complex<Real>& t,
                                 const basic_complex<Real>& u, const basic_complex<Real>& x,
                                 const basic_complex<Real>& y, const basic_complex<Real>& z,
                                 int N, unsigned threads = 1) {
  using C = basic_complex<Real>;
  if (N < 3) throw domain_error("log_product_3d: degree cap must be at least 3");
  if (!(abs(x) < 1) || !(abs(y) < 1) || !(abs(z) < 1))
    throw domain_error("log_product_3d: |x|, |y|, |z| must be < 1");
  const auto xp = detail::power_table(x, N);
  const auto yp = detail::power_table(y, N);
  const auto zp = detail::power_table(z, N);
  const auto ws = detail::weight_table(s, N);
  const auto wt = detail::weight_table(t, N);
  const auto wu = detail::weight_table(u, N);
  auto block = [&](int lo, int hi, compensated_complex_sum<Real>& acc) {
    std::uint64_t n = 0;
    for (const auto& p : visible_points_3d(static_cast<lattice_int>(lo),
                                           static_cast<lattice_int>(hi))) {
      C w = xp[p.a] * yp[p.b] * zp[p.c];
      acc.add(-(ws[p.a] * wt[p.b] * wu[p.c]) * log1m(w));
      ++n;
    }
    return n;
  };
  auto [value, terms] = detail::sum_diagonal_blocks<Real>(3, N, threads, block);
  lattice_sum<Real> out;
  out.value = require_finite(value, "log_product_3d");
  out.terms = terms;
  Real r = std::max({abs(x), abs(y), abs(z)});
  out.truncation = {N, Real(0), log_product_tail_3d(s, t, u, r, N)};
  return out;
}

// x = 1 with real s > 1: sum over visible (a,b) of -a^{-s} b^{-t} log(1 - y^b).
// The box a, b <= N is summed directly. For each b the coprime tail a > N is
//   sum_{d | b} mu(d) d^{-s} sum_{m > N/d} m^{-s},
// with the inner tails by Euler-Maclaurin. b > N is dropped and bounded
// using sum_{gcd(a,b)=1} a^{-s} <= zeta(s) <= 1 + 1/(s-1).
template <class Real>
lattice_sum<Real> log_product_unit_x(const Real& s, const basic_complex<Real>& t,
                                     const basic_complex<Real>& y, int N,
                                     const Real& inner_tol) {
  using C = basic_complex<Real>;
  using std::exp;
  using std::log;
  if (N < 2) throw domain_error("log_product_unit_x: degree cap must be at least 2");
  if (!(s > 1)) throw domain_error("log_product_unit_x: requires s > 1");
  if (!(abs(y) < 1)) throw domain_error("log_product_unit_x: |y| must be < 1");

  const auto yp = detail::power_table(y, N);
  const auto wt = detail::weight_table(t, N);
  std::vector<Real> ws(static_cast<std::size_t>(N) + 1);
  for (int a = 1; a <= N; ++a) ws[a] = exp(-s * log(Real(a)));

  std::map<std::uint64_t, series_result<Real>> tails;
  auto tail_from = [&](std::uint64_t M) -> const series_result<Real>& {
    auto it = tails.find(M);
    if (it == tails.end()) it = tails.emplace(M, detail::zeta_tail(s, M, inner_tol)).first;
    return it->second;
  };

  compensated_complex_sum<Real> acc;
  Real em_bound(0);
  std::uint64_t terms = 0;
  for (int b = 1; b <= N; ++b) {
    compensated_sum<Real> coprime;
    for (int a = 1; a <= N; ++a) {
      if (binary_gcd(a, b) == 1) {
        coprime.add(ws[a]);
        ++terms;
      }
    }
    // Squarefree divisors of b with their Moebius signs.
    std::vector<std::uint64_t> primes;
    std::uint64_t rem = b;
    for (std::uint64_t p = 2; p * p <= rem; ++p) {
      if (rem % p == 0) {
        primes.push_back(p);
        while (rem % p == 0) rem /= p;
      }
    }
    if (rem > 1) primes.push_back(rem);
    Real tail_weight_bound(0);
    for (std::uint64_t mask = 0; mask < (1ull << primes.size()); ++mask) {
      std::uint64_t d = 1;
      int sign = 1;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1ull << i)) {
          d *= primes[i];
          sign = -sign;
        }
      const auto& tr = tail_from(static_cast<std::uint64_t>(N) / d);
      Real dw = exp(-s * log(Real(d)));
      coprime.add(Real(sign) * dw * tr.value.re);
      tail_weight_bound += dw * tr.tail_bound;
    }
    C lg = -log1m(yp[b]);
    acc.add(wt[b] * lg * coprime.value());
    em_bound += abs(wt[b]) * abs(lg) * tail_weight_bound;
  }

  lattice_sum<Real> out;
  out.value = require_finite(acc.value(), "log_product_unit_x");
  out.terms = terms;
  Real zeta_bound = 1 + 1 / (s - 1);
  Real env = detail::log_product_tail(1, detail::negative_part(t), abs(y), N);
  out.truncation = {N, Real(0), env < 0 ? env : zeta_bound * env + em_bound};
  return out;
}

namespace detail {

template <class Real>
Real rhs_series_tol(const Real& tol) {
  using std::max;
  Real floor_tol = std::numeric_limits<Real>::epsilon() * 64;
  return max(tol * Real(1e-4), floor_tol);
}

}  // namespace detail

// Li_order(arg): rational closed form for non-positive integer orders,
// -log(1-z) for order 1, series otherwise.
template <class Real>
basic_complex<Real> polylog_value(const basic_complex<Real>& order, const basic_complex<Real>& arg,
                                  const Real& tol, const numeric_config& cfg = default_config()) {
  long long n = 0;
  if (is_integer_valued(order, &n)) {
    if (n >= -4 && n <= 1) return polylog_closed_form(static_cast<int>(n), arg);
    if (n < -4) return polylog_neg_int(static_cast<unsigned>(-n), arg);
  }
  return polylog(order, arg, tol, cfg).value;
}

template <class Real>
void validate_case(const identity_case<Real>& c, const numeric_config& cfg = default_config()) {
  if (c.dimension != 2 && c.dimension != 3) throw domain_error("identity case: dimension must be 2 or 3");
  auto inside = [](const basic_complex<Real>& v) { return is_finite(v) && abs(v) < 1; };
  if (!is_finite(c.s) || !is_finite(c.t)) throw domain_error("identity case: non-finite order");
  if (c.unit_x) {
    if (c.dimension != 2) throw domain_error("identity case: x = 1 only in two dimensions");
    if (c.s.im != 0 || !(c.s.re > Real(1) + Real(cfg.zeta_margin)))
      throw domain_error("identity case: x = 1 requires real s > 1");
  } else if (!inside(c.x)) {
    throw domain_error("identity case: |x| must be < 1");
  }
  if (!inside(c.y)) throw domain_error("identity case: |y| must be < 1");
  if (c.dimension == 3 && !inside(c.z)) throw domain_error("identity case: |z| must be < 1");
}

// Right-hand-side exponent: Li_s(x) Li_{1-s}(y), or Li_s(x) Li_t(y) Li_{1-s-t}(z).
template <class Real>
basic_complex<Real> rhs_log(const identity_case<Real>& c, const Real& tol,
                            const numeric_config& cfg = default_config()) {
  using C = basic_complex<Real>;
  namespace k = boost::math::constants;
  validate_case(c, cfg);
  const Real stol = detail::rhs_series_tol(tol);
  if (c.dimension == 3)
    return polylog_value(c.order(0), c.x, stol, cfg) * polylog_value(c.order(1), c.y, stol, cfg) *
           polylog_value(c.order(2), c.z, stol, cfg);

  C second;
  C first;
  if (c.form == rhs_form::closed_form) {
    long long n = 0;
    if (!is_integer_valued(c.order(1), &n) || n > 0 || n < -4)
      throw domain_error("rhs_log: closed form needs 1 - s in {0, -1, -2, -3, -4}");
    second = polylog_closed_form(static_cast<int>(n), c.y);
    const Real ln2 = k::ln_two<Real>();
    const Real pi = k::pi<Real>();
    switch (c.constant) {
      case constant_source::polylog_series:
        first = polylog(c.s, c.x, stol, cfg).value;
        break;
      case constant_source::li1_log:
        first = -log1m(c.x);
        break;
      case constant_source::zeta_series:
        first = zeta_real(c.s.re, stol, cfg).value;
        break;
      case constant_source::pi_squared_over_6:
        first = C(pi * pi / 6);
        break;
      case constant_source::pi_fourth_over_90:
        first = C(pi * pi * pi * pi / 90);
        break;
      case constant_source::ln2:
        first = C(ln2);
        break;
      case constant_source::li2_half_value:
        first = C(pi * pi / 12 - ln2 * ln2 / 2);
        break;
    }
  } else {
    first = c.unit_x ? zeta_real(c.s.re, stol, cfg).value : polylog_value(c.s, c.x, stol, cfg);
    second = polylog_value(c.order(1), c.y, stol, cfg);
  }
  return require_finite(first * second, "rhs_log");
}

// Left-hand-side log at a given cap.
template <class Real>
lattice_sum<Real> lhs_log_at(const identity_case<Real>& c, int N, const Real& tol,
                             const numeric_config& cfg = default_config()) {
  validate_case(c, cfg);
  lattice_sum<Real> out;
  if (c.dimension == 3) {
    out = log_product_3d(c.order(0), c.order(1), c.order(2), c.x, c.y, c.z, N, cfg.threads);
  } else if (c.unit_x) {
    out = log_product_unit_x(c.s.re, c.order(1), c.y, N, tol * Real(1e-3));
  } else {
    out = log_product_2d(c.order(0), c.order(1), c.x, c.y, N, cfg.threads);
  }
  out.truncation.tol = tol;
  return out;
}

// Tail bound of the left-hand side at a given cap, without evaluating it.
// For x = 1 this covers the dropped b > N part only.
template <class Real>
Real lhs_tail_bound(const identity_case<Real>& c, int N) {
  if (c.dimension == 3) {
    Real r = std::max({abs(c.x), abs(c.y), abs(c.z)});
    return log_product_tail_3d(c.order(0), c.order(1), c.order(2), r, N);
  }
  if (c.unit_x) {
    Real env = detail::log_product_tail(1, detail::negative_part(c.order(1)), abs(c.y), N);
    return env < 0 ? env : (1 + 1 / (c.s.re - 1)) * env;
  }
  return log_product_tail_2d(c.order(0), c.order(1), std::max(abs(c.x), abs(c.y)), N);
}

// Left-hand side with the cap chosen from the tail formula to meet tol.
template <class Real>
lattice_sum<Real> lhs_log(const identity_case<Real>& c, const Real& tol,
                          const numeric_config& cfg = default_config()) {
  validate_case(c, cfg);
  const int min_cap = c.unit_x ? 16 : c.dimension;
  // x = 1 leaves half the budget for the Euler-Maclaurin remainders.
  const Real target = c.unit_x ? tol / 2 : tol;
  auto spec = choose_degree_cap<Real>(min_cap, target, cfg,
                                      [&](int N) { return lhs_tail_bound(c, N); });
  auto out = lhs_log_at(c, spec.degree_cap, tol, cfg);
  if (out.truncation.tail_bound < 0 || out.truncation.tail_bound > tol)
    throw tail_bound_exceeds_tol("lhs_log: tail bound above tol",
                                 static_cast<double>(out.truncation.tail_bound));
  return out;
}

template <class Real>
identity_report<Real> make_report(const basic_complex<Real>& lhs, const basic_complex<Real>& rhs,
                                  const truncation_spec<Real>& trunc, std::uint64_t terms) {
  identity_report<Real> rep;
  rep.lhs_log = lhs;
  rep.rhs_log = rhs;
  rep.abs_err = abs(lhs - rhs);
  rep.rel_err = rep.abs_err / std::max(abs(rhs), Real(rel_err_floor));
  rep.truncation = trunc;
  rep.terms = terms;
  return rep;
}

template <class Real>
identity_report<Real> verify(const identity_case<Real>& c, const Real& tol,
                             const numeric_config& cfg = default_config()) {
  if (!(tol > 0)) throw domain_error("verify: tol must be positive");
  auto lhs = lhs_log(c, tol, cfg);
  auto rhs = rhs_log(c, tol, cfg);
  return make_report(lhs.value, rhs, lhs.truncation, lhs.terms);
}

}  // namespace vpv
