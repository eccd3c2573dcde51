#pragma once

// Named identity instances and the numerical studies built on them:
// special values of Li_k(1/2), the alternating double sum zeta(-3,-1),
// probes toward the trivial zeros (y -> 1) and critical-line scans.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "vpv/complex.hpp"
#include "vpv/config.hpp"
#include "vpv/errors.hpp"
#include "vpv/polylog.hpp"
#include "vpv/products.hpp"

namespace vpv {

// ---------------------------------------------------------------------------
// zeta(-3,-1) = sum_{m>n>0} (-1)^{m+n} m^{-3} n^{-1}

// Partial double sum over m <= M, with the certified bound on m > M.
// Writing S(m-1) = -ln 2 + rho_m with |rho_m| <= 1/m and sign (-1)^{m+1},
// the tail splits into an alternating series bounded by ln2 (M+1)^{-3} and
// a one-signed series bounded by 1/(3 M^3).
template <class Real>
series_result<Real> euler_zagier_31_partial(std::uint64_t M) {
  using std::log;
  compensated_sum<Real> acc;
  compensated_sum<Real> inner;  // S(m-1) = sum_{n<m} (-1)^n / n
  for (std::uint64_t m = 2; m <= M; ++m) {
    const std::uint64_t n = m - 1;
    inner.add((n % 2 ? Real(-1) : Real(1)) / Real(n));
    Real mm = Real(m);
    Real term = inner.value() / (mm * mm * mm);
    acc.add(m % 2 ? Real(-term) : term);
  }
  series_result<Real> out;
  out.value = basic_complex<Real>(acc.value());
  out.terms_used = M < 2 ? 1 : M - 1;
  Real M1 = Real(M + 1);
  Real Mr = Real(M < 1 ? 1 : M);
  out.tail_bound = log(Real(2)) / (M1 * M1 * M1) + 1 / (3 * Mr * Mr * Mr);
  return out;
}

template <class Real>
series_result<Real> euler_zagier_31(const Real& tol, const numeric_config& cfg = default_config()) {
  using std::cbrt;
  using std::ceil;
  if (!(tol > 0)) throw domain_error("euler_zagier_31: tol must be positive");
  // ln2 (M+1)^{-3} + 1/(3 M^3) <= (ln2 + 1/3) / M^3
  Real need = ceil(cbrt((boost::math::constants::ln_two<Real>() + Real(1) / 3) / tol));
  if (need > Real(cfg.term_cap)) throw non_convergence("euler_zagier_31: term cap exceeded");
  auto M = static_cast<std::uint64_t>(need);
  if (M < 2) M = 2;
  auto out = euler_zagier_31_partial<Real>(M);
  while (out.tail_bound > tol) out = euler_zagier_31_partial<Real>(++M);
  return out;
}

// ---------------------------------------------------------------------------
// Special values of Li_k(1/2).

enum class verdict { matches_printed, matches_corrected, unresolved };

inline const char* to_string(verdict v) {
  switch (v) {
    case verdict::matches_printed: return "MATCHES_PRINTED";
    case verdict::matches_corrected: return "MATCHES_CORRECTED";
    case verdict::unresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

enum class special_constant { none, zeta3, zeta_bar31 };

// sign * coefficient * pi^pi_power * (ln 2)^ln2_power * constant
struct formula_term {
  int sign;
  int num;
  int den;
  int pi_power;
  int ln2_power;
  special_constant constant;
};

struct special_formula {
  std::string name;
  int order;  // k in Li_k(1/2)
  std::vector<formula_term> terms;
};

// The closed forms exactly as printed, including their suspect terms.
inline std::vector<special_formula> printed_special_values() {
  using sc = special_constant;
  return {
      {"LI1_HALF", 1, {{+1, 1, 1, 0, 1, sc::none}}},
      {"LI2_HALF", 2, {{+1, 1, 12, 2, 0, sc::none}, {-1, 1, 2, 0, 2, sc::none}}},
      {"LI3_HALF",
       3,
       {{+1, 1, 6, 0, 3, sc::none}, {-1, 1, 12, 2, 2, sc::none}, {-1, 7, 8, 0, 0, sc::zeta3}}},
      {"LI4_HALF",
       4,
       {{+1, 1, 360, 4, 0, sc::none},
        {-1, 1, 24, 0, 4, sc::none},
        {-1, 1, 24, 2, 4, sc::none},
        {-1, 1, 2, 0, 0, sc::zeta_bar31}}},
  };
}

inline std::string describe(const special_formula& f) {
  std::string out;
  for (const auto& t : f.terms) {
    out += t.sign < 0 ? " - " : (out.empty() ? "" : " + ");
    out += std::to_string(t.num);
    if (t.den != 1) out += "/" + std::to_string(t.den);
    if (t.pi_power) out += "*pi^" + std::to_string(t.pi_power);
    if (t.ln2_power) out += "*ln2^" + std::to_string(t.ln2_power);
    if (t.constant == special_constant::zeta3) out += "*zeta(3)";
    if (t.constant == special_constant::zeta_bar31) out += "*zeta(-3,-1)";
  }
  return out;
}

template <class Real>
struct special_constants {
  Real zeta3;
  Real zeta_bar31;
};

template <class Real>
Real evaluate(const special_formula& f, const special_constants<Real>& k) {
  using std::pow;
  const Real pi = boost::math::constants::pi<Real>();
  const Real ln2 = boost::math::constants::ln_two<Real>();
  compensated_sum<Real> acc;
  for (const auto& t : f.terms) {
    Real v = Real(t.sign) * Real(t.num) / Real(t.den);
    for (int i = 0; i < t.pi_power; ++i) v *= pi;
    for (int i = 0; i < t.ln2_power; ++i) v *= ln2;
    if (t.constant == special_constant::zeta3) v *= k.zeta3;
    if (t.constant == special_constant::zeta_bar31) v *= k.zeta_bar31;
    acc.add(v);
  }
  return acc.value();
}

// Every variant of f obtained by choosing a sign for each term and a
// power in {1, 2, 3, 4} for each ln 2 factor. Includes f itself.
inline std::vector<special_formula> candidate_corrections(const special_formula& f) {
  std::vector<special_formula> out;
  const std::size_t n = f.terms.size();
  std::vector<std::size_t> ln2_terms;
  for (std::size_t i = 0; i < n; ++i)
    if (f.terms[i].ln2_power > 0) ln2_terms.push_back(i);
  const std::size_t sign_combos = std::size_t{1} << n;
  std::size_t power_combos = 1;
  for (std::size_t i = 0; i < ln2_terms.size(); ++i) power_combos *= 4;
  for (std::size_t sm = 0; sm < sign_combos; ++sm) {
    for (std::size_t pm = 0; pm < power_combos; ++pm) {
      special_formula g = f;
      for (std::size_t i = 0; i < n; ++i) g.terms[i].sign = (sm >> i) & 1 ? -1 : +1;
      std::size_t code = pm;
      for (std::size_t idx : ln2_terms) {
        g.terms[idx].ln2_power = static_cast<int>(code % 4) + 1;
        code /= 4;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

template <class Real>
struct special_value_record {
  std::string name;
  std::string printed_form;
  Real printed_form_value{0};
  Real series_value{0};
  std::optional<Real> candidate_corrected_value;
  std::optional<std::string> corrected_form;
  verdict result = verdict::unresolved;
  Real discrepancy{0};
  int candidates_within = 0;  // candidates inside the correction tolerance
};

struct audit_tolerances {
  double printed = 1e-12;    // printed form vs series
  double corrected = 1e-10;  // unique candidate vs series
  double series = 1e-13;     // Li_k(1/2), zeta(3), zeta(-3,-1)
};

template <class Real>
std::vector<special_value_record<Real>> audit_special_values(
    const audit_tolerances& tol = {}, const numeric_config& cfg = default_config()) {
  using std::abs;
  const Real stol = Real(tol.series);
  special_constants<Real> k{zeta_real(Real(3), stol, cfg).value.re,
                            euler_zagier_31(stol, cfg).value.re};
  std::vector<special_value_record<Real>> out;
  for (const auto& f : printed_special_values()) {
    special_value_record<Real> rec;
    rec.name = f.name;
    rec.printed_form = describe(f);
    rec.printed_form_value = evaluate(f, k);
    rec.series_value =
        polylog(basic_complex<Real>(Real(f.order)), basic_complex<Real>(Real(1) / 2), stol, cfg)
            .value.re;
    rec.discrepancy = abs(rec.printed_form_value - rec.series_value);
    if (rec.discrepancy <= Real(tol.printed)) {
      rec.result = verdict::matches_printed;
    } else {
      std::optional<special_formula> match;
      for (const auto& g : candidate_corrections(f)) {
        Real v = evaluate(g, k);
        if (abs(v - rec.series_value) <= Real(tol.corrected)) {
          ++rec.candidates_within;
          match = g;
          rec.candidate_corrected_value = v;
        }
      }
      if (rec.candidates_within == 1) {
        rec.result = verdict::matches_corrected;
        rec.corrected_form = describe(*match);
      } else {
        rec.candidate_corrected_value.reset();
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog of named identity instances.

enum class identity_family { polylog_pair, zeta_pair, half_pair, critical_line };

template <class Real>
struct catalog_entry {
  identity_family family;
  identity_case<Real> instance;
  std::string rhs_description;
  std::optional<std::string> audited_constant;  // printed constant kept for the audit only
};

// prod (1 - x^a y^b)^{-a^{-s} b^{s-1}} = exp(Li_s(x) Li_{1-s}(y)), s = 1..5.
template <class Real>
catalog_entry<Real> polylog_pair(int s, basic_complex<Real> x, basic_complex<Real> y) {
  if (s < 1 || s > 5) throw domain_error("polylog_pair: s must be in 1..5");
  catalog_entry<Real> e;
  e.family = identity_family::polylog_pair;
  e.instance = make_case_2d<Real>(Real(s), x, y);
  e.instance.name = "li" + std::to_string(s) + "_x_li" + std::to_string(1 - s) + "_y";
  e.instance.form = rhs_form::closed_form;
  e.instance.constant = s == 1 ? constant_source::li1_log : constant_source::polylog_series;
  e.rhs_description = s == 1 ? "-log(1-x) * y/(1-y)"
                             : "Li_" + std::to_string(s) + "(x) * Li_" + std::to_string(1 - s) +
                                   "(y) [rational]";
  return e;
}

// x = 1: prod (1 - y^b)^{-a^{-s} b^{s-1}} = exp(zeta(s) Li_{1-s}(y)), s = 2..5.
template <class Real>
catalog_entry<Real> zeta_pair(int s, basic_complex<Real> y) {
  if (s < 2 || s > 5) throw domain_error("zeta_pair: s must be in 2..5");
  catalog_entry<Real> e;
  e.family = identity_family::zeta_pair;
  e.instance = make_case_2d<Real>(Real(s), Real(1), y);
  e.instance.unit_x = true;
  e.instance.name = "zeta" + std::to_string(s) + "_li" + std::to_string(1 - s) + "_y";
  e.instance.form = rhs_form::closed_form;
  switch (s) {
    case 2: e.instance.constant = constant_source::pi_squared_over_6; break;
    case 4: e.instance.constant = constant_source::pi_fourth_over_90; break;
    default: e.instance.constant = constant_source::zeta_series; break;
  }
  e.rhs_description = (s == 2 ? std::string("pi^2/6") : s == 4 ? std::string("pi^4/90")
                                                                : "zeta(" + std::to_string(s) + ")") +
                      " * Li_" + std::to_string(1 - s) + "(y) [rational]";
  return e;
}

// x = 1/2: prod (1 - y^b / 2^a)^{-b^{s-1}/a^s} = exp(Li_s(1/2) Li_{1-s}(y)), s = 1..4.
template <class Real>
catalog_entry<Real> half_pair(int s, basic_complex<Real> y) {
  if (s < 1 || s > 4) throw domain_error("half_pair: s must be in 1..4");
  catalog_entry<Real> e;
  e.family = identity_family::half_pair;
  e.instance = make_case_2d<Real>(Real(s), Real(1) / 2, y);
  e.instance.name = "half_li" + std::to_string(s) + "_li" + std::to_string(1 - s) + "_y";
  e.instance.form = rhs_form::closed_form;
  switch (s) {
    case 1:
      e.instance.constant = constant_source::ln2;
      e.rhs_description = "ln 2 * y/(1-y)";
      break;
    case 2:
      e.instance.constant = constant_source::li2_half_value;
      e.rhs_description = "(pi^2/12 - ln^2 2 / 2) * y/(1-y)^2";
      break;
    default:
      e.instance.constant = constant_source::polylog_series;
      e.rhs_description = "Li_" + std::to_string(s) + "(1/2) [series] * Li_" +
                          std::to_string(1 - s) + "(y) [rational]";
      e.audited_constant = s == 3 ? "LI3_HALF" : "LI4_HALF";
      break;
  }
  return e;
}

// s = 1/2 + iT, t = 1/2 - iT.
template <class Real>
catalog_entry<Real> critical_line(Real T, basic_complex<Real> x, basic_complex<Real> y) {
  catalog_entry<Real> e;
  e.family = identity_family::critical_line;
  e.instance = make_case_2d<Real>(basic_complex<Real>(Real(1) / 2, T), x, y);
  e.instance.name = "critical_line";
  e.instance.form = rhs_form::polylog_product;
  e.rhs_description = "Li_{1/2+iT}(x) * Li_{1/2-iT}(y) [series]";
  return e;
}

template <class Real>
struct catalog_defaults {
  basic_complex<Real> x = Real(3) / 10;
  basic_complex<Real> y = Real(3) / 10;
  Real T = Real(0);
};

// The fourteen named templates instantiated at the given arguments.
template <class Real>
std::vector<catalog_entry<Real>> catalog(const catalog_defaults<Real>& d = {}) {
  std::vector<catalog_entry<Real>> out;
  for (int s = 1; s <= 5; ++s) out.push_back(polylog_pair<Real>(s, d.x, d.y));
  for (int s = 2; s <= 5; ++s) out.push_back(zeta_pair<Real>(s, d.y));
  for (int s = 1; s <= 4; ++s) out.push_back(half_pair<Real>(s, d.y));
  out.push_back(critical_line<Real>(d.T, d.x, d.y));
  return out;
}

// ---------------------------------------------------------------------------
// Trivial-zero probe: Li_{1-order}(y) at y = 1 - delta.

inline const char* trivial_zero_probe_note() {
  return "both log-sides grow without bound as delta -> 0 for fixed x in (0,1): the rational "
         "factor Li_{1-order}(1-delta) diverges like delta^{-order}, so the product tends to "
         "infinity rather than to 1; the identity itself holds at every delta in the table";
}

template <class Real>
struct probe_row {
  Real delta{0};
  basic_complex<Real> lhs_log;
  basic_complex<Real> rhs_log;
  Real abs_err{0};
  Real rhs_exponent_magnitude{0};  // |rhs_log|
  Real rational_factor{0};         // Li_{1-order}(1 - delta)
  int degree_cap = 0;
  Real tail_bound{0};
  std::optional<std::string> error;
};

template <class Real>
struct probe_report {
  int order = 0;
  basic_complex<Real> x;
  std::vector<probe_row<Real>> rows;
  std::string note;
};

template <class Real>
probe_report<Real> trivial_zero_probe(int order, basic_complex<Real> x,
                                      const std::vector<Real>& deltas, const Real& tol,
                                      const numeric_config& cfg = default_config()) {
  using C = basic_complex<Real>;
  if (order < 2 || order > 4) throw domain_error("trivial_zero_probe: order must be 2, 3 or 4");
  if (!is_finite(x) || !(abs(x) < 1)) throw domain_error("trivial_zero_probe: |x| must be < 1");
  for (const auto& d : deltas)
    if (!(d > 0 && d < 1)) throw domain_error("trivial_zero_probe: delta must lie in (0, 1)");
  if (!(tol > 0)) throw domain_error("trivial_zero_probe: tol must be positive");

  probe_report<Real> rep;
  rep.order = order;
  rep.x = x;
  rep.note = trivial_zero_probe_note();
  const C li_x = polylog(C(Real(order)), x, detail::rhs_series_tol(tol), cfg).value;
  for (const auto& d : deltas) {
    probe_row<Real> row;
    row.delta = d;
    row.rational_factor = polylog_neg_int_near_one<Real>(static_cast<unsigned>(order - 1), d);
    row.rhs_log = li_x * C(row.rational_factor);
    row.rhs_exponent_magnitude = abs(row.rhs_log);
    try {
      auto c = make_case_2d<Real>(C(Real(order)), x, C(Real(1) - d));
      auto lhs = lhs_log(c, tol, cfg);
      row.lhs_log = lhs.value;
      row.degree_cap = lhs.truncation.degree_cap;
      row.tail_bound = lhs.truncation.tail_bound;
      row.abs_err = abs(row.lhs_log - row.rhs_log);
    } catch (const tail_bound_exceeds_tol& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Critical-line scan.

template <class Real>
struct scan_row {
  Real T{0};
  basic_complex<Real> lhs_log;
  basic_complex<Real> rhs_log;
  Real abs_err{0};
  basic_complex<Real> li_s_x;
  basic_complex<Real> li_t_y;
  int degree_cap = 0;
  Real tail_bound{0};
  // max over 1 <= a, b <= 100 of |exp(-s ln a - t ln b) - (ab)^{-1/2} exp(iT ln(b/a))|
  Real exponent_form_err{0};
};

// Largest deviation between the two forms of the critical-line weight.
template <class Real>
Real critical_exponent_form_error(const Real& T, int max_coord = 100) {
  using C = basic_complex<Real>;
  using std::cos;
  using std::log;
  using std::max;
  using std::sin;
  using std::sqrt;
  const C s(Real(1) / 2, T);
  const C t(Real(1) / 2, -T);
  Real worst(0);
  for (int a = 1; a <= max_coord; ++a) {
    for (int b = 1; b <= max_coord; ++b) {
      Real la = log(Real(a));
      Real lb = log(Real(b));
      C direct = exp(C(-(s.re * la + t.re * lb), -(s.im * la + t.im * lb)));
      Real phase = T * log(Real(b) / Real(a));
      C rewritten = C(cos(phase), sin(phase)) * (1 / sqrt(Real(a) * Real(b)));
      worst = max(worst, abs(direct - rewritten));
    }
  }
  return worst;
}

template <class Real>
std::vector<scan_row<Real>> critical_line_scan(const std::vector<Real>& Ts, basic_complex<Real> x,
                                               basic_complex<Real> y, const Real& tol,
                                               const numeric_config& cfg = default_config()) {
  using std::isfinite;
  if (!is_finite(x) || !is_finite(y) || !(abs(x) < 1) || !(abs(y) < 1))
    throw domain_error("critical_line_scan: |x|, |y| must be < 1");
  if (!(tol > 0)) throw domain_error("critical_line_scan: tol must be positive");
  std::vector<scan_row<Real>> rows;
  for (const auto& T : Ts) {
    if (!isfinite(T)) throw domain_error("critical_line_scan: T must be finite");
    auto c = critical_line<Real>(T, x, y).instance;
    scan_row<Real> row;
    row.T = T;
    auto lhs = lhs_log(c, tol, cfg);
    const Real stol = detail::rhs_series_tol(tol);
    row.li_s_x = polylog(c.order(0), x, stol, cfg).value;
    row.li_t_y = polylog(c.order(1), y, stol, cfg).value;
    row.lhs_log = lhs.value;
    row.rhs_log = row.li_s_x * row.li_t_y;
    row.abs_err = abs(row.lhs_log - row.rhs_log);
    row.degree_cap = lhs.truncation.degree_cap;
    row.tail_bound = lhs.truncation.tail_bound;
    row.exponent_form_err = critical_exponent_form_error(T);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vpv
