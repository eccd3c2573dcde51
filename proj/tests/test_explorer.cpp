#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "vpv/explorer.hpp"

using C = vpv::complex_scalar;

namespace {

// mpmath, two independent routes (direct double sum, Lerch transcendent)
constexpr double kZetaBar31 = -0.117875999650509326841;
constexpr double kLi3Half = 0.53721319360804020094;
constexpr double kLi4Half = 0.51747906167389938633;

}  // namespace

TEST(EulerZagier, PartialSumSmallCases) {
  auto p = vpv::euler_zagier_31_partial<double>(2);
  EXPECT_DOUBLE_EQ(p.value.re, -1.0 / 8);
  // m = 3 adds (-1)^3 / 27 * (-1 + 1/2)
  EXPECT_DOUBLE_EQ(vpv::euler_zagier_31_partial<double>(3).value.re, -1.0 / 8 + 1.0 / 54);
  EXPECT_EQ(vpv::euler_zagier_31_partial<double>(1).value.re, 0.0);
}

TEST(EulerZagier, FullValue) {
  auto r = vpv::euler_zagier_31(1e-13);
  EXPECT_NEAR(r.value.re, kZetaBar31, 2e-13);
  EXPECT_LE(r.tail_bound, 1e-13);
  EXPECT_THROW(vpv::euler_zagier_31(0.0), vpv::domain_error);
}

TEST(EulerZagier, StableUnderDoubling) {
  const std::uint64_t B = 5000;
  auto a = vpv::euler_zagier_31_partial<double>(B);
  auto b = vpv::euler_zagier_31_partial<double>(2 * B);
  auto c = vpv::euler_zagier_31_partial<double>(4 * B);
  EXPECT_LE(std::abs(a.value.re - b.value.re), a.tail_bound);
  EXPECT_LE(std::abs(b.value.re - c.value.re), b.tail_bound);
  EXPECT_LE(std::abs(a.value.re - c.value.re), a.tail_bound);
  EXPECT_LE(std::abs(c.value.re - kZetaBar31), c.tail_bound);
}

TEST(EulerZagier, CorrectedRelationPinsTheConstant) {
  // 2 (pi^4/360 - ln^4 2 / 24 + pi^2 ln^2 2 / 24 - Li4(1/2))
  const double pi = std::numbers::pi, l = std::numbers::ln2;
  double rel = 2 * (std::pow(pi, 4) / 360 - std::pow(l, 4) / 24 + pi * pi * l * l / 24 - kLi4Half);
  EXPECT_NEAR(rel, kZetaBar31, 1e-14);
}

TEST(Audit, Verdicts) {
  auto recs = vpv::audit_special_values<double>();
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].name, "LI1_HALF");
  EXPECT_EQ(recs[0].result, vpv::verdict::matches_printed);
  EXPECT_EQ(recs[1].result, vpv::verdict::matches_printed);
  EXPECT_LE(recs[1].discrepancy, 1e-12);

  EXPECT_EQ(recs[2].name, "LI3_HALF");
  EXPECT_LT(recs[2].printed_form_value, 0.0);
  EXPECT_NEAR(recs[2].series_value, kLi3Half, 1e-13);
  EXPECT_EQ(recs[2].result, vpv::verdict::matches_corrected);
  EXPECT_EQ(recs[2].candidates_within, 1);
  ASSERT_TRUE(recs[2].candidate_corrected_value.has_value());
  EXPECT_NEAR(*recs[2].candidate_corrected_value, kLi3Half, 1e-10);

  EXPECT_EQ(recs[3].result, vpv::verdict::matches_corrected);
  EXPECT_NEAR(recs[3].series_value, kLi4Half, 1e-13);
  ASSERT_TRUE(recs[3].corrected_form.has_value());
  EXPECT_NE(*recs[3].corrected_form, recs[3].printed_form);
}

TEST(Audit, VerdictInvariant) {
  vpv::audit_tolerances tol;
  for (const auto& r : vpv::audit_special_values<double>(tol))
    EXPECT_EQ(r.result == vpv::verdict::matches_printed, r.discrepancy <= tol.printed) << r.name;
}

TEST(Audit, TightToleranceLeavesUnresolved) {
  vpv::audit_tolerances tol;
  tol.corrected = 1e-30;
  auto recs = vpv::audit_special_values<double>(tol);
  EXPECT_EQ(recs[2].result, vpv::verdict::unresolved);
  EXPECT_FALSE(recs[2].candidate_corrected_value.has_value());
  EXPECT_STREQ(vpv::to_string(recs[2].result), "UNRESOLVED");
}

TEST(Audit, CandidateSetIsFixedAndDistinct) {
  auto forms = vpv::printed_special_values();
  auto cands = vpv::candidate_corrections(forms[2]);
  // 2^3 sign patterns times 4^2 ln 2 powers
  EXPECT_EQ(cands.size(), 128u);
  std::set<std::string> seen;
  int printed = 0;
  for (const auto& c : cands) {
    printed += vpv::describe(c) == vpv::describe(forms[2]);
    seen.insert(vpv::describe(c));
  }
  EXPECT_EQ(printed, 1);
  EXPECT_EQ(seen.size(), cands.size());
  EXPECT_EQ(cands.size(), vpv::candidate_corrections(forms[2]).size());
}

TEST(Catalog, FourteenNamedTemplates) {
  auto cat = vpv::catalog<double>();
  ASSERT_EQ(cat.size(), 14u);
  std::set<std::string> names;
  for (const auto& e : cat) names.insert(e.instance.name);
  EXPECT_EQ(names.size(), 14u);
  int unit = 0;
  for (const auto& e : cat) unit += e.instance.unit_x;
  EXPECT_EQ(unit, 4);
  EXPECT_EQ(cat[11].audited_constant, std::optional<std::string>("LI3_HALF"));
  EXPECT_EQ(cat[12].audited_constant, std::optional<std::string>("LI4_HALF"));
  EXPECT_EQ(cat[12].instance.constant, vpv::constant_source::polylog_series);
}

TEST(Catalog, ArgumentRangeErrors) {
  EXPECT_THROW(vpv::polylog_pair<double>(6, C(0.3), C(0.3)), vpv::domain_error);
  EXPECT_THROW(vpv::zeta_pair<double>(1, C(0.3)), vpv::domain_error);
  EXPECT_THROW(vpv::half_pair<double>(5, C(0.3)), vpv::domain_error);
}

TEST(Catalog, ZetaTwoCaseAgainstPrintedExponent) {
  auto e = vpv::zeta_pair<double>(2, C(0.3));
  auto rep = vpv::verify(e.instance, 1e-8);
  double want = std::numbers::pi * std::numbers::pi / 6 * 0.3 / 0.49;
  EXPECT_NEAR(rep.rhs_log.re, want, 1e-14);
  EXPECT_LE(std::abs(rep.lhs_log.re - want) / want, 1e-7);
}

TEST(Catalog, HalfLiTwoExponent) {
  auto e = vpv::half_pair<double>(2, C(0.25));
  const double l = std::numbers::ln2, pi = std::numbers::pi;
  double want = (pi * pi / 12 - l * l / 2) * (0.25 / 0.5625);
  EXPECT_NEAR(vpv::rhs_log(e.instance, 1e-10).re, want, 1e-15);
  EXPECT_LE(vpv::verify(e.instance, 1e-8).rel_err, 1e-7);
}

TEST(ExplorerProperty, CatalogVerifiesAtDefaults) {
  for (const auto& e : vpv::catalog<double>()) {
    auto rep = vpv::verify(e.instance, 1e-8);
    EXPECT_LE(rep.rel_err, 1e-6) << e.instance.name;
    EXPECT_LE(rep.abs_err, 3e-8) << e.instance.name;
  }
}

TEST(ExplorerProperty, CatalogTailBoundsCoverDoubling) {
  for (const auto& e : vpv::catalog<double>()) {
    auto l = vpv::lhs_log(e.instance, 1e-8);
    auto d = vpv::lhs_log_at(e.instance, 2 * l.truncation.degree_cap, 1e-8);
    EXPECT_LT(abs(d.value - l.value), l.truncation.tail_bound) << e.instance.name;
  }
}

TEST(Probe, OrderThreeAtHalf) {
  auto rep = vpv::trivial_zero_probe<double>(3, C(0.5), {0.5}, 1e-10);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_NEAR(rep.rows[0].rational_factor, 6.0, 1e-14);
  EXPECT_NEAR(rep.rows[0].rhs_log.re, 6 * kLi3Half, 1e-12);
  EXPECT_LE(rep.rows[0].abs_err, 3e-10);
  EXPECT_FALSE(rep.note.empty());
}

TEST(Probe, ZeroArgumentBothSidesVanish) {
  auto rep = vpv::trivial_zero_probe<double>(3, C(0.0), {0.5, 0.3}, 1e-10);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.rhs_log, C(0.0));
    EXPECT_EQ(r.lhs_log, C(0.0));
  }
}

TEST(Probe, ExponentGrowsWhileSidesAgree) {
  std::vector<double> deltas{0.9, 0.7, 0.5, 0.4, 0.3, 0.25, 0.2};
  for (int order : {2, 3, 4}) {
    auto rep = vpv::trivial_zero_probe<double>(order, C(0.5), deltas, 1e-9);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& r = rep.rows[i];
      ASSERT_FALSE(r.error.has_value()) << r.delta;
      EXPECT_LE(r.abs_err, 1e-6);
      if (i) {
        EXPECT_GT(r.rhs_exponent_magnitude, rep.rows[i - 1].rhs_exponent_magnitude);
        EXPECT_GT(r.rational_factor, rep.rows[i - 1].rational_factor);
      }
    }
  }
}

TEST(Probe, SmallDeltaFailsPerRow) {
  vpv::numeric_config cfg;
  cfg.degree_cap_max = 200;
  auto rep = vpv::trivial_zero_probe<double>(2, C(0.5), {0.5, 1e-4}, 1e-10, cfg);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_FALSE(rep.rows[0].error.has_value());
  EXPECT_TRUE(rep.rows[1].error.has_value());
  EXPECT_GT(rep.rows[1].rhs_exponent_magnitude, 1e7);
}

TEST(Probe, InputValidation) {
  EXPECT_THROW(vpv::trivial_zero_probe<double>(5, C(0.5), {0.5}, 1e-8), vpv::domain_error);
  EXPECT_THROW(vpv::trivial_zero_probe<double>(3, C(0.5), {1.5}, 1e-8), vpv::domain_error);
  EXPECT_THROW(vpv::trivial_zero_probe<double>(3, C(1.5), {0.5}, 1e-8), vpv::domain_error);
}

TEST(Scan, ZeroOrdinateIsRealSquare) {
  auto rows = vpv::critical_line_scan<double>({0.0}, C(0.2), C(0.2), 1e-10);
  const double li = 0.23387826337130558198;
  // series tolerance is 1e-4 of the scan tolerance
  EXPECT_NEAR(rows[0].li_s_x.re, li, 1e-14);
  EXPECT_NEAR(rows[0].rhs_log.re, li * li, 1e-14);
  EXPECT_EQ(rows[0].rhs_log.im, 0.0);
}

TEST(Scan, UniformAcrossOrdinates) {
  std::vector<double> Ts{0, 1, 5, 14.134725, 21.022040, 50};
  auto rows = vpv::critical_line_scan<double>(Ts, C(0.2), C(0.2), 1e-8);
  ASSERT_EQ(rows.size(), Ts.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].T, Ts[i]);
    EXPECT_LE(rows[i].abs_err, 1e-6);
    EXPECT_DOUBLE_EQ(rows[i].abs_err, abs(rows[i].lhs_log - rows[i].rhs_log));
    EXPECT_LE(rows[i].exponent_form_err, 1e-14);
  }
}

TEST(Scan, HermitianInT) {
  auto rows = vpv::critical_line_scan<double>({7.5, -7.5}, C(0.2), C(0.2), 1e-10);
  EXPECT_LE(abs(rows[0].rhs_log - conj(rows[1].rhs_log)), 1e-12);
  EXPECT_LE(abs(rows[0].lhs_log - conj(rows[1].lhs_log)), 1e-12);
}

TEST(Scan, RejectsBadInput) {
  EXPECT_THROW(vpv::critical_line_scan<double>({1.0}, C(1.0), C(0.2), 1e-8), vpv::domain_error);
  EXPECT_THROW(vpv::critical_line_scan<double>({NAN}, C(0.2), C(0.2), 1e-8), vpv::domain_error);
}
