#pragma once

// JSON and CSV serialization of reports and tables. Numbers are written as
// doubles in their shortest round-trip form.

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "vpv/complex.hpp"
#include "vpv/explorer.hpp"
#include "vpv/lattice.hpp"
#include "vpv/polylog.hpp"
#include "vpv/products.hpp"

namespace vpv::io {

using json = nlohmann::json;

inline std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class Real>
std::string shortest(const Real& v) {
  return shortest(static_cast<double>(v));
}

template <class Real>
json to_json(const basic_complex<Real>& z) {
  return {{"re", static_cast<double>(z.re)}, {"im", static_cast<double>(z.im)}};
}

template <class Real>
json to_json(const identity_report<Real>& r) {
  return {{"lhs_log", to_json(r.lhs_log)},
          {"rhs_log", to_json(r.rhs_log)},
          {"abs_err", static_cast<double>(r.abs_err)},
          {"rel_err", static_cast<double>(r.rel_err)},
          {"degree_cap", r.truncation.degree_cap},
          {"tail_bound", static_cast<double>(r.truncation.tail_bound)},
          {"terms", r.terms}};
}

template <class Real>
json to_json(const series_result<Real>& r) {
  return {{"value", to_json(r.value)},
          {"terms_used", r.terms_used},
          {"tail_bound", static_cast<double>(r.tail_bound)}};
}

template <class Real>
json to_json(const scan_row<Real>& r) {
  return {{"T", static_cast<double>(r.T)},
          {"lhs_log", to_json(r.lhs_log)},
          {"rhs_log", to_json(r.rhs_log)},
          {"abs_err", static_cast<double>(r.abs_err)},
          {"li_s_x", to_json(r.li_s_x)},
          {"li_t_y", to_json(r.li_t_y)},
          {"degree_cap", r.degree_cap},
          {"tail_bound", static_cast<double>(r.tail_bound)},
          {"exponent_form_err", static_cast<double>(r.exponent_form_err)}};
}

template <class Real>
json to_json(const probe_row<Real>& r) {
  json j = {{"delta", static_cast<double>(r.delta)},
            {"lhs_log", to_json(r.lhs_log)},
            {"rhs_log", to_json(r.rhs_log)},
            {"abs_err", static_cast<double>(r.abs_err)},
            {"rhs_exponent_magnitude", static_cast<double>(r.rhs_exponent_magnitude)},
            {"rational_factor", static_cast<double>(r.rational_factor)},
            {"degree_cap", r.degree_cap},
            {"tail_bound", static_cast<double>(r.tail_bound)}};
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  return j;
}

template <class Real>
json to_json(const special_value_record<Real>& r) {
  json j = {{"name", r.name},
            {"printed_form", r.printed_form},
            {"printed_form_value", static_cast<double>(r.printed_form_value)},
            {"series_value", static_cast<double>(r.series_value)},
            {"verdict", to_string(r.result)},
            {"discrepancy", static_cast<double>(r.discrepancy)},
            {"candidates_within", r.candidates_within}};
  j["candidate_corrected_value"] = r.candidate_corrected_value
                                       ? json(static_cast<double>(*r.candidate_corrected_value))
                                       : json(nullptr);
  j["corrected_form"] = r.corrected_form ? json(*r.corrected_form) : json(nullptr);
  return j;
}

template <class Row>
json to_json_array(const std::vector<Row>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

// ---------------------------------------------------------------------------
// CSV. Complex values are split into _re/_im column pairs.

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const char* report_csv_header() {
  return "lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,degree_cap,tail_bound,terms";
}

template <class Real>
std::string csv_row(const identity_report<Real>& r) {
  return shortest(r.lhs_log.re) + ',' + shortest(r.lhs_log.im) + ',' + shortest(r.rhs_log.re) +
         ',' + shortest(r.rhs_log.im) + ',' + shortest(r.abs_err) + ',' + shortest(r.rel_err) +
         ',' + std::to_string(r.truncation.degree_cap) + ',' + shortest(r.truncation.tail_bound) +
         ',' + std::to_string(r.terms);
}

inline const char* scan_csv_header() {
  return "T,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,li_s_x_re,li_s_x_im,li_t_y_re,li_t_y_im,"
         "degree_cap,tail_bound,exponent_form_err";
}

template <class Real>
std::string csv_row(const scan_row<Real>& r) {
  return shortest(r.T) + ',' + shortest(r.lhs_log.re) + ',' + shortest(r.lhs_log.im) + ',' +
         shortest(r.rhs_log.re) + ',' + shortest(r.rhs_log.im) + ',' + shortest(r.abs_err) + ',' +
         shortest(r.li_s_x.re) + ',' + shortest(r.li_s_x.im) + ',' + shortest(r.li_t_y.re) + ',' +
         shortest(r.li_t_y.im) + ',' + std::to_string(r.degree_cap) + ',' +
         shortest(r.tail_bound) + ',' + shortest(r.exponent_form_err);
}

inline const char* probe_csv_header() {
  return "delta,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rhs_exponent_magnitude,rational_factor,"
         "degree_cap,tail_bound,error";
}

template <class Real>
std::string csv_row(const probe_row<Real>& r) {
  return shortest(r.delta) + ',' + shortest(r.lhs_log.re) + ',' + shortest(r.lhs_log.im) + ',' +
         shortest(r.rhs_log.re) + ',' + shortest(r.rhs_log.im) + ',' + shortest(r.abs_err) + ',' +
         shortest(r.rhs_exponent_magnitude) + ',' + shortest(r.rational_factor) + ',' +
         std::to_string(r.degree_cap) + ',' + shortest(r.tail_bound) + ',' +
         csv_quote(r.error.value_or(""));
}

inline const char* audit_csv_header() {
  return "name,printed_form_value,series_value,candidate_corrected_value,verdict,discrepancy,"
         "corrected_form";
}

template <class Real>
std::string csv_row(const special_value_record<Real>& r) {
  return r.name + ',' + shortest(r.printed_form_value) + ',' + shortest(r.series_value) + ',' +
         (r.candidate_corrected_value ? shortest(*r.candidate_corrected_value) : std::string()) +
         ',' + to_string(r.result) + ',' + shortest(r.discrepancy) + ',' +
         csv_quote(r.corrected_form.value_or(""));
}

inline const char* series_csv_header() { return "re,im,terms_used,tail_bound"; }

template <class Real>
std::string csv_row(const series_result<Real>& r) {
  return shortest(r.value.re) + ',' + shortest(r.value.im) + ',' + std::to_string(r.terms_used) +
         ',' + shortest(r.tail_bound);
}

inline void write_visible_csv(std::ostream& os, int dim, lattice_int cap) {
  if (dim == 2) {
    os << "a,b\n";
    for (const auto& p : visible_points_2d(cap)) os << p.a << ',' << p.b << '\n';
  } else {
    os << "a,b,c\n";
    for (const auto& p : visible_points_3d(cap)) os << p.a << ',' << p.b << ',' << p.c << '\n';
  }
}

}  // namespace vpv::io
