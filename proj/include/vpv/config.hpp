#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace vpv {

// Numeric limits shared by the evaluators. All fields have the defaults
// used throughout the test suites.
struct numeric_config {
  double domain_margin = 1e-3;          // required distance of |z| from 1
  double zeta_margin = 1e-3;            // required distance of s from 1
  std::uint64_t term_cap = 10'000'000;  // max terms per one-dimensional series
  int degree_cap_max = 4000;            // max a+b (or a+b+c) for lattice sums
  unsigned threads = 1;                 // worker threads for lattice sums
};

inline const numeric_config& default_config() {
  static const numeric_config cfg{};
  return cfg;
}

// Extended precision types, selected at run time by decimal digits.
template <unsigned Digits>
using extended_float =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                  boost::multiprecision::et_off>;

using extended30 = extended_float<30>;
using extended50 = extended_float<50>;

}  // namespace vpv
