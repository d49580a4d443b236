#pragma once

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "xns/interval.hpp"

namespace xns::testing {

// Pinned tolerance for values frozen from the mpmath oracles (16 significant digits).
inline constexpr double kOracleRelTol = 1e-12;

// Passes when the interval lies within rel_tol of the decimal reference.
inline ::testing::AssertionResult NearDecimal(const RealInterval& x, const std::string& reference,
                                              double rel_tol = kOracleRelTol) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(x.precision(), 128);
  RealInterval ref = RealInterval::from_strings(reference, reference, prec);
  char tol[32];
  std::snprintf(tol, sizeof tol, "%.17g", rel_tol);
  RealInterval slack = abs(ref) * RealInterval::from_strings(tol, tol, prec);
  RealInterval window = RealInterval::hull(ref - slack, ref + slack);
  if (window.contains(x)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "[" << certified_lower(x, 20) << ", " << certified_upper(x, 20)
                                       << "] is not within " << rel_tol << " of " << reference;
}

}  // namespace xns::testing
