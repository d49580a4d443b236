#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "xns/complex_interval.hpp"
#include "xns/errors.hpp"

namespace xns {

struct PrecisionPolicy {
  mpfr_prec_t start_bits = 128;
  mpfr_prec_t cap_bits = 4096;
};

// Runs `body(bits)` starting at policy.start_bits and doubles the precision
// each time it throws PrecisionExhausted, up to policy.cap_bits.
template <class F>
auto with_precision(const PrecisionPolicy& policy, F&& body) -> decltype(body(mpfr_prec_t{})) {
  for (mpfr_prec_t bits = policy.start_bits;; bits *= 2) {
    try {
      return body(bits);
    } catch (const PrecisionExhausted&) {
      if (bits * 2 > policy.cap_bits) throw;
    }
  }
}

inline double relative_width_of(const RealInterval& x) { return x.relative_width(); }
inline double relative_width_of(const ComplexInterval& z) { return z.relative_width(); }

// Evaluates an interval expression `expr(bits)` (returning a RealInterval or
// ComplexInterval) until its relative width is at most `target`. DomainError
// from the expression propagates unchanged.
template <class F>
auto interval_eval(F&& expr, double target, const PrecisionPolicy& policy = {})
    -> decltype(expr(mpfr_prec_t{})) {
  for (mpfr_prec_t bits = policy.start_bits;; bits *= 2) {
    auto value = expr(bits);
    if (relative_width_of(value) <= target) return value;
    if (bits * 2 > policy.cap_bits) {
      throw PrecisionExhausted("relative width target unreachable at " +
                               std::to_string(policy.cap_bits) + " bits");
    }
  }
}

}  // namespace xns
