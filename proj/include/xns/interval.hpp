#pragma once

#include <string>

#include "xns/bigfloat.hpp"
#include "xns/rational.hpp"

namespace xns {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// lo toward -inf and hi toward +inf, so the exact value of any composed
// expression stays inside the result. Binary operations run at the larger of
// the two operand precisions.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = kDefaultPrecision);
  RealInterval(long value, mpfr_prec_t prec);

  static RealInterval from_integer(const Integer& z, mpfr_prec_t prec);
  static RealInterval from_rational(const Rational& q, mpfr_prec_t prec);
  static RealInterval from_bounds(BigFloat lo, BigFloat hi);
  // Parses decimal or hex-float strings, rounding lo down and hi up.
  static RealInterval from_strings(const std::string& lo, const std::string& hi,
                                   mpfr_prec_t prec);
  static RealInterval hull(const RealInterval& a, const RealInterval& b);

  static RealInterval pi(mpfr_prec_t prec);
  static RealInterval euler_e(mpfr_prec_t prec);
  static RealInterval log2(mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  bool contains(const Rational& q) const;
  bool contains(long v) const { return contains(Rational(v)); }
  bool contains(const RealInterval& inner) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }

  // Upper bound on hi - lo.
  BigFloat width() const;
  double width_double() const;
  // width / min|x|; +inf when the interval touches zero.
  double relative_width() const;
  double lo_double() const { return lo_.to_double(MPFR_RNDD); }
  double hi_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;

  RealInterval with_precision(mpfr_prec_t prec) const;

  RealInterval operator-() const;
  RealInterval& operator+=(const RealInterval& o);
  RealInterval& operator-=(const RealInterval& o);
  RealInterval& operator*=(const RealInterval& o);
  RealInterval& operator/=(const RealInterval& o);

  friend RealInterval operator+(RealInterval a, const RealInterval& b) { return a += b; }
  friend RealInterval operator-(RealInterval a, const RealInterval& b) { return a -= b; }
  friend RealInterval operator*(RealInterval a, const RealInterval& b) { return a *= b; }
  friend RealInterval operator/(RealInterval a, const RealInterval& b) { return a /= b; }
  friend RealInterval operator+(RealInterval a, long b) { return a += RealInterval(b, a.precision()); }
  friend RealInterval operator-(RealInterval a, long b) { return a -= RealInterval(b, a.precision()); }
  friend RealInterval operator*(RealInterval a, long b) { return a *= RealInterval(b, a.precision()); }
  friend RealInterval operator/(RealInterval a, long b) { return a /= RealInterval(b, a.precision()); }
  friend RealInterval operator*(long a, RealInterval b) { return b *= RealInterval(a, b.precision()); }
  friend RealInterval operator+(long a, RealInterval b) { return b += RealInterval(a, b.precision()); }
  friend RealInterval operator-(long a, const RealInterval& b) { return RealInterval(a, b.precision()) - b; }

  // Same endpoints (precision is ignored).
  friend bool operator==(const RealInterval& a, const RealInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  BigFloat lo_;
  BigFloat hi_;
};

RealInterval exp(const RealInterval& x);
RealInterval log(const RealInterval& x);  // DomainError unless lo > 0
RealInterval sqrt(const RealInterval& x);  // DomainError if lo < 0
RealInterval square(const RealInterval& x);
RealInterval abs(const RealInterval& x);
RealInterval pow(const RealInterval& x, long n);
RealInterval pow(const RealInterval& base, const RealInterval& exponent);  // base > 0
RealInterval sin(const RealInterval& x);
RealInterval cos(const RealInterval& x);
RealInterval max(const RealInterval& a, const RealInterval& b);
RealInterval min(const RealInterval& a, const RealInterval& b);
// max(0, x), the log^+ building block.
RealInterval positive_part(const RealInterval& x);

// Certain comparisons: true only when the relation holds for every pair of
// points in the two intervals.
bool certainly_less(const RealInterval& a, const RealInterval& b);
bool certainly_leq(const RealInterval& a, const RealInterval& b);

// Decided comparisons: return the answer when the intervals separate and
// throw PrecisionExhausted when they overlap.
bool certify_less(const RealInterval& a, const RealInterval& b);
bool certify_leq(const RealInterval& a, const RealInterval& b);

// Decimal strings that bound the interval from above (resp. below): parsing
// the result yields a number >= hi (resp. <= lo).
std::string certified_upper(const RealInterval& x, int digits = 20);
std::string certified_lower(const RealInterval& x, int digits = 20);

}  // namespace xns
