#pragma once

#include "xns/interval.hpp"

namespace xns {

// Axis-aligned rectangle re x im in the complex plane.
class ComplexInterval {
 public:
  explicit ComplexInterval(mpfr_prec_t prec = kDefaultPrecision);
  ComplexInterval(RealInterval re, RealInterval im);
  static ComplexInterval from_real(const RealInterval& re);
  // cos(theta) + i sin(theta)
  static ComplexInterval expi(const RealInterval& theta);
  // exp(2 pi i k / n)
  static ComplexInterval unit_root(long k, long n, mpfr_prec_t prec);

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  double relative_width() const;

  ComplexInterval conj() const { return {re_, -im_}; }
  ComplexInterval operator-() const { return {-re_, -im_}; }

  ComplexInterval& operator+=(const ComplexInterval& o);
  ComplexInterval& operator-=(const ComplexInterval& o);
  ComplexInterval& operator*=(const ComplexInterval& o);
  ComplexInterval& operator*=(const RealInterval& o);
  ComplexInterval& operator/=(const ComplexInterval& o);

  friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
  friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
  friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }
  friend ComplexInterval operator*(ComplexInterval a, const RealInterval& b) { return a *= b; }
  friend ComplexInterval operator/(ComplexInterval a, const ComplexInterval& b) { return a /= b; }

 private:
  RealInterval re_;
  RealInterval im_;
};

ComplexInterval exp(const ComplexInterval& z);
// Principal branch; DomainError when the rectangle contains 0. The imaginary
// part widens to [-pi, pi] when the rectangle meets the branch cut.
ComplexInterval log(const ComplexInterval& z);
RealInterval arg(const ComplexInterval& z);
RealInterval abs(const ComplexInterval& z);
RealInterval abs_squared(const ComplexInterval& z);
// log|z| computed as log(|z|^2)/2.
RealInterval log_abs(const ComplexInterval& z);

}  // namespace xns
