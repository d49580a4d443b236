#include "xns/complex_interval.hpp"

#include <algorithm>
#include <limits>

#include "xns/errors.hpp"

namespace xns {

ComplexInterval::ComplexInterval(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexInterval::ComplexInterval(RealInterval re, RealInterval im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexInterval ComplexInterval::from_real(const RealInterval& re) {
  return {re, RealInterval(re.precision())};
}

ComplexInterval ComplexInterval::expi(const RealInterval& theta) { return {cos(theta), sin(theta)}; }

ComplexInterval ComplexInterval::unit_root(long k, long n, mpfr_prec_t prec) {
  long r = ((k % n) + n) % n;
  if (r == 0) return from_real(RealInterval(1, prec));
  // Reduce to (-pi, pi] so the trig enclosures stay tight.
  if (2 * r > n) r -= n;
  RealInterval theta = RealInterval::pi(prec) * (2 * r) / n;
  return expi(theta);
}

double ComplexInterval::relative_width() const {
  RealInterval mag = abs(*this);
  if (mag.contains_zero()) return std::numeric_limits<double>::infinity();
  double w = std::max(re_.width_double(), im_.width_double());
  return w / mag.lo_double();
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& o) {
  RealInterval re = re_ * o.re_ - im_ * o.im_;
  RealInterval im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const RealInterval& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

ComplexInterval& ComplexInterval::operator/=(const ComplexInterval& o) {
  RealInterval den = abs_squared(o);
  if (den.contains_zero()) throw DomainError("complex division by a rectangle containing 0");
  ComplexInterval num = *this * o.conj();
  re_ = num.re_ / den;
  im_ = num.im_ / den;
  return *this;
}

ComplexInterval exp(const ComplexInterval& z) {
  RealInterval mod = exp(z.re());
  return ComplexInterval::expi(z.im()) * mod;
}

RealInterval abs_squared(const ComplexInterval& z) { return square(z.re()) + square(z.im()); }

RealInterval abs(const ComplexInterval& z) { return sqrt(abs_squared(z)); }

RealInterval log_abs(const ComplexInterval& z) {
  RealInterval a2 = abs_squared(z);
  if (!a2.is_positive()) throw DomainError("log|z| of a rectangle containing 0");
  return log(a2) / 2;
}

RealInterval arg(const ComplexInterval& z) {
  if (z.contains_zero()) throw DomainError("arg of a rectangle containing 0");
  mpfr_prec_t prec = z.precision();
  if (z.re().lo().sign() < 0 && z.im().contains_zero()) {
    RealInterval pi = RealInterval::pi(prec);
    return RealInterval::hull(-pi, pi);
  }
  // Along any edge arg is monotone, so corners carry the extremes.
  BigFloat lo(prec), hi(prec), t(prec);
  bool first = true;
  for (const BigFloat* y : {&z.im().lo(), &z.im().hi()}) {
    for (const BigFloat* x : {&z.re().lo(), &z.re().hi()}) {
      mpfr_atan2(t.get(), y->get(), x->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_atan2(t.get(), y->get(), x->get(), MPFR_RNDU);
      if (first || hi < t) hi = t;
      first = false;
    }
  }
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

ComplexInterval log(const ComplexInterval& z) { return {log_abs(z), arg(z)}; }

}  // namespace xns
