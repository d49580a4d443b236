#include "xns/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xns/errors.hpp"

namespace xns {

namespace {

mpfr_prec_t joint(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

// Applies a monotone increasing MPFR function endpoint-wise.
template <class F>
RealInterval increasing(const RealInterval& x, F f) {
  BigFloat lo(x.precision()), hi(x.precision());
  f(lo.get(), x.lo().get(), MPFR_RNDD);
  f(hi.get(), x.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

// Shared by sin and cos: extrema sit at offset + k*pi, maxima for even k.
RealInterval trig(const RealInterval& x, bool cosine) {
  mpfr_prec_t prec = x.precision();
  RealInterval unit = RealInterval::hull(RealInterval(-1, prec), RealInterval(1, prec));
  double lo_d = x.lo_double(), hi_d = x.hi_double();
  if (!std::isfinite(lo_d) || !std::isfinite(hi_d) || hi_d - lo_d >= 6.5 ||
      std::fabs(lo_d) > 1e12 || std::fabs(hi_d) > 1e12) {
    return unit;
  }
  auto f = cosine ? mpfr_cos : mpfr_sin;
  BigFloat a_dn(prec), a_up(prec), b_dn(prec), b_up(prec);
  f(a_dn.get(), x.lo().get(), MPFR_RNDD);
  f(a_up.get(), x.lo().get(), MPFR_RNDU);
  f(b_dn.get(), x.hi().get(), MPFR_RNDD);
  f(b_up.get(), x.hi().get(), MPFR_RNDU);
  BigFloat lo = a_dn < b_dn ? a_dn : b_dn;
  BigFloat hi = a_up < b_up ? b_up : a_up;

  RealInterval pi = RealInterval::pi(prec);
  RealInterval offset = cosine ? RealInterval(prec) : pi / 2;
  const double pid = M_PI;
  double off_d = cosine ? 0.0 : pid / 2;
  long kmin = static_cast<long>(std::floor((lo_d - off_d) / pid)) - 1;
  long kmax = static_cast<long>(std::ceil((hi_d - off_d) / pid)) + 1;
  for (long k = kmin; k <= kmax; ++k) {
    RealInterval c = offset + pi * k;
    bool maybe_inside = !(c.hi() < x.lo()) && !(x.hi() < c.lo());
    if (!maybe_inside) continue;
    if (k % 2 == 0) {
      mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    } else {
      mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    }
  }
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace

RealInterval::RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

RealInterval::RealInterval(long value, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

RealInterval RealInterval::from_integer(const Integer& z, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_bounds(BigFloat lo, BigFloat hi) {
  if (!lo.is_finite() || !hi.is_finite()) throw DomainError("non-finite interval endpoint");
  if (hi < lo) throw InternalInconsistency("interval endpoints out of order");
  mpfr_prec_t prec = std::max(lo.precision(), hi.precision());
  RealInterval r(prec);
  mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_strings(const std::string& lo, const std::string& hi,
                                        mpfr_prec_t prec) {
  RealInterval r(prec);
  if (mpfr_set_str(r.lo_.get(), lo.c_str(), 0, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_.get(), hi.c_str(), 0, MPFR_RNDU) != 0) {
    throw DomainError("malformed interval endpoint: [" + lo + ", " + hi + "]");
  }
  if (r.hi_ < r.lo_) throw DomainError("interval endpoints out of order");
  return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  RealInterval r(joint(a, b));
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::euler_e(mpfr_prec_t prec) { return exp(RealInterval(1, prec)); }

RealInterval RealInterval::log2(mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
  return r;
}

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& inner) const {
  return lo_ <= inner.lo_ && inner.hi_ <= hi_;
}

BigFloat RealInterval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

double RealInterval::width_double() const { return width().to_double(MPFR_RNDU); }

double RealInterval::relative_width() const {
  if (contains_zero()) return std::numeric_limits<double>::infinity();
  BigFloat mag(precision());
  if (lo_.sign() > 0) {
    mpfr_set(mag.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(mag.get(), hi_.get(), MPFR_RNDD);
  }
  BigFloat rel(precision());
  BigFloat w = width();
  mpfr_div(rel.get(), w.get(), mag.get(), MPFR_RNDU);
  return rel.to_double(MPFR_RNDU);
}

double RealInterval::mid_double() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double(MPFR_RNDN);
}

RealInterval RealInterval::with_precision(mpfr_prec_t prec) const {
  RealInterval r(prec);
  mpfr_set(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::operator-() const {
  RealInterval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

RealInterval& RealInterval::operator+=(const RealInterval& o) {
  mpfr_prec_t prec = joint(*this, o);
  RealInterval r(prec);
  mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return *this = std::move(r);
}

RealInterval& RealInterval::operator-=(const RealInterval& o) {
  mpfr_prec_t prec = joint(*this, o);
  RealInterval r(prec);
  mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return *this = std::move(r);
}

RealInterval& RealInterval::operator*=(const RealInterval& o) {
  mpfr_prec_t prec = joint(*this, o);
  RealInterval r(prec);
  const BigFloat* xs[2] = {&lo_, &hi_};
  const BigFloat* ys[2] = {&o.lo_, &o.hi_};
  BigFloat t(prec);
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) r.lo_ = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi_ < t) r.hi_ = t;
      first = false;
    }
  }
  return *this = std::move(r);
}

RealInterval& RealInterval::operator/=(const RealInterval& o) {
  if (o.contains_zero()) throw DomainError("interval division by an interval containing 0");
  mpfr_prec_t prec = joint(*this, o);
  RealInterval r(prec);
  const BigFloat* xs[2] = {&lo_, &hi_};
  const BigFloat* ys[2] = {&o.lo_, &o.hi_};
  BigFloat t(prec);
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) r.lo_ = t;
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || r.hi_ < t) r.hi_ = t;
      first = false;
    }
  }
  return *this = std::move(r);
}

RealInterval exp(const RealInterval& x) { return increasing(x, mpfr_exp); }

RealInterval log(const RealInterval& x) {
  if (x.lo().sign() <= 0) throw DomainError("log of an interval not bounded away from 0");
  return increasing(x, mpfr_log);
}

RealInterval sqrt(const RealInterval& x) {
  if (x.lo().sign() < 0) throw DomainError("sqrt of an interval with negative part");
  return increasing(x, mpfr_sqrt);
}

RealInterval abs(const RealInterval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  if (hi < x.hi()) hi = x.hi();
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval square(const RealInterval& x) { return pow(x, 2); }

RealInterval pow(const RealInterval& x, long n) {
  mpfr_prec_t prec = x.precision();
  if (n == 0) return RealInterval(1, prec);
  if (n < 0) return RealInterval(1, prec) / pow(x, -n);
  BigFloat lo(prec), hi(prec);
  if (x.lo().sign() >= 0) {
    mpfr_pow_si(lo.get(), x.lo().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), x.hi().get(), n, MPFR_RNDU);
  } else if (n % 2 == 1) {
    mpfr_pow_si(lo.get(), x.lo().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), x.hi().get(), n, MPFR_RNDU);
  } else if (x.hi().sign() <= 0) {
    mpfr_pow_si(lo.get(), x.hi().get(), n, MPFR_RNDD);
    mpfr_pow_si(hi.get(), x.lo().get(), n, MPFR_RNDU);
  } else {
    RealInterval a = abs(x);
    mpfr_pow_si(hi.get(), a.hi().get(), n, MPFR_RNDU);
  }
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval pow(const RealInterval& base, const RealInterval& exponent) {
  if (base.lo().sign() <= 0) throw DomainError("real power needs a positive base");
  // x^y is monotone in each argument on x > 0, so the extremes sit at corners.
  mpfr_prec_t prec = joint(base, exponent);
  BigFloat lo(prec), hi(prec), t(prec);
  bool first = true;
  for (const BigFloat* b : {&base.lo(), &base.hi()}) {
    for (const BigFloat* e : {&exponent.lo(), &exponent.hi()}) {
      mpfr_pow(t.get(), b->get(), e->get(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_pow(t.get(), b->get(), e->get(), MPFR_RNDU);
      if (first || hi < t) hi = t;
      first = false;
    }
  }
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval sin(const RealInterval& x) { return trig(x, false); }
RealInterval cos(const RealInterval& x) { return trig(x, true); }

RealInterval max(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t prec = joint(a, b);
  BigFloat lo(prec), hi(prec);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t prec = joint(a, b);
  BigFloat lo(prec), hi(prec);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return RealInterval::from_bounds(std::move(lo), std::move(hi));
}

RealInterval positive_part(const RealInterval& x) { return max(x, RealInterval(0, x.precision())); }

bool certainly_less(const RealInterval& a, const RealInterval& b) { return a.hi() < b.lo(); }
bool certainly_leq(const RealInterval& a, const RealInterval& b) { return a.hi() <= b.lo(); }

bool certify_less(const RealInterval& a, const RealInterval& b) {
  if (a.hi() < b.lo()) return true;
  if (b.hi() <= a.lo()) return false;
  throw PrecisionExhausted("overlapping intervals in a strict comparison");
}

bool certify_leq(const RealInterval& a, const RealInterval& b) {
  if (a.hi() <= b.lo()) return true;
  if (b.hi() < a.lo()) return false;
  throw PrecisionExhausted("overlapping intervals in a comparison");
}

std::string certified_upper(const RealInterval& x, int digits) { return x.hi().decimal(digits, MPFR_RNDU); }
std::string certified_lower(const RealInterval& x, int digits) { return x.lo().decimal(digits, MPFR_RNDD); }

}  // namespace xns
