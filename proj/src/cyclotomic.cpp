#include "xns/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "xns/errors.hpp"

namespace xns {

namespace {

int reduce(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

CycloNumber::CycloNumber(int p) : p_(p), c_(p - 1) {}

CycloNumber CycloNumber::rational(int p, const Rational& r) {
  CycloNumber x(p);
  Rational neg = -r;
  for (auto& c : x.c_) c = neg;
  return x;
}

CycloNumber CycloNumber::zeta_power(int p, long k) {
  int e = reduce(k, p);
  if (e == 0) return one(p);
  CycloNumber x(p);
  x.c_[e - 1] = 1;
  return x;
}

CycloNumber CycloNumber::from_exponents(int p, const std::vector<Rational>& full) {
  if (static_cast<int>(full.size()) != p) throw DomainError("exponent vector must have length p");
  CycloNumber x(p);
  for (int k = 1; k < p; ++k) x.c_[k - 1] = full[k] - full[0];
  return x;
}

CycloNumber CycloNumber::one_minus_zeta(int p, long k) { return one(p) - zeta_power(p, k); }

bool CycloNumber::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNumber::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Integer CycloNumber::denominator() const {
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::optional<Rational> CycloNumber::as_rational() const {
  for (const auto& c : c_)
    if (c != c_.front()) return std::nullopt;
  return Rational(-c_.front());
}

bool CycloNumber::is_real() const { return conj() == *this; }

CycloNumber CycloNumber::galois(long a) const {
  int s = reduce(a, p_);
  if (s == 0) throw DomainError("Galois index must be a unit mod p");
  CycloNumber out(p_);
  for (int k = 1; k < p_; ++k) out.c_[reduce(1L * s * k, p_) - 1] = c_[k - 1];
  return out;
}

CycloNumber CycloNumber::pow(unsigned long n) const {
  CycloNumber result = one(p_);
  CycloNumber base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result *= base;
    if (n > 1) base *= base;
  }
  return result;
}

CycloNumber CycloNumber::times_zeta(long m) const {
  const int shift = reduce(m, p_);
  if (shift == 0) return *this;
  std::vector<Rational> full(p_);
  for (int k = 1; k < p_; ++k) full[(k + shift) % p_] = c_[k - 1];
  CycloNumber out(p_);
  for (int k = 1; k < p_; ++k) out.c_[k - 1] = full[k] - full[0];
  return out;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (p_ != o.p_) throw DomainError("mixed cyclotomic fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (p_ != o.p_) throw DomainError("mixed cyclotomic fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.p_ != b.p_) throw DomainError("mixed cyclotomic fields");
  const int p = a.p_;
  // Cyclic convolution over exponents 0..p-1, then fold the zeta^0 part back
  // using 1 = -(zeta + ... + zeta^{p-1}).
  std::vector<Rational> full(p);
  Rational t;
  for (int i = 1; i < p; ++i) {
    if (sgn(a.c_[i - 1]) == 0) continue;
    for (int j = 1; j < p; ++j) {
      if (sgn(b.c_[j - 1]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i - 1].get_mpq_t(), b.c_[j - 1].get_mpq_t());
      full[(i + j) % p] += t;
    }
  }
  CycloNumber out(p);
  for (int k = 1; k < p; ++k) out.c_[k - 1] = full[k] - full[0];
  return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) { return *this = *this * o; }

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

CycloNumber norm_to_K(const CycloNumber& x, const CartanContext& ctx, NormSource source) {
  if (source == NormSource::Plus && !x.is_real())
    throw DomainError("norm from the real subfield needs a real argument");
  CycloNumber out = CycloNumber::one(ctx.p);
  for (int h : ctx.H) {
    if (source == NormSource::Plus && h > (ctx.p - 1) / 2) continue;
    out *= x.galois(h);
  }
  for (int h : ctx.H)
    if (!(out.galois(h) == out)) throw InternalInconsistency("subfield norm is not fixed by H");
  return out;
}

Rational norm_to_Q(const CycloNumber& x) {
  CycloNumber out = CycloNumber::one(x.p());
  for (int a = 1; a < x.p(); ++a) out *= x.galois(a);
  auto r = out.as_rational();
  if (!r) throw InternalInconsistency("full norm is not rational");
  return *r;
}

const std::vector<ComplexInterval>& root_table(int p, mpfr_prec_t prec) {
  static std::mutex mutex;
  static std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<std::vector<ComplexInterval>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, prec}];
  if (!slot) {
    auto table = std::make_unique<std::vector<ComplexInterval>>();
    table->reserve(p);
    for (int k = 0; k < p; ++k) table->push_back(ComplexInterval::unit_root(k, p, prec));
    slot = std::move(table);
  }
  return *slot;
}

ComplexInterval embed(const CycloNumber& x, long a, mpfr_prec_t prec) {
  const int p = x.p();
  const auto& roots = root_table(p, prec);
  ComplexInterval acc(prec);
  for (int k = 1; k < p; ++k) {
    const Rational& c = x.coeff(k);
    if (sgn(c) == 0) continue;
    acc += roots[reduce(a * k, p)] * RealInterval::from_rational(c, prec);
  }
  return acc;
}

RealInterval log_abs_at(const CycloNumber& x, long a, mpfr_prec_t prec) {
  if (x.is_zero()) throw ZeroElement("log of |0|");
  ComplexInterval z = embed(x, a, prec);
  if (z.contains_zero()) throw PrecisionExhausted("embedding not separated from 0");
  return log_abs(z);
}

std::vector<RealInterval> log_abs_embeddings(const CycloNumber& x, const CartanContext& ctx,
                                             mpfr_prec_t prec) {
  std::vector<RealInterval> out;
  for (int rep : ctx.coset_reps) out.push_back(log_abs_at(x, rep, prec));
  return out;
}

RealInterval log_plus_of_abs(const RealInterval& abs_value) {
  const mpfr_prec_t prec = abs_value.precision();
  if (abs_value.hi() <= RealInterval(1, prec).lo()) return RealInterval(0, prec);
  if (abs_value.is_positive()) return positive_part(log(abs_value));
  RealInterval top = log(RealInterval::from_bounds(abs_value.hi(), abs_value.hi()));
  return RealInterval::from_bounds(RealInterval(0, prec).lo(), top.hi());
}

RealInterval height(const CycloNumber& x, mpfr_prec_t prec) {
  RealInterval sum(prec);
  for (int a = 1; a < x.p(); ++a) sum += log_plus_of_abs(abs(embed(x, a, prec)));
  return sum / (x.p() - 1);
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& o) {
  if (p == 0) p = o.p;
  for (const auto& f : o.factors) {
    bool merged = false;
    for (auto& g : factors) {
      if (g.first == f.first) {
        g.second += f.second;
        merged = true;
        break;
      }
    }
    if (!merged) factors.push_back(f);
  }
  return *this;
}

PowerProduct PowerProduct::pow(const Integer& n) const {
  PowerProduct out(*this);
  for (auto& f : out.factors) f.second *= n;
  return out;
}

PowerProduct PowerProduct::galois(long a) const {
  PowerProduct out(p);
  for (const auto& f : factors) out.factors.emplace_back(f.first.galois(a), f.second);
  return out;
}

CycloNumber PowerProduct::expand() const {
  CycloNumber out = CycloNumber::one(p);
  for (const auto& f : factors) {
    if (sgn(f.second) < 0) throw DomainError("cannot expand a negative power");
    if (!f.second.fits_ulong_p()) throw DomainError("exponent too large to expand");
    out *= f.first.pow(f.second.get_ui());
  }
  return out;
}

RealInterval log_abs_at(const PowerProduct& x, long a, mpfr_prec_t prec) {
  RealInterval acc(prec);
  for (const auto& f : x.factors) {
    if (sgn(f.second) == 0) continue;
    acc += log_abs_at(f.first, a, prec) * RealInterval::from_integer(f.second, prec);
  }
  return acc;
}

std::vector<RealInterval> log_abs_all(const PowerProduct& x, mpfr_prec_t prec) {
  std::vector<RealInterval> out;
  for (int a = 1; a < x.p; ++a) out.push_back(log_abs_at(x, a, prec));
  return out;
}

RealInterval height_from_logs(const std::vector<RealInterval>& logs) {
  if (logs.empty()) throw DomainError("height of an empty embedding list");
  RealInterval sum(logs.front().precision());
  for (const auto& l : logs) sum += positive_part(l);
  return sum / static_cast<long>(logs.size());
}

RealInterval height(const PowerProduct& x, mpfr_prec_t prec) { return height_from_logs(log_abs_all(x, prec)); }

}  // namespace xns
