#pragma once

#include <optional>
#include <vector>

#include "xns/cartan.hpp"
#include "xns/complex_interval.hpp"
#include "xns/rational.hpp"

namespace xns {

// Exact element of Q(zeta_p), stored in the basis zeta^1, ..., zeta^{p-1}.
// In this basis Z[zeta] is exactly the set of integer coordinate vectors and
// sigma_a permutes coordinates.
class CycloNumber {
 public:
  CycloNumber() = default;
  explicit CycloNumber(int p);  // zero

  static CycloNumber zero(int p) { return CycloNumber(p); }
  static CycloNumber rational(int p, const Rational& r);
  static CycloNumber one(int p) { return rational(p, Rational(1)); }
  // zeta^k for any integer k.
  static CycloNumber zeta_power(int p, long k);
  // sum_e full[e] zeta^e over e = 0..p-1.
  static CycloNumber from_exponents(int p, const std::vector<Rational>& full);
  // 1 - zeta^k.
  static CycloNumber one_minus_zeta(int p, long k);

  int p() const { return p_; }
  // Coefficient of zeta^k, 1 <= k <= p-1.
  const Rational& coeff(int k) const { return c_.at(k - 1); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // True when all coordinates are integers, i.e. the element lies in Z[zeta].
  bool is_integral() const;
  // lcm of the coordinate denominators.
  Integer denominator() const;
  // The rational value when the element lies in Q.
  std::optional<Rational> as_rational() const;
  // Fixed by complex conjugation.
  bool is_real() const;

  CycloNumber galois(long a) const;  // sigma_a : zeta -> zeta^a
  CycloNumber conj() const { return galois(-1); }
  CycloNumber pow(unsigned long n) const;
  // zeta^m * x, computed as a coordinate shift.
  CycloNumber times_zeta(long m) const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& r);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  int p_ = 0;
  std::vector<Rational> c_;
};

// Product of sigma_h(x) over h in H (from Q(zeta)) or over h in H with
// h <= (p-1)/2 (from the real subfield, x must be real). The result is
// checked to be fixed by H.
enum class NormSource { Full, Plus };
CycloNumber norm_to_K(const CycloNumber& x, const CartanContext& ctx, NormSource source);

// Product of every conjugate; a rational number.
Rational norm_to_Q(const CycloNumber& x);

// e^{2 pi i k / p} for k = 0..p-1 at the given precision. Tables are built
// once per (p, prec) and shared.
const std::vector<ComplexInterval>& root_table(int p, mpfr_prec_t prec);

// Image of x under zeta -> e^{2 pi i a / p}.
ComplexInterval embed(const CycloNumber& x, long a, mpfr_prec_t prec);
// log |x^{sigma_a}|. ZeroElement for x = 0; PrecisionExhausted when the
// embedding cannot be separated from 0.
RealInterval log_abs_at(const CycloNumber& x, long a, mpfr_prec_t prec);
// log |x^{sigma_k}| for the Galois cosets of K in the order of ctx.coset_reps.
std::vector<RealInterval> log_abs_embeddings(const CycloNumber& x, const CartanContext& ctx,
                                             mpfr_prec_t prec);

// log^+ of a nonnegative interval that may touch 0.
RealInterval log_plus_of_abs(const RealInterval& abs_value);

// Absolute logarithmic height of an algebraic integer in Q(zeta_p):
// the mean over all p-1 embeddings of log^+ |x^{sigma_a}|.
RealInterval height(const CycloNumber& x, mpfr_prec_t prec);

// prod base_i^{e_i}, kept factored so that logarithms of huge powers are
// computed as e * log|base| without expanding anything.
struct PowerProduct {
  int p = 0;
  std::vector<std::pair<CycloNumber, Integer>> factors;

  PowerProduct() = default;
  explicit PowerProduct(int p_) : p(p_) {}
  PowerProduct(const CycloNumber& base, const Integer& e) : p(base.p()), factors{{base, e}} {}

  PowerProduct& operator*=(const PowerProduct& o);
  PowerProduct pow(const Integer& n) const;
  PowerProduct inverse() const { return pow(Integer(-1)); }
  PowerProduct galois(long a) const;
  // Exact expansion; only valid when every exponent is nonnegative.
  CycloNumber expand() const;
};

RealInterval log_abs_at(const PowerProduct& x, long a, mpfr_prec_t prec);
std::vector<RealInterval> log_abs_all(const PowerProduct& x, mpfr_prec_t prec);  // a = 1..p-1
// Height via the log^+ mean; the caller guarantees the product is an
// algebraic integer (e.g. a unit or a product of cyclotomic integers).
RealInterval height(const PowerProduct& x, mpfr_prec_t prec);
// Height from a precomputed list of log|x^{sigma_a}|, a = 1..p-1.
RealInterval height_from_logs(const std::vector<RealInterval>& logs);

}  // namespace xns
