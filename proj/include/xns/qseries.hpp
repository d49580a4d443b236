#pragma once

#include <map>
#include <optional>
#include <vector>

#include "xns/baker.hpp"
#include "xns/cartan.hpp"
#include "xns/cyclotomic.hpp"

namespace xns {

// Truncated power series in q^{1/p}: coeffs[k] multiplies q^{k/p}, k <= K.
// Absent keys are zero.
struct FormalSeries {
  int p = 0;
  int K = 0;
  std::map<int, CycloNumber> coeffs;
  // Integer multiple of 2 pi i left over from taking the logarithm; the
  // expansion never evaluates it.
  long branch_note = 0;

  FormalSeries() = default;
  FormalSeries(int p_, int K_) : p(p_), K(K_) {}
  static FormalSeries one(int p, int K);

  CycloNumber coefficient(int k) const;
  void set(int k, CycloNumber c);  // drops zeros and k > K

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator*=(const Rational& r);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);  // truncated at min K
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.p == b.p && a.K == b.K && a.coeffs == b.coeffs;
  }
};

// log(1 + t) for a series 1 + t with t of positive order.
FormalSeries formal_log(const FormalSeries& s);

// The normalized logarithm of u_{O sigma}^{exponent/(12p)} at a cusp:
// sum over a in O sigma sigma_c of exponent * (log(1 - q^{n+a1} zeta^y) +
// log(1 - q^{n+1-a1} zeta^{-y})), the a1 = 0, n = 0 factor excluded.
// TruncationTooSmall when K < p; DomainError for an odd exponent.
FormalSeries log_unit_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                             int orbit, int sigma, int K, long exponent);

// The product of the same factors, expanded directly (positive exponent).
FormalSeries unit_product_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                                 int orbit, int sigma, int K, long exponent);

// Series of U^{2 n2} (U^sigma)^{2 n1} for a combined-unit descriptor.
FormalSeries combined_unit_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                                  const CombinedUnit& cu, int K);

struct LambdaRow {
  int k = 0;
  RealInterval max_abs;       // max over embeddings of |lambda_k^{sigma_a}|
  RealInterval arch_bound;    // weight * 48 p^2 (k + p)
  bool k_lambda_integral = false;
  Integer denominator;        // lcm of coordinate denominators
  RealInterval height_ub;     // arch log^+ mean + log(denominator)
  RealInterval height_bound;  // log(weight (48p^3 + 48 k p^2)) + log k
  bool pass = false;
};

struct LambdaReport {
  std::vector<LambdaRow> rows;
  bool all_pass = true;
};

// Checks every k = 1..K. `weight` scales the bounds for series built with
// exponent weight * 24p.
LambdaReport verify_lambda_bounds(const FormalSeries& fs, int K, long weight = 1,
                                  mpfr_prec_t prec = kDefaultPrecision);
// Throws BoundViolation naming the first failing k.
void enforce(const LambdaReport& report);

struct FirstNonzero {
  std::optional<int> k;  // empty: not found below K
  int searched_to = 0;
  long ceiling = 0;      // p^5
};
FirstNonzero first_nonzero(const FormalSeries& fs, int K);

// sum_k lambda_k q^{k/p} at tau (identity embedding), with the tail beyond K
// bounded through |lambda_k| <= weight 48p^2(k+p).
ComplexInterval evaluate_series(const FormalSeries& fs, const ComplexInterval& tau, long weight = 1);

}  // namespace xns
