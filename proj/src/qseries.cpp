#include "xns/qseries.hpp"

#include <algorithm>

#include "xns/errors.hpp"

namespace xns {

FormalSeries FormalSeries::one(int p, int K) {
  FormalSeries s(p, K);
  s.coeffs.emplace(0, CycloNumber::one(p));
  return s;
}

CycloNumber FormalSeries::coefficient(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? CycloNumber::zero(p) : it->second;
}

void FormalSeries::set(int k, CycloNumber c) {
  if (k > K || k < 0) return;
  if (c.is_zero())
    coeffs.erase(k);
  else
    coeffs[k] = std::move(c);
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (p != o.p) throw DomainError("series over different fields");
  K = std::min(K, o.K);
  for (auto it = coeffs.begin(); it != coeffs.end();) it = it->first > K ? coeffs.erase(it) : std::next(it);
  for (const auto& [k, c] : o.coeffs)
    if (k <= K) set(k, coefficient(k) + c);
  branch_note += o.branch_note;
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs) c *= r;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  if (a.p != b.p) throw DomainError("series over different fields");
  FormalSeries out(a.p, std::min(a.K, b.K));
  std::map<int, CycloNumber> acc;
  for (const auto& [i, x] : a.coeffs) {
    if (i > out.K) break;
    for (const auto& [j, y] : b.coeffs) {
      if (i + j > out.K) break;
      auto it = acc.find(i + j);
      if (it == acc.end())
        acc.emplace(i + j, x * y);
      else
        it->second += x * y;
    }
  }
  for (auto& [k, c] : acc) out.set(k, std::move(c));
  return out;
}

FormalSeries formal_log(const FormalSeries& s) {
  if (!(s.coefficient(0) == CycloNumber::one(s.p))) throw DomainError("formal log needs constant term 1");
  // k L_k = k s_k - sum_{i<k} i L_i s_{k-i}
  FormalSeries L(s.p, s.K);
  for (int k = 1; k <= s.K; ++k) {
    CycloNumber acc = s.coefficient(k) * Rational(k);
    for (const auto& [i, li] : L.coeffs) {
      if (i >= k) break;
      auto it = s.coeffs.find(k - i);
      if (it != s.coeffs.end()) acc -= li * it->second * Rational(i);
    }
    L.set(k, acc * Rational(1, k));
  }
  return L;
}

namespace {

std::vector<APoint> series_points(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                                  const Cusp& cusp, int orbit, int sigma) {
  const int moved = ctx.coset_of[1L * orbits.at(orbit).label * ctx.coset_reps.at(sigma) % ctx.p];
  return translate(ctx, orbits.at(moved).members, cusp.sigma);
}

void check_args(const CartanContext& ctx, int K, long exponent) {
  if (K < ctx.p) throw TruncationTooSmall("truncation K must be at least p");
  if (exponent % 2 != 0) throw DomainError("series exponent must be even");
}

}  // namespace

FormalSeries log_unit_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                             int orbit, int sigma, int K, long exponent) {
  check_args(ctx, K, exponent);
  const int p = ctx.p;
  const auto S = series_points(ctx, orbits, cusp, orbit, sigma);
  FormalSeries fs(p, K);
  for (int k = 1; k <= K; ++k) {
    // Coefficients over the exponents 0..p-1 of zeta, folded at the end.
    std::vector<Rational> full(p);
    for (int j = 1; j <= k; ++j) {
      if (k % j) continue;
      const int m = (k / j) % p;
      const Rational w(-exponent, j);
      for (const APoint& a : S) {
        if (m == a.x) full[ctx.mod(1L * j * a.y)] += w;
        if (m == (p - a.x) % p) full[ctx.mod(-1L * j * a.y)] += w;
      }
    }
    fs.set(k, CycloNumber::from_exponents(p, full));
  }
  return fs;
}

FormalSeries unit_product_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                                 int orbit, int sigma, int K, long exponent) {
  check_args(ctx, K, exponent);
  if (exponent <= 0) throw DomainError("product expansion needs a positive exponent");
  const int p = ctx.p;
  const auto S = series_points(ctx, orbits, cusp, orbit, sigma);
  FormalSeries acc = FormalSeries::one(p, K);
  auto apply = [&](int e, long shift) {
    // acc *= (1 - zeta^shift q^{e/p})^exponent
    FormalSeries next(p, K);
    Integer binom = 1;
    for (long i = 0; i <= exponent && i * e <= K; ++i) {
      if (i > 0) {
        binom *= exponent - i + 1;
        binom /= i;
      }
      Rational c = (i % 2 ? -1 : 1) * Rational(binom);
      for (const auto& [k, v] : acc.coeffs) {
        if (k + i * e > K) break;
        next.set(static_cast<int>(k + i * e), next.coefficient(static_cast<int>(k + i * e)) + v.times_zeta(shift * i) * c);
      }
    }
    acc = std::move(next);
  };
  for (const APoint& a : S) {
    for (int e = a.x; e <= K; e += p)
      if (e > 0) apply(e, a.y);
    for (int e = p - a.x; e <= K; e += p) apply(e, -a.y);
  }
  return acc;
}

FormalSeries combined_unit_series(const CartanContext& ctx, const std::vector<Orbit>& orbits, const Cusp& cusp,
                                  const CombinedUnit& cu, int K) {
  const long base = 12L * ctx.p;
  return log_unit_series(ctx, orbits, cusp, cu.orbit, 0, K, 2 * cu.n2 * base) +
         log_unit_series(ctx, orbits, cusp, cu.orbit, cu.sigma, K, 2 * cu.n1 * base);
}

LambdaReport verify_lambda_bounds(const FormalSeries& fs, int K, long weight, mpfr_prec_t prec) {
  const int p = fs.p;
  const RealInterval P(p, prec);
  LambdaReport report;
  for (int k = 1; k <= std::min(K, fs.K); ++k) {
    const CycloNumber lam = fs.coefficient(k);
    LambdaRow row;
    row.k = k;
    row.arch_bound = square(P) * (48L * weight) * (k + p);
    row.height_bound = log((pow(P, 3L) + square(P) * k) * (48L * weight)) + log(RealInterval(k, prec));
    row.k_lambda_integral = (lam * Rational(k)).is_integral();
    row.denominator = lam.denominator();
    row.max_abs = RealInterval(prec);
    RealInterval plus_sum(prec);
    for (int a = 1; a < p; ++a) {
      RealInterval m = abs(embed(lam, a, prec));
      row.max_abs = max(row.max_abs, m);
      plus_sum += log_plus_of_abs(m);
    }
    row.height_ub = plus_sum / (p - 1) + log(RealInterval::from_integer(row.denominator, prec));
    row.pass = row.k_lambda_integral && certify_leq(row.max_abs, row.arch_bound) &&
               certify_leq(row.height_ub, row.height_bound);
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void enforce(const LambdaReport& report) {
  for (const auto& row : report.rows)
    if (!row.pass) throw BoundViolation("lambda_k bound fails at k = " + std::to_string(row.k));
}

FirstNonzero first_nonzero(const FormalSeries& fs, int K) {
  FirstNonzero out;
  out.searched_to = std::min(K, fs.K);
  out.ceiling = 1L * fs.p * fs.p * fs.p * fs.p * fs.p;
  for (const auto& [k, c] : fs.coeffs) {
    if (k < 1) continue;
    if (k > out.searched_to) break;
    if (!c.is_zero()) {
      out.k = k;
      break;
    }
  }
  return out;
}

ComplexInterval evaluate_series(const FormalSeries& fs, const ComplexInterval& tau, long weight) {
  const mpfr_prec_t prec = tau.precision();
  const int p = fs.p;
  const RealInterval two_pi = RealInterval::pi(prec) * 2;
  ComplexInterval sum(prec);
  for (const auto& [k, c] : fs.coeffs) {
    if (k == 0) continue;
    RealInterval s = two_pi * k / p;
    ComplexInterval qk = exp(ComplexInterval(-(tau.im() * s), tau.re() * s));
    sum += embed(c, 1, prec) * qk;
  }
  // sum_{k>K} (k+p) r^k <= r^{K+1} ((K+1+p)/(1-r) + r/(1-r)^2), r = |q|^{1/p}
  RealInterval r = exp(-(two_pi * tau.im()) / p);
  r = RealInterval::from_bounds(r.hi(), r.hi());
  RealInterval one(1, prec);
  if (!certainly_less(r, one)) throw DomainError("series tail does not converge");
  RealInterval tail = pow(r, fs.K + 1L) * ((RealInterval(fs.K + 1L + p, prec)) / (one - r) + r / square(one - r)) *
                      square(RealInterval(p, prec)) * (48L * weight);
  RealInterval spread = RealInterval::from_bounds((-tail).lo(), tail.hi());
  return sum + ComplexInterval(spread, spread);
}

}  // namespace xns
