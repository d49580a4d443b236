#include "xns/siegel.hpp"

#include <algorithm>
#include <cmath>

#include "xns/checks.hpp"
#include "xns/errors.hpp"

namespace xns {

Rational bernoulli_b2(const Rational& t) { return t * t - t + Rational(1, 6); }

Rational bernoulli_ell(int p, const APoint& a) {
  return bernoulli_b2(make_rational(a.x, p)) / 2;
}

UnitOrderData order_at_cusp(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                            const Cusp& cusp, int orbit, int sigma, mpfr_prec_t prec) {
  const int p = ctx.p;
  UnitOrderData out;
  out.orbit = orbit;
  out.cusp = cusp.label;
  out.sigma = sigma;
  const int moved = ctx.coset_of[1L * orbits.at(orbit).label * ctx.coset_reps.at(sigma) % p];
  out.translated = translate(ctx, orbits.at(moved).members, cusp.sigma);

  Rational sum = 0;
  for (const APoint& a : out.translated) sum += bernoulli_ell(p, a);
  Rational ord = sum * (12L * p * p);
  ord.canonicalize();
  if (ord.get_den() != 1) throw InternalInconsistency("vanishing order is not an integer");
  out.ord = ord.get_num().get_si();
  const long ceiling = 1L * p * p * (1L * p * p - 1) / ctx.d;
  if (std::labs(out.ord) > ceiling) throw InternalInconsistency("vanishing order exceeds p^2(p^2-1)/d");

  out.gamma_factored = PowerProduct(p);
  for (const APoint& a : out.translated) {
    if (a.x != 0) continue;
    out.gamma_ys.push_back(a.y);
    out.gamma_factored *= PowerProduct(CycloNumber::one_minus_zeta(p, a.y), Integer(12 * p));
  }
  if (out.gamma_ys.size() > 2 * ctx.H.size())
    throw InternalInconsistency("too many a_1 = 0 points in a translated orbit");
  out.gamma = out.gamma_factored.expand();
  if (!out.gamma.is_real()) throw InternalInconsistency("leading constant is not real");
  if (out.gamma.is_zero()) throw InternalInconsistency("leading constant vanishes");

  out.gamma_abs_log = log_abs_at(out.gamma_factored, 1, prec);
  auto logs = log_abs_all(out.gamma_factored, prec);
  const RealInterval scale = RealInterval(24L * p * (p - 1), prec) / ctx.d;
  require_leq(height_from_logs(logs), scale * RealInterval::log2(prec), "height of gamma");
  const RealInterval log_half_p = log(RealInterval(p, prec) / 2);
  for (const auto& l : logs) require_leq(abs(l), scale * log_half_p, "|log| of gamma");
  return out;
}

std::vector<UnitOrderData> all_orders(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                                      const std::vector<Cusp>& cusps, mpfr_prec_t prec) {
  std::vector<UnitOrderData> out;
  for (const Cusp& c : cusps)
    for (int o = 0; o < ctx.num_cosets(); ++o)
      for (int s = 0; s < ctx.num_cosets(); ++s) out.push_back(order_at_cusp(ctx, orbits, c, o, s, prec));
  return out;
}

const UnitOrderData& find_order(const std::vector<UnitOrderData>& orders, int cusp, int orbit, int sigma) {
  for (const auto& u : orders)
    if (u.cusp == cusp && u.orbit == orbit && u.sigma == sigma) return u;
  throw DomainError("no order data for the requested triple");
}

int default_terms(mpfr_prec_t prec, const ComplexInterval& tau) {
  double im = tau.im().lo_double();
  if (!(im > 0)) throw DomainError("Im tau must be positive");
  double n = std::ceil(static_cast<double>(prec) * std::log(2.0) / (2 * M_PI * im));
  return std::max(static_cast<int>(n), 8);
}

ComplexInterval make_tau(const std::string& re, const std::string& im, mpfr_prec_t prec) {
  return {RealInterval::from_strings(re, re, prec), RealInterval::from_strings(im, im, prec)};
}

namespace {

struct SiegelParts {
  ComplexInterval prefactor;      // -q^{ell} e^{pi i a2 (a1 - 1)}
  ComplexInterval product;        // truncated double product
  RealInterval log_abs_product;   // sum of log|1 - z| over the same factors
  RealInterval ell_log_q;         // ell * log|q|
  RealInterval tail;              // epsilon with |log tail| <= epsilon
};

void check_domain(const ComplexInterval& tau) {
  const mpfr_prec_t prec = tau.precision();
  RealInterval half_sqrt3 = sqrt(RealInterval(3, prec)) / 2;
  if (certainly_less(tau.im(), half_sqrt3)) throw DomainError("Im tau below sqrt(3)/2");
}

// 2 pi i tau s
ComplexInterval scaled_exponent(const ComplexInterval& tau, const Rational& s) {
  const mpfr_prec_t prec = tau.precision();
  RealInterval two_pi_s = RealInterval::pi(prec) * 2 * RealInterval::from_rational(s, prec);
  return {-(tau.im() * two_pi_s), tau.re() * two_pi_s};
}

// Upper bound for |sum_{n >= N} log(1 - z_n)| over both factor families.
RealInterval tail_epsilon(int p, const APoint& a, const ComplexInterval& tau, int terms) {
  const mpfr_prec_t prec = tau.precision();
  RealInterval log_q = -(RealInterval::pi(prec) * 2 * tau.im());
  RealInterval L = RealInterval::from_bounds(log_q.hi(), log_q.hi());
  auto q_pow = [&](const Rational& s) { return exp(L * RealInterval::from_rational(s, prec)); };
  Rational a1 = make_rational(a.x, p);
  Rational e1 = terms + a1;
  Rational e2 = terms + 1 - a1;
  RealInterval r = q_pow(std::min(e1, e2));
  RealInterval one(1, prec);
  if (!certainly_less(r, one)) throw DomainError("tail ratio is not below 1");
  RealInterval sum = (q_pow(e1) + q_pow(e2)) / (one - q_pow(Rational(1)));
  RealInterval c = -log(one - r) / r;
  RealInterval eps = c * sum;
  return RealInterval::from_bounds(eps.hi(), eps.hi());
}

SiegelParts siegel_parts(int p, const APoint& a, const ComplexInterval& tau, int terms) {
  if (terms < 1) throw DomainError("at least one product term is required");
  check_domain(tau);
  const mpfr_prec_t prec = tau.precision();
  const auto& roots = root_table(p, prec);
  const Rational a1 = make_rational(a.x, p);
  const Rational a2 = make_rational(a.y, p);
  const Rational ell = bernoulli_b2(a1) / 2;

  SiegelParts parts{ComplexInterval(prec), ComplexInterval::from_real(RealInterval(1, prec)),
                    RealInterval(prec), RealInterval(prec), RealInterval(prec)};
  RealInterval log_q = -(RealInterval::pi(prec) * 2 * tau.im());
  parts.ell_log_q = log_q * RealInterval::from_rational(ell, prec);
  RealInterval phase = RealInterval::pi(prec) * RealInterval::from_rational(a2 * (a1 - 1), prec);
  parts.prefactor = -(exp(scaled_exponent(tau, ell)) * ComplexInterval::expi(phase));

  const ComplexInterval one = ComplexInterval::from_real(RealInterval(1, prec));
  const ComplexInterval& rot = roots[a.y % p];
  const ComplexInterval& rot_inv = roots[(p - a.y) % p];
  for (int n = 0; n < terms; ++n) {
    ComplexInterval f1 = one - exp(scaled_exponent(tau, n + a1)) * rot;
    ComplexInterval f2 = one - exp(scaled_exponent(tau, n + 1 - a1)) * rot_inv;
    parts.product *= f1 * f2;
    parts.log_abs_product += log_abs(f1) + log_abs(f2);
  }
  parts.tail = tail_epsilon(p, a, tau, terms);
  return parts;
}

}  // namespace

ComplexInterval eval_siegel(int p, const APoint& a, const ComplexInterval& tau, int terms) {
  SiegelParts parts = siegel_parts(p, a, tau, terms);
  const mpfr_prec_t prec = tau.precision();
  RealInterval rho = exp(parts.tail) - 1;
  RealInterval spread = RealInterval::from_bounds((-rho).lo(), rho.hi());
  ComplexInterval tail_factor(RealInterval(1, prec) + spread, spread);
  return parts.prefactor * parts.product * tail_factor;
}

RealInterval log_abs_siegel(int p, const APoint& a, const ComplexInterval& tau, int terms) {
  SiegelParts parts = siegel_parts(p, a, tau, terms);
  RealInterval spread = RealInterval::from_bounds((-parts.tail).lo(), parts.tail.hi());
  return parts.ell_log_q + parts.log_abs_product + spread;
}

RealInterval verify_product_identity(const CartanContext& ctx, const ComplexInterval& tau_in,
                                     mpfr_prec_t prec) {
  const int p = ctx.p;
  ComplexInterval tau(tau_in.re().with_precision(prec), tau_in.im().with_precision(prec));
  const int terms = default_terms(prec, tau);
  RealInterval sum(prec);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if (x || y) sum += log_abs_siegel(p, {x, y}, tau, terms);
  RealInterval total = sum * (12L * p) - log(RealInterval(p, prec)) * (12L * p);
  return exp(total);
}

RealInterval first_order_residual(int p, const APoint& a, const ComplexInterval& tau_in, mpfr_prec_t prec) {
  ComplexInterval tau(tau_in.re().with_precision(prec), tau_in.im().with_precision(prec));
  const auto& roots = root_table(p, prec);
  const Rational a1 = make_rational(a.x, p);
  const ComplexInterval one = ComplexInterval::from_real(RealInterval(1, prec));
  RealInterval log_q = -(RealInterval::pi(prec) * 2 * tau.im());
  RealInterval approx = log_q * RealInterval::from_rational(bernoulli_ell(p, a), prec) +
                        log_abs(one - exp(scaled_exponent(tau, a1)) * roots[a.y % p]) +
                        log_abs(one - exp(scaled_exponent(tau, 1 - a1)) * roots[(p - a.y) % p]);
  return log_abs_siegel(p, a, tau, default_terms(prec, tau)) - approx;
}

OrbitLogValue log_u_orbit(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                          const Cusp& cusp, int orbit, int sigma, const ComplexInterval& tau_in,
                          mpfr_prec_t prec) {
  const int p = ctx.p;
  ComplexInterval tau(tau_in.re().with_precision(prec), tau_in.im().with_precision(prec));
  RealInterval log_q = -(RealInterval::pi(prec) * 2 * tau.im());
  RealInterval log_ceiling = -(log(RealInterval(10, prec)) * p);
  if (!certainly_leq(log_q, log_ceiling)) throw DomainError("|q| must be at most 10^-p");

  UnitOrderData data = order_at_cusp(ctx, orbits, cusp, orbit, sigma, prec);
  const int terms = default_terms(prec, tau);
  OrbitLogValue out{RealInterval(prec), RealInterval(prec), RealInterval(prec), RealInterval(prec)};
  for (const APoint& a : data.translated) out.value += log_abs_siegel(p, a, tau, terms);
  out.value = out.value * (12L * p);
  out.main = log_q * RealInterval(data.ord, prec) / p + data.gamma_abs_log;
  out.residual = out.value - out.main;
  out.bound = RealInterval(17L * p * p * p, prec) * exp(log_q / p);
  require_leq(abs(out.residual), RealInterval::from_bounds(out.bound.lo(), out.bound.lo()),
              "orbit expansion residual");
  return out;
}

}  // namespace xns
