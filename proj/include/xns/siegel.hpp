#pragma once

#include <vector>

#include "xns/cartan.hpp"
#include "xns/complex_interval.hpp"
#include "xns/cyclotomic.hpp"
#include "xns/rational.hpp"

namespace xns {

// B_2(T) = T^2 - T + 1/6.
Rational bernoulli_b2(const Rational& t);
// ell_a = B_2(a_1)/2 with a_1 = x/p.
Rational bernoulli_ell(int p, const APoint& a);

struct UnitOrderData {
  int orbit = 0;       // index of the orbit O
  int cusp = 1;        // cusp label
  int sigma = 0;       // Galois coset index
  long ord = 0;        // order of u_{O sigma} at the cusp
  std::vector<APoint> translated;  // O sigma sigma_c
  std::vector<int> gamma_ys;       // y with (0, y) in the translated set
  PowerProduct gamma_factored;     // prod (1 - zeta^y)^{12p}
  CycloNumber gamma;               // the same product, expanded
  RealInterval gamma_abs_log;      // log |gamma| at the identity embedding
};

// ord = 12 p^2 sum ell_a over O sigma sigma_c and the leading constant gamma.
// Certifies integrality, |ord| <= p^2(p^2-1)/d, gamma real, and the height and
// |log| ceilings for gamma; throws InternalInconsistency on failure.
UnitOrderData order_at_cusp(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                            const Cusp& cusp, int orbit, int sigma, mpfr_prec_t prec);

// Every (orbit, cusp, sigma) triple, ordered cusp-major, then orbit, then sigma.
std::vector<UnitOrderData> all_orders(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                                      const std::vector<Cusp>& cusps, mpfr_prec_t prec);

// Finds the entry for a triple in the output of all_orders.
const UnitOrderData& find_order(const std::vector<UnitOrderData>& orders, int cusp, int orbit,
                                int sigma);

// max(ceil(prec log 2 / (2 pi Im tau)), 8)
int default_terms(mpfr_prec_t prec, const ComplexInterval& tau);

// tau = re + i im from decimal strings.
ComplexInterval make_tau(const std::string& re, const std::string& im, mpfr_prec_t prec);

// The Siegel function g_a(tau): a product truncated after `terms` factors of
// each family, times a certified enclosure of the remaining tail.
ComplexInterval eval_siegel(int p, const APoint& a, const ComplexInterval& tau, int terms);
// log |g_a(tau)| with the tail bound applied additively.
RealInterval log_abs_siegel(int p, const APoint& a, const ComplexInterval& tau, int terms);

// |prod_a g_a(tau)^{12p}| / p^{12p}; must contain 1.
RealInterval verify_product_identity(const CartanContext& ctx, const ComplexInterval& tau,
                                     mpfr_prec_t prec);

// log|g_a| minus its two-factor approximation.
RealInterval first_order_residual(int p, const APoint& a, const ComplexInterval& tau, mpfr_prec_t prec);

struct OrbitLogValue {
  RealInterval value;     // log |u_{O sigma}(sigma_c tau)|
  RealInterval main;      // (ord/p) log|q| + log|gamma|
  RealInterval residual;  // value - main
  RealInterval bound;     // 17 p^3 |q|^{1/p}
};

// Requires |q_tau| <= 10^{-p} (DomainError otherwise); throws
// InternalInconsistency if the residual leaves the stated bound.
OrbitLogValue log_u_orbit(const CartanContext& ctx, const std::vector<Orbit>& orbits,
                          const Cusp& cusp, int orbit, int sigma, const ComplexInterval& tau,
                          mpfr_prec_t prec);

}  // namespace xns
