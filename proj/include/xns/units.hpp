#pragma once

#include <optional>
#include <vector>

#include "xns/cartan.hpp"
#include "xns/checks.hpp"
#include "xns/cyclotomic.hpp"
#include "xns/interval_matrix.hpp"
#include "xns/precision.hpp"
#include "xns/siegel.hpp"

namespace xns {

// xi_j = zeta^{(1-k)/2} (1 - zeta^k)/(1 - zeta) with k = j + 1, using
// zeta^{1/2} = e^{i pi / p}; its identity embedding is sin(pi k/p)/sin(pi/p).
CycloNumber cyclotomic_xi(int p, int j);

struct UnitSystem {
  CartanContext ctx;
  mpfr_prec_t prec = 0;
  std::vector<CycloNumber> xi;   // xi[j-1] = xi_j, j = 1..(p-3)/2
  std::vector<CycloNumber> eta;  // eta[j-1] = eta_j
  CycloNumber mu;
  long eta0_exponent = 0;        // eta_0 = mu^{eta0_exponent}, never expanded
  std::vector<int> chosen;       // 1-based indices of the d-1 independent eta
  bool default_subset = true;    // chosen == {1, ..., d-1}
  IntervalMatrix A{0, 0, kDefaultPrecision};      // A[k-1][l] = log|eta_{chosen[l]}^{sigma_k}|
  IntervalMatrix A_inv{0, 0, kDefaultPrecision};
  RealInterval det_A;
  // log|eta_j^{sigma_a}| and log|mu^{sigma_a}| for a = 1..p-1 (index a-1).
  std::vector<std::vector<RealInterval>> eta_logs;
  std::vector<RealInterval> mu_logs;

  int d() const { return ctx.d; }
  // log|eta_j^{sigma}| at the embedding with residue a.
  const RealInterval& eta_log(int j, long a) const { return eta_logs.at(j - 1).at(ctx.mod(a) - 1); }
  const RealInterval& mu_log(long a) const { return mu_logs.at(ctx.mod(a) - 1); }
};

// Builds the unit system, selecting d-1 independent eta greedily (lowest
// indices first) by a certified nonzero Gram determinant. Precision doubles on
// PrecisionExhausted; IndependenceFailure once the cap is reached.
UnitSystem build_unit_system(const CartanContext& ctx, const PrecisionPolicy& policy = {});

struct IndexBounds {
  RealInterval hplus_bound;      // upper bound for h+
  RealInterval m_bound;          // hplus_bound (p-1)/(2d)
  RealInterval m_formula_bound;  // p^{(p+1)/4} (log p)^{(p-3)/2}
  bool hplus_overridden = false;
};

IndexBounds index_bounds(const CartanContext& ctx, std::optional<long> hplus_override = std::nullopt,
                         mpfr_prec_t prec = kDefaultPrecision);

// floor(|det A| / 0.32), an upper bound for the unit index from the lower
// bound 0.32 on the regulator of K.
long regulator_m_bound(const UnitSystem& us);

struct MChoice {
  RealInterval m_ub;
  std::string source;
};

// Smallest certified upper bound for m available for this unit system.
MChoice choose_m(const UnitSystem& us, const IndexBounds& ib);

struct DeltaBetaKappa {
  std::vector<int> cusp_labels;
  std::vector<std::vector<RealInterval>> delta_ck;  // [cusp][k]
  std::vector<std::vector<RealInterval>> beta_ck;
  RealInterval delta;
  RealInterval beta;
  RealInterval kappa;
};

// log|Upsilon_{c,sigma}| = log|gamma_{c,sigma}| - 12p log|mu^sigma| for the
// unit U = u_O with O the identity orbit.
RealInterval upsilon_log(const UnitSystem& us, const UnitOrderData& data);

DeltaBetaKappa delta_beta_kappa(const UnitSystem& us, const std::vector<UnitOrderData>& orders,
                                const std::vector<Cusp>& cusps, const RealInterval& m_ub);

struct UpsilonBound {
  int cusp = 1;
  int sigma = 0;
  RealInterval height_ub;  // h(gamma) + 12p h(mu^sigma)
  RealInterval log_abs;    // log|Upsilon_{c,sigma}|
  std::vector<RealInterval> logs_all;  // log|Upsilon^{tau_a}|, a = 1..p-1
};

// Every (cusp, sigma) for U = u_O, O the identity orbit; both values are
// asserted below their closed-form ceilings.
std::vector<UpsilonBound> upsilon_heights(const UnitSystem& us, const std::vector<UnitOrderData>& orders);

// Certified ceilings on heights and log-absolute values of xi, eta, eta_0 and
// Upsilon, one entry per checked quantity.
std::vector<CheckResult> unit_height_checks(const UnitSystem& us, const std::vector<UnitOrderData>& orders);

}  // namespace xns
