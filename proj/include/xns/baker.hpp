#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xns/cartan.hpp"
#include "xns/checks.hpp"
#include "xns/precision.hpp"
#include "xns/siegel.hpp"
#include "xns/units.hpp"

namespace xns {

enum class Mode { Rigorous, PaperWorstCase };
std::string to_string(Mode m);
Mode parse_mode(const std::string& s);  // ConfigError on unknown names

// C_1(d) = min((e/2) d^{4.5} 30^{d+3}, 2^{6d+20}); asserts C_1(d) < 2 d^{4.5} 30^{d+3}.
RealInterval matveev_C1(int d, mpfr_prec_t prec = kDefaultPrecision);

// The blanket estimates used when every unit-dependent quantity is replaced
// by its closed-form ceiling.
struct WorstCase {
  RealInterval m;        // p^{(p+1)/4} (log p)^{(p-3)/2}
  RealInterval delta;    // p^{(3p-3)/4} (log p)^{(p-5)/2}
  RealInterval beta;     // 36 p^{(3p-7)/4} (log p)^{(p-3)/2}
  RealInterval kappa_m;  // p^{(3p-11)/4} (log p)^{(p-5)/2}, the ceiling for kappa * m
  RealInterval kappa;    // kappa_m / m
  RealInterval A_zero_k, A_zero_d;        // p^2/d and 36 p^3/d
  RealInterval A_nonzero_k, A_nonzero_d;  // p^6/d^2 and 36 p^7/d^2
  RealInterval Omega;    // 36 p^{6d+1} / d^{2d}
};
WorstCase worst_case(int p, int d, mpfr_prec_t prec = kDefaultPrecision);

enum class OrderCase { Zero, Nonzero };

struct BakerInputs {
  int degree_param = 0;  // (p-1)/2
  int n_logs = 0;        // d
  std::vector<RealInterval> A_k;  // for the cusp attaining Omega
  RealInterval Omega;
  RealInterval lambda;  // 12 p^7 m
  RealInterval C1;
  RealInterval delta, beta, kappa, m_ub;
  OrderCase omega_case = OrderCase::Nonzero;
  int omega_cusp = 1;
  int omega_sigma = 0;  // the auxiliary sigma in the nonzero case
  std::vector<std::pair<int, RealInterval>> omega_per_cusp;
};

// Rigorous mode: certified max((p-1)/2 h(alpha_k), |log alpha_k|, 0.16) per
// cusp, with Omega the maximum over cusps and, in the nonzero case, the
// minimum over sigma != 1. Worst-case mode: the closed-form choices.
BakerInputs choose_Ak(const UnitSystem& us, const std::vector<UnitOrderData>& orders,
                      const std::vector<Cusp>& cusps, Mode mode);

struct Assembly {
  RealInterval K1, K2, B0, bound_log_j, log_lambda;
};

// K1, K2, B0 and the bound on log|j(P)|; DomainError unless K1 > 1.
Assembly assemble_bound(const BakerInputs& bi);

// (C(d) p^{6d+5} (log p)^2, 41993 13^p p^{2p+7.5} (log p)^2)
std::pair<RealInterval, RealInterval> theorem_bounds(int p, int d, mpfr_prec_t prec = kDefaultPrecision);
RealInterval theorem1_constant(int d, mpfr_prec_t prec = kDefaultPrecision);  // 30^{d+5} d^{-2d+4.5}

struct LambdaZero {
  RealInterval main_branch;  // p^2 log(48p^12+48p^8) + p log(96p^2(p^5+p+1)) + log 2
  RealInterval alt_branch;   // p log(96p^2(p^5+p)) + log 2
  RealInterval value;        // max of the two
};
LambdaZero lambda_zero_bound(int p, mpfr_prec_t prec = kDefaultPrecision);

// p log 10 + log 2, valid when |q_c(P)| > 10^{-p}.
RealInterval easy_case_bound(int p, mpfr_prec_t prec = kDefaultPrecision);

struct CombinedUnit {
  int cusp = 1;
  int orbit = 0;  // U = u_O with ord_c U < 0
  int sigma = 0;  // ord_c U^sigma > 0
  long n1 = 0;    // -ord_c U
  long n2 = 0;    // ord_c U^sigma
};

// Deterministic choice: the negative order of smallest magnitude, then the
// positive conjugate order of smallest magnitude. AllOrdersZero when every
// orbit has order 0 at the cusp.
CombinedUnit combined_unit_descriptor(const CartanContext& ctx, const std::vector<UnitOrderData>& orders,
                                      int cusp);

struct PipelineConfig {
  int p = 7;
  int d = 3;
  Mode mode = Mode::Rigorous;
  std::optional<long> hplus_override;
  PrecisionPolicy policy;
  std::optional<std::filesystem::path> cache_dir;  // unit-system cache, unused when empty
};

struct BoundReport {
  int p = 0, d = 0;
  Mode mode = Mode::Rigorous;
  mpfr_prec_t precision_bits = 0;
  // context
  int xi = 0;
  std::vector<int> H, coset_reps;
  long group_order = 0, group_order_H = 0;
  int cusp_count = 0;
  std::vector<int> orbit_sizes;
  // units
  std::vector<int> chosen_eta;
  RealInterval det_A;
  IndexBounds index;
  long regulator_m = 0;
  RealInterval m_used;
  std::string m_source;
  // pipeline
  RealInterval delta, beta, kappa;
  RealInterval C1, Omega, lambda;
  std::vector<RealInterval> A_k;
  std::string omega_case;
  int omega_cusp = 1;
  RealInterval K1, K2, B0;
  // bounds
  RealInterval bound_log_j, theorem1, theorem2, theorem1_at_max_d;
  bool theorem1_max_d_le_theorem2 = false;
  LambdaZero lambda_zero;
  RealInterval easy_case;
  RealInterval overall;
  std::optional<CombinedUnit> combined_unit;
  std::vector<std::string> assumptions;
  std::vector<CheckResult> checks;
};

// Dominance ceilings on the assembled quantities: K1, B0, 1 + log B0 against
// their closed forms and bound_log_j against Theorem 1.
std::vector<CheckResult> dominance_checks(const BoundReport& r);

// Runs the whole pipeline, doubling precision on PrecisionExhausted.
BoundReport run_pipeline(const PipelineConfig& cfg);

// Formula anchors keyed by report field name.
const std::map<std::string, std::string>& report_anchors();

}  // namespace xns
