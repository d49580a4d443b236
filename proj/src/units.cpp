#include "xns/units.hpp"

#include <algorithm>
#include <cmath>

#include "xns/errors.hpp"

namespace xns {

CycloNumber cyclotomic_xi(int p, int j) {
  const int k = j + 1;
  if (k < 2 || k > (p - 1) / 2) throw DomainError("xi index out of range");
  CycloNumber geometric = CycloNumber::zero(p);
  for (int i = 0; i < k; ++i) geometric += CycloNumber::zeta_power(p, i);
  // zeta^{(1-k)/2} = (e^{i pi/p})^{1-k} = (-1)^{k-1} zeta^{(p+1)(1-k)/2}.
  CycloNumber half_power = CycloNumber::zeta_power(p, 1L * (p + 1) / 2 * (1 - k));
  CycloNumber out = half_power * geometric;
  if ((k - 1) % 2 == 1) out = -out;
  return out;
}

namespace {

// Raised when the greedy search cannot complete a subset at this precision.
class SubsetIncomplete : public PrecisionExhausted {
 public:
  using PrecisionExhausted::PrecisionExhausted;
};

struct ExactUnits {
  std::vector<CycloNumber> xi, eta;
  CycloNumber mu;
};

ExactUnits exact_units(const CartanContext& ctx) {
  ExactUnits out;
  const int p = ctx.p;
  for (int j = 1; j <= (p - 3) / 2; ++j) {
    out.xi.push_back(cyclotomic_xi(p, j));
    out.eta.push_back(norm_to_K(out.xi.back(), ctx, NormSource::Plus));
  }
  out.mu = norm_to_K(CycloNumber::one_minus_zeta(p, 1), ctx, NormSource::Full);
  return out;
}

IntervalMatrix log_matrix(const UnitSystem& us, const std::vector<int>& cols) {
  const int rows = us.d() - 1;
  IntervalMatrix M(rows, cols.size(), us.prec);
  for (int k = 1; k <= rows; ++k)
    for (std::size_t l = 0; l < cols.size(); ++l) M(k - 1, l) = us.eta_log(cols[l], us.ctx.coset_reps[k]);
  return M;
}

UnitSystem build_at(const CartanContext& ctx, const ExactUnits& exact, mpfr_prec_t prec) {
  UnitSystem us;
  us.ctx = ctx;
  us.prec = prec;
  us.xi = exact.xi;
  us.eta = exact.eta;
  us.mu = exact.mu;
  us.eta0_exponent = 12L * ctx.p;
  for (const auto& e : us.eta) {
    std::vector<RealInterval> logs;
    for (int a = 1; a < ctx.p; ++a) logs.push_back(log_abs_at(e, a, prec));
    us.eta_logs.push_back(std::move(logs));
  }
  for (int a = 1; a < ctx.p; ++a) us.mu_logs.push_back(log_abs_at(us.mu, a, prec));

  const int need = ctx.d - 1;
  for (int j = 1; j <= static_cast<int>(us.eta.size()) && static_cast<int>(us.chosen.size()) < need; ++j) {
    std::vector<int> trial = us.chosen;
    trial.push_back(j);
    IntervalMatrix M = log_matrix(us, trial);
    auto gram_det = try_determinant(M.transpose() * M);
    if (gram_det && gram_det->is_positive()) us.chosen = std::move(trial);
  }
  if (static_cast<int>(us.chosen.size()) < need)
    throw SubsetIncomplete("no certified independent subset of eta at " + std::to_string(prec) + " bits");
  us.default_subset = true;
  for (int k = 0; k < need; ++k)
    if (us.chosen[k] != k + 1) us.default_subset = false;

  us.A = log_matrix(us, us.chosen);
  InverseResult inv = invert(us.A);
  us.A_inv = std::move(inv.inverse);
  us.det_A = std::move(inv.determinant);

  IntervalMatrix product = us.A * us.A_inv;
  for (int r = 0; r < need; ++r) {
    for (int c = 0; c < need; ++c) {
      if (!product(r, c).contains(r == c ? 1L : 0L))
        throw InternalInconsistency("A times its inverse misses the identity");
      if (!(product(r, c).width_double() < 0x1p-32))
        throw PrecisionExhausted("inverse of A is too wide");
    }
  }
  return us;
}

}  // namespace

UnitSystem build_unit_system(const CartanContext& ctx, const PrecisionPolicy& policy) {
  const ExactUnits exact = exact_units(ctx);
  try {
    return with_precision(policy, [&](mpfr_prec_t bits) { return build_at(ctx, exact, bits); });
  } catch (const SubsetIncomplete& e) {
    throw IndependenceFailure(e.what());
  }
}

IndexBounds index_bounds(const CartanContext& ctx, std::optional<long> hplus_override, mpfr_prec_t prec) {
  const int p = ctx.p;
  const RealInterval P(p, prec);
  const RealInterval L = log(P);
  auto power = [&](const RealInterval& base, long num, long den) {
    return pow(base, RealInterval::from_rational(make_rational(num, den), prec));
  };
  IndexBounds ib;
  if (hplus_override) {
    if (*hplus_override < 1) throw ConfigError("h+ override must be a positive integer");
    ib.hplus_bound = RealInterval(*hplus_override, prec);
    ib.hplus_overridden = true;
  } else {
    ib.hplus_bound = power(P, p - 3, 4) * power(L, p - 3, 2);
  }
  ib.m_bound = ib.hplus_bound * (p - 1) / (2L * ctx.d);
  ib.m_formula_bound = power(P, p + 1, 4) * power(L, p - 3, 2);
  if (!certainly_leq(ib.m_bound, ib.m_formula_bound))
    throw InternalInconsistency("index bound exceeds its closed form");
  return ib;
}

long regulator_m_bound(const UnitSystem& us) {
  RealInterval ratio = abs(us.det_A) / RealInterval::from_rational(make_rational(32, 100), us.prec);
  long m = mpfr_get_si(ratio.hi().get(), MPFR_RNDD);
  if (m < 1) throw InternalInconsistency("|det A| does not exceed the regulator lower bound 0.32");
  return m;
}

MChoice choose_m(const UnitSystem& us, const IndexBounds& ib) {
  const long reg = regulator_m_bound(us);
  RealInterval reg_iv(reg, us.prec);
  if (us.default_subset && certainly_less(ib.m_bound, reg_iv))
    return {ib.m_bound, ib.hplus_overridden ? "h+ override times (p-1)/(2d)" : "h+ bound times (p-1)/(2d)"};
  return {reg_iv, "floor(|det A| / 0.32)"};
}

RealInterval upsilon_log(const UnitSystem& us, const UnitOrderData& data) {
  return data.gamma_abs_log - us.mu_log(us.ctx.coset_reps.at(data.sigma)) * us.eta0_exponent;
}

DeltaBetaKappa delta_beta_kappa(const UnitSystem& us, const std::vector<UnitOrderData>& orders,
                                const std::vector<Cusp>& cusps, const RealInterval& m_ub) {
  const int n = us.d() - 1;
  const mpfr_prec_t prec = us.prec;
  DeltaBetaKappa out{{}, {}, {}, RealInterval(prec), RealInterval(prec), RealInterval(1, prec)};
  for (int k = 0; k < n; ++k) {
    RealInterval row(prec);
    for (int l = 0; l < n; ++l) row += abs(us.A_inv(k, l));
    out.kappa = max(out.kappa, row);
  }
  for (const Cusp& c : cusps) {
    std::vector<RealInterval> ords, ups;
    for (int l = 1; l <= n; ++l) {
      const UnitOrderData& data = find_order(orders, c.label, 0, l);
      ords.emplace_back(data.ord, prec);
      ups.push_back(upsilon_log(us, data));
    }
    std::vector<RealInterval> dk, bk;
    for (int k = 0; k < n; ++k) {
      RealInterval ds(prec), bs(prec);
      for (int l = 0; l < n; ++l) {
        ds += us.A_inv(k, l) * ords[l];
        bs += us.A_inv(k, l) * ups[l];
      }
      dk.push_back(m_ub * ds / us.ctx.p);
      bk.push_back(m_ub * bs);
      out.delta = max(out.delta, abs(dk.back()));
      out.beta = max(out.beta, abs(bk.back()));
    }
    out.cusp_labels.push_back(c.label);
    out.delta_ck.push_back(std::move(dk));
    out.beta_ck.push_back(std::move(bk));
  }
  return out;
}

std::vector<UpsilonBound> upsilon_heights(const UnitSystem& us, const std::vector<UnitOrderData>& orders) {
  const CartanContext& ctx = us.ctx;
  const int p = ctx.p;
  const mpfr_prec_t prec = us.prec;
  const RealInterval h_mu = height_from_logs(us.mu_logs);
  const RealInterval scale = RealInterval(36L * p * (p - 1), prec) / ctx.d;
  const RealInterval h_ceiling = scale * RealInterval::log2(prec);
  const RealInterval log_ceiling = scale * log(RealInterval(p, prec) / 2);
  std::vector<UpsilonBound> out;
  for (const UnitOrderData& data : orders) {
    if (data.orbit != 0) continue;
    UpsilonBound ub;
    ub.cusp = data.cusp;
    ub.sigma = data.sigma;
    const long rep = ctx.coset_reps[data.sigma];
    auto gamma_logs = log_abs_all(data.gamma_factored, prec);
    for (int a = 1; a < p; ++a)
      ub.logs_all.push_back(gamma_logs[a - 1] - us.mu_log(rep * a) * us.eta0_exponent);
    ub.height_ub = height_from_logs(gamma_logs) + h_mu * us.eta0_exponent;
    ub.log_abs = ub.logs_all.front();
    require_leq(ub.height_ub, h_ceiling, "height of Upsilon");
    for (const auto& l : ub.logs_all) require_leq(abs(l), log_ceiling, "|log| of Upsilon");
    out.push_back(std::move(ub));
  }
  return out;
}

std::vector<CheckResult> unit_height_checks(const UnitSystem& us, const std::vector<UnitOrderData>& orders) {
  const CartanContext& ctx = us.ctx;
  const int p = ctx.p, d = ctx.d;
  const mpfr_prec_t prec = us.prec;
  const RealInterval log2 = RealInterval::log2(prec);
  const RealInterval log_half_p = log(RealInterval(p, prec) / 2);
  auto max_abs = [&](const std::vector<RealInterval>& logs) {
    RealInterval m(prec);
    for (const auto& l : logs) m = max(m, abs(l));
    return m;
  };
  std::vector<CheckResult> out;
  for (std::size_t j = 0; j < us.xi.size(); ++j) {
    std::string tag = "xi_" + std::to_string(j + 1);
    std::vector<RealInterval> logs;
    for (int a = 1; a < p; ++a) logs.push_back(log_abs_at(us.xi[j], a, prec));
    out.push_back(make_check("h(" + tag + ")", "h(xi^sigma) <= 2 log 2", height_from_logs(logs), log2 * 2));
    out.push_back(make_check("max |log|" + tag + "^sigma||", "|log|xi^sigma|| < log(p/2)", max_abs(logs),
                             log_half_p));
  }
  for (std::size_t j = 0; j < us.eta.size(); ++j) {
    std::string tag = "eta_" + std::to_string(j + 1);
    out.push_back(make_check("h(" + tag + ")", "h(eta^sigma) <= (p-1) log 2 / d", height_from_logs(us.eta_logs[j]),
                             log2 * (p - 1) / d));
    out.push_back(make_check("max |log|" + tag + "^sigma||", "|log|eta^sigma|| < (p-1) log(p/2) / (2d)",
                             max_abs(us.eta_logs[j]), log_half_p * (p - 1) / (2L * d)));
  }
  const long e0 = us.eta0_exponent;
  out.push_back(make_check("h(eta_0)", "h(eta_0^sigma) <= 12p(p-1) log 2 / d", height_from_logs(us.mu_logs) * e0,
                           log2 * (12L * p * (p - 1)) / d));
  out.push_back(make_check("max |log|eta_0^sigma||", "|log|eta_0^sigma|| < 12p(p-1) log(p/2) / d",
                           max_abs(us.mu_logs) * e0, log_half_p * (12L * p * (p - 1)) / d));
  for (const UpsilonBound& ub : upsilon_heights(us, orders)) {
    std::string tag = "Upsilon_{" + std::to_string(ub.cusp) + "," + std::to_string(ub.sigma) + "}";
    out.push_back(make_check("h(" + tag + ")", "h(Upsilon) <= 36p(p-1) log 2 / d", ub.height_ub,
                             log2 * (36L * p * (p - 1)) / d));
    out.push_back(make_check("max |log|" + tag + "||", "|log|Upsilon|| <= 36p(p-1) log(p/2) / d",
                             max_abs(ub.logs_all), log_half_p * (36L * p * (p - 1)) / d));
  }
  return out;
}

}  // namespace xns
