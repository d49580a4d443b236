#include "xns/baker.hpp"

#include <algorithm>

#include "xns/cache.hpp"
#include "xns/errors.hpp"

namespace xns {

std::string to_string(Mode m) { return m == Mode::Rigorous ? "rigorous" : "paper-worst-case"; }

Mode parse_mode(const std::string& s) {
  if (s == "rigorous") return Mode::Rigorous;
  if (s == "paper-worst-case") return Mode::PaperWorstCase;
  throw ConfigError("unknown mode '" + s + "'");
}

namespace {

RealInterval rpow(long base, long num, long den, mpfr_prec_t prec) {
  return pow(RealInterval(base, prec), RealInterval::from_rational(make_rational(num, den), prec));
}

RealInterval rpow(const RealInterval& base, long num, long den) {
  return pow(base, RealInterval::from_rational(make_rational(num, den), base.precision()));
}



}  // namespace

RealInterval matveev_C1(int d, mpfr_prec_t prec) {
  if (d < 3) throw BadIndex("C1 needs d >= 3");
  RealInterval d45 = rpow(d, 9, 2, prec);
  RealInterval thirty = pow(RealInterval(30, prec), d + 3L);
  RealInterval first = RealInterval::euler_e(prec) / 2 * d45 * thirty;
  RealInterval second = pow(RealInterval(2, prec), 6L * d + 20);
  RealInterval c1 = min(first, second);
  require_less(c1, d45 * thirty * 2, "C1(d)");
  return c1;
}

WorstCase worst_case(int p, int d, mpfr_prec_t prec) {
  const RealInterval P(p, prec);
  const RealInterval L = log(P);
  WorstCase w;
  w.m = rpow(p, p + 1, 4, prec) * rpow(L, p - 3, 2);
  w.delta = rpow(p, 3L * p - 3, 4, prec) * rpow(L, p - 5, 2);
  w.beta = rpow(p, 3L * p - 7, 4, prec) * rpow(L, p - 3, 2) * 36;
  w.kappa_m = rpow(p, 3L * p - 11, 4, prec) * rpow(L, p - 5, 2);
  w.kappa = w.kappa_m / w.m;
  w.A_zero_k = pow(P, 2L) / d;
  w.A_zero_d = pow(P, 3L) * 36 / d;
  w.A_nonzero_k = pow(P, 6L) / (1L * d * d);
  w.A_nonzero_d = pow(P, 7L) * 36 / (1L * d * d);
  w.Omega = pow(P, 6L * d + 1) * 36 / pow(RealInterval(d, prec), 2L * d);
  return w;
}

BakerInputs choose_Ak(const UnitSystem& us, const std::vector<UnitOrderData>& orders,
                      const std::vector<Cusp>& cusps, Mode mode) {
  const CartanContext& ctx = us.ctx;
  const int p = ctx.p, d = ctx.d;
  const mpfr_prec_t prec = us.prec;
  const WorstCase wc = worst_case(p, d, prec);
  BakerInputs bi;
  bi.degree_param = (p - 1) / 2;
  bi.n_logs = d;
  bi.C1 = matveev_C1(d, prec);

  if (mode == Mode::PaperWorstCase) {
    bi.A_k.assign(d - 1, wc.A_nonzero_k);
    bi.A_k.push_back(wc.A_nonzero_d);
    RealInterval zero_case = pow(wc.A_zero_k, d - 1L) * wc.A_zero_d;
    bi.Omega = max(wc.Omega, zero_case);
    bi.omega_case = OrderCase::Nonzero;
    return bi;
  }

  const RealInterval half(bi.degree_param, prec);
  const RealInterval floor_value = RealInterval::from_rational(make_rational(16, 100), prec);
  auto A_of = [&](const RealInterval& h, const RealInterval& log_abs) {
    return max(max(half * h, abs(log_abs)), floor_value);
  };
  std::map<std::pair<int, int>, UpsilonBound> ups;
  for (auto& ub : upsilon_heights(us, orders)) ups.emplace(std::make_pair(ub.cusp, ub.sigma), ub);

  bool have = false;
  for (const Cusp& c : cusps) {
    const long n = find_order(orders, c.label, 0, 0).ord;
    const UpsilonBound& u1 = ups.at({c.label, 0});
    std::vector<RealInterval> best_A;
    RealInterval best_omega(prec);
    int best_sigma = 0;
    if (n == 0) {
      for (int j : us.chosen) {
        RealInterval A = A_of(height_from_logs(us.eta_logs[j - 1]), us.eta_log(j, 1));
        require_leq(A, wc.A_zero_k, "A_k (order zero)");
        best_A.push_back(A);
      }
      RealInterval Ad = A_of(u1.height_ub, u1.log_abs);
      require_leq(Ad, wc.A_zero_d, "A_d (order zero)");
      best_A.push_back(Ad);
      best_omega = RealInterval(1, prec);
      for (const auto& A : best_A) best_omega *= A;
    } else {
      bool first = true;
      for (int s = 1; s < d; ++s) {
        const long n2 = find_order(orders, c.label, 0, s).ord;
        const long rep = ctx.coset_reps[s];
        const RealInterval N(n, prec), N2(n2, prec);
        std::vector<RealInterval> As;
        for (int j : us.chosen) {
          std::vector<RealInterval> logs;
          for (int b = 1; b < p; ++b) logs.push_back(N2 * us.eta_log(j, b) - N * us.eta_log(j, rep * b));
          RealInterval A = A_of(height_from_logs(logs), logs.front());
          require_leq(A, wc.A_nonzero_k, "A_k (nonzero order)");
          As.push_back(A);
        }
        const UpsilonBound& us_ = ups.at({c.label, s});
        RealInterval h = abs(N2) * u1.height_ub + abs(N) * us_.height_ub;
        RealInterval Ad = A_of(h, N2 * u1.log_abs - N * us_.log_abs);
        require_leq(Ad, wc.A_nonzero_d, "A_d (nonzero order)");
        As.push_back(Ad);
        RealInterval omega(1, prec);
        for (const auto& A : As) omega *= A;
        if (first || omega.hi() < best_omega.hi()) {
          best_omega = omega;
          best_A = As;
          best_sigma = s;
          first = false;
        }
      }
    }
    bi.omega_per_cusp.emplace_back(c.label, best_omega);
    if (!have || bi.Omega.hi() < best_omega.hi()) {
      bi.Omega = best_omega;
      bi.A_k = best_A;
      bi.omega_case = n == 0 ? OrderCase::Zero : OrderCase::Nonzero;
      bi.omega_cusp = c.label;
      bi.omega_sigma = best_sigma;
      have = true;
    }
  }
  require_leq(bi.Omega, wc.Omega, "Omega");
  return bi;
}

Assembly assemble_bound(const BakerInputs& bi) {
  const mpfr_prec_t prec = bi.C1.precision();
  const long p = 2L * bi.degree_param + 1;
  const RealInterval half(bi.degree_param, prec);
  const RealInterval one(1, prec);
  const RealInterval core = bi.C1 * bi.Omega * square(half) * (one + log(half));
  Assembly a;
  a.log_lambda = log(bi.lambda);
  a.K1 = bi.delta * p * core;
  if (!certainly_less(one, a.K1)) throw DomainError("K1 must exceed 1");
  a.K2 = a.K1 + bi.beta + RealInterval(2 * p * p * p, prec) * bi.m_ub * bi.kappa + bi.delta * p * a.log_lambda;
  a.B0 = (a.K1 * log(a.K1) + a.K2) * 2;
  a.bound_log_j = core * p * (one + log(a.B0)) + a.log_lambda * p + RealInterval::log2(prec);
  return a;
}

RealInterval theorem1_constant(int d, mpfr_prec_t prec) {
  return pow(RealInterval(30, prec), d + 5L) * rpow(d, -4L * d + 9, 2, prec);
}

std::pair<RealInterval, RealInterval> theorem_bounds(int p, int d, mpfr_prec_t prec) {
  if (d < 3 || ((p - 1) / 2) % d != 0) throw BadIndex("d must be a divisor >= 3 of (p-1)/2");
  const RealInterval P(p, prec);
  const RealInterval L2 = square(log(P));
  RealInterval t1 = theorem1_constant(d, prec) * pow(P, 6L * d + 5) * L2;
  RealInterval t2 = RealInterval(41993, prec) * pow(RealInterval(13, prec), static_cast<long>(p)) *
                    rpow(p, 4L * p + 15, 2, prec) * L2;
  return {t1, t2};
}

LambdaZero lambda_zero_bound(int p, mpfr_prec_t prec) {
  const RealInterval P(p, prec);
  const RealInterval ln2 = RealInterval::log2(prec);
  LambdaZero z;
  z.main_branch = square(P) * log((pow(P, 12L) + pow(P, 8L)) * 48) +
                  P * log(square(P) * 96 * (pow(P, 5L) + P + 1)) + ln2;
  z.alt_branch = P * log(square(P) * 96 * (pow(P, 5L) + P)) + ln2;
  z.value = max(z.main_branch, z.alt_branch);
  return z;
}

RealInterval easy_case_bound(int p, mpfr_prec_t prec) {
  return log(RealInterval(10, prec)) * p + RealInterval::log2(prec);
}

CombinedUnit combined_unit_descriptor(const CartanContext& ctx, const std::vector<UnitOrderData>& orders,
                                      int cusp) {
  CombinedUnit cu;
  cu.cusp = cusp;
  bool found = false;
  for (int o = 0; o < ctx.num_cosets(); ++o) {
    long ord = find_order(orders, cusp, o, 0).ord;
    if (ord < 0 && (!found || -ord < cu.n1)) {
      cu.orbit = o;
      cu.n1 = -ord;
      found = true;
    }
  }
  if (!found) {
    for (int o = 0; o < ctx.num_cosets(); ++o)
      if (find_order(orders, cusp, o, 0).ord != 0)
        throw InternalInconsistency("positive order without a negative one");
    throw AllOrdersZero("every orbit has order 0 at cusp " + std::to_string(cusp));
  }
  found = false;
  for (int s = 0; s < ctx.num_cosets(); ++s) {
    long ord = find_order(orders, cusp, cu.orbit, s).ord;
    if (ord > 0 && (!found || ord < cu.n2)) {
      cu.sigma = s;
      cu.n2 = ord;
      found = true;
    }
  }
  if (!found) throw InternalInconsistency("no conjugate with positive order");
  return cu;
}

std::vector<CheckResult> dominance_checks(const BoundReport& r) {
  const mpfr_prec_t prec = r.K1.precision();
  const int p = r.p;
  const RealInterval P(p, prec);
  const RealInterval L = log(P);
  auto strict = [](std::string name, std::string anchor, RealInterval v, RealInterval c) {
    bool pass = certify_less(v, c);
    return CheckResult{std::move(name), std::move(anchor), std::move(v), std::move(c), pass};
  };
  std::vector<CheckResult> out;
  out.push_back(strict("K1 ceiling", "K1 < p^{5p+9} (log p)^{p-1}", r.K1,
                       pow(P, 5L * p + 9) * pow(L, p - 1L)));
  out.push_back(strict("B0 ceiling", "B0 < 16 p^{5p+10} (log p)^p", r.B0,
                       pow(P, 5L * p + 10) * pow(L, static_cast<long>(p)) * 16));
  out.push_back(strict("1 + log B0 ceiling", "1 + log B0 < 8 p log p", log(r.B0) + 1, L * (8L * p)));
  out.push_back(make_check("bound vs Theorem 1", "log|j(P)| <= C(d) p^{6d+5} (log p)^2", r.bound_log_j,
                           r.theorem1));
  return out;
}

namespace {

BoundReport run_at(const PipelineConfig& cfg, mpfr_prec_t bits) {
  const CartanContext ctx = build_context(cfg.p, cfg.d);
  const auto orbits = orbit_decomposition(ctx);
  const auto cusps = cusp_classes(ctx);
  const int p = ctx.p, d = ctx.d;

  BoundReport r;
  r.p = p;
  r.d = d;
  r.mode = cfg.mode;
  r.xi = ctx.xi;
  r.H = ctx.H;
  r.coset_reps = ctx.coset_reps;
  std::tie(r.group_order, r.group_order_H) = group_order(ctx);
  r.cusp_count = static_cast<int>(cusps.size());
  for (const auto& o : orbits) r.orbit_sizes.push_back(static_cast<int>(o.members.size()));

  const UnitSystem us =
      cached_unit_system(ctx, PrecisionPolicy{bits, std::max(bits, cfg.policy.cap_bits)}, cfg.cache_dir);
  const mpfr_prec_t prec = us.prec;
  r.precision_bits = prec;
  const auto orders = all_orders(ctx, orbits, cusps, prec);
  r.chosen_eta = us.chosen;
  r.det_A = us.det_A;
  r.index = index_bounds(ctx, cfg.hplus_override, prec);
  r.regulator_m = regulator_m_bound(us);

  const WorstCase wc = worst_case(p, d, prec);
  BakerInputs bi = choose_Ak(us, orders, cusps, cfg.mode);
  if (cfg.mode == Mode::Rigorous) {
    MChoice mc = choose_m(us, r.index);
    DeltaBetaKappa dbk = delta_beta_kappa(us, orders, cusps, mc.m_ub);
    bi.m_ub = mc.m_ub;
    bi.delta = dbk.delta;
    bi.beta = dbk.beta;
    bi.kappa = dbk.kappa;
    r.m_source = mc.source;
  } else {
    bi.m_ub = wc.m;
    bi.delta = wc.delta;
    bi.beta = wc.beta;
    bi.kappa = wc.kappa;
    r.m_source = "p^{(p+1)/4} (log p)^{(p-3)/2}";
  }
  bi.lambda = RealInterval(12, prec) * pow(RealInterval(p, prec), 7L) * bi.m_ub;

  r.m_used = bi.m_ub;
  r.delta = bi.delta;
  r.beta = bi.beta;
  r.kappa = bi.kappa;
  r.C1 = bi.C1;
  r.Omega = bi.Omega;
  r.lambda = bi.lambda;
  r.A_k = bi.A_k;
  r.omega_case = bi.omega_case == OrderCase::Zero ? "ord_c V = 0" : "ord_c V != 0";
  r.omega_cusp = bi.omega_cusp;

  const Assembly a = assemble_bound(bi);
  r.K1 = a.K1;
  r.K2 = a.K2;
  r.B0 = a.B0;
  r.bound_log_j = a.bound_log_j;
  std::tie(r.theorem1, r.theorem2) = theorem_bounds(p, d, prec);
  r.theorem1_at_max_d = theorem_bounds(p, (p - 1) / 2, prec).first;
  r.theorem1_max_d_le_theorem2 = certify_leq(r.theorem1_at_max_d, r.theorem2);
  r.lambda_zero = lambda_zero_bound(p, prec);
  r.easy_case = easy_case_bound(p, prec);
  r.overall = max(max(r.bound_log_j, r.lambda_zero.value), r.easy_case);
  try {
    r.combined_unit = combined_unit_descriptor(ctx, orders, 1);
  } catch (const AllOrdersZero&) {
    r.combined_unit.reset();
  }

  r.assumptions = {
      "regulator of K exceeds 0.32",
      "regulator of the real cyclotomic field exceeds 0.32",
      r.index.hplus_overridden ? "h+ supplied by the user" : "h+ < p^{(p-3)/4} (log p)^{(p-3)/2}",
      "main branch assumes |q_c(P)| <= 10^{-p}; otherwise the easy-case bound applies",
      "bound_log_j assumes Lambda != 0; lambda_zero covers Lambda = 0",
  };
  r.checks = dominance_checks(r);
  r.checks.push_back(make_check("lambda_zero vs bound_log_j", "lambda-zero bound <= bound_log_j",
                                r.lambda_zero.value, r.bound_log_j));
  if (cfg.mode == Mode::Rigorous) {
    r.checks.push_back(make_check("delta vs closed form", "delta < p^{(3p-3)/4} (log p)^{(p-5)/2}", r.delta, wc.delta));
    r.checks.push_back(make_check("beta vs closed form", "beta < 36 p^{(3p-7)/4} (log p)^{(p-3)/2}", r.beta, wc.beta));
    r.checks.push_back(make_check("kappa m vs closed form", "kappa m < p^{(3p-11)/4} (log p)^{(p-5)/2}",
                                  r.kappa * r.m_used, wc.kappa_m));
    r.checks.push_back(make_check("Omega vs closed form", "Omega <= 36 p^{6d+1} / d^{2d}", r.Omega, wc.Omega));
  }

  return r;
}

}  // namespace

BoundReport run_pipeline(const PipelineConfig& cfg) {
  return with_precision(cfg.policy, [&](mpfr_prec_t bits) { return run_at(cfg, bits); });
}

const std::map<std::string, std::string>& report_anchors() {
  static const std::map<std::string, std::string> anchors = {
      {"group_order", "|G| = 2(p^2 - 1)"},
      {"orbit_sizes", "|O_a| = (p^2 - 1)/d"},
      {"cusp_count", "(p - 1)/2 cusps, classes x^2 - Xi y^2 = +-a"},
      {"det_A", "A = (log|eta_l^{sigma_k}|), 1 <= k, l <= d-1"},
      {"hplus_bound", "h+ < p^{(p-3)/4} (log p)^{(p-3)/2}"},
      {"m_bound", "m <= h+ (p-1)/(2d)"},
      {"m_formula_bound", "m < p^{(p+1)/4} (log p)^{(p-3)/2}"},
      {"regulator_m", "|det A| > 0.32 m"},
      {"m_used", "smallest certified upper bound for m"},
      {"delta", "delta = max |(m/p) sum_l alpha_kl ord_c V^{sigma_l}|"},
      {"beta", "beta = max |m sum_l alpha_kl log|Upsilon_{c,sigma_l}||"},
      {"kappa", "kappa = max(max_k sum_l |alpha_kl|, 1)"},
      {"C1", "C1(d) = min((e/2) d^{4.5} 30^{d+3}, 2^{6d+20})"},
      {"A_k", "A_k >= max((p-1)/2 h(alpha_k), |log alpha_k|, 0.16)"},
      {"Omega", "Omega = A_1 ... A_d"},
      {"lambda", "lambda = 12 p^7 m"},
      {"K1", "K1 = delta p C1(d) Omega ((p-1)/2)^2 (1 + log((p-1)/2))"},
      {"K2", "K2 = K1 + beta + 2 p^3 m kappa + delta p log lambda"},
      {"B0", "B0 = 2 (K1 log K1 + K2)"},
      {"bound_log_j", "log|j(P)| < p C1(d) Omega ((p-1)/2)^2 (1 + log((p-1)/2)) (1 + log B0) + p log lambda + log 2"},
      {"theorem1", "C(d) p^{6d+5} (log p)^2, C(d) = 30^{d+5} d^{-2d+4.5}"},
      {"theorem2", "41993 13^p p^{2p+7.5} (log p)^2"},
      {"lambda_zero", "max(p^2 log(48p^12+48p^8) + p log(96p^2(p^5+p+1)) + log 2, p log(96p^2(p^5+p)) + log 2)"},
      {"easy_case", "p log 10 + log 2 when |q_c(P)| > 10^{-p}"},
      {"overall", "max(bound_log_j, lambda_zero, easy_case)"},
      {"combined_unit", "U^{2 n2} (U^sigma)^{2 n1}, ord_c U = -n1 < 0 < n2 = ord_c U^sigma"},
  };
  return anchors;
}

}  // namespace xns
