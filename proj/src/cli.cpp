#include "xns/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xns/cache.hpp"
#include "xns/errors.hpp"
#include "xns/qseries.hpp"
#include "xns/report.hpp"

namespace xns {

int default_d(int p) {
  if (p < 7 || !is_prime(p)) throw BadLevel("level must be a prime >= 7, got " + std::to_string(p));
  const int half = (p - 1) / 2;
  for (int d = 3; d <= half; ++d)
    if (half % d == 0) return d;
  throw BadIndex("(p-1)/2 = " + std::to_string(half) + " has no divisor >= 3");
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"orbits",  "orders",        "heights",
                                                 "product-identity", "expansion", "lambda-bounds"};
  return names;
}

namespace {

std::string range(const RealInterval& x, int digits = 12) {
  return "[" + certified_lower(x, digits) + ", " + certified_upper(x, digits) + "]";
}

VerifyLine exact_line(std::string suite, std::string name, std::string anchor, long value, long expected) {
  return {std::move(suite), std::move(name), std::move(anchor), std::to_string(value), std::to_string(expected),
          value == expected};
}

VerifyLine from_check(const std::string& suite, const CheckResult& c) {
  return {suite, c.name, c.anchor, range(c.value), certified_upper(c.ceiling, 12), c.pass};
}

std::vector<VerifyLine> suite_orbits(const CartanContext& ctx) {
  const std::string s = "orbits";
  const long p = ctx.p, d = ctx.d;
  std::vector<VerifyLine> out;
  auto [g, gh] = group_order(ctx);
  out.push_back(exact_line(s, "|G|", "|G| = 2(p^2-1)", g, 2 * (p * p - 1)));
  out.push_back(exact_line(s, "|G_H|", "|G_H| = |G|/d", gh, g / d));
  auto orbits = orbit_decomposition(ctx);
  out.push_back(exact_line(s, "orbit count", "d orbits", static_cast<long>(orbits.size()), d));
  for (const auto& o : orbits)
    out.push_back(exact_line(s, "|O_" + std::to_string(o.label) + "|", "|O_a| = (p^2-1)/d",
                             static_cast<long>(o.members.size()), (p * p - 1) / d));
  auto cusps = cusp_classes(ctx);
  out.push_back(exact_line(s, "cusp count", "(p-1)/2 cusps", static_cast<long>(cusps.size()), (p - 1) / 2));
  long total = 0;
  for (const auto& c : cusps) total += static_cast<long>(c.vectors.size());
  out.push_back(exact_line(s, "cusp class sizes", "classes partition F_p^2 minus 0", total, p * p - 1));
  std::set<int> images;
  for (int t = 0; t < ctx.num_cosets(); ++t) images.insert(galois_orbit_action(ctx, orbits, t, orbits[0]).index);
  out.push_back(exact_line(s, "Galois transitivity", "O_a sigma = O_{a sigma}", static_cast<long>(images.size()), d));
  return out;
}

std::vector<VerifyLine> suite_orders(const CartanContext& ctx, mpfr_prec_t prec) {
  const std::string s = "orders";
  const int p = ctx.p;
  std::vector<VerifyLine> out;
  Rational b2_sum = 0, mixed = 0;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (!x && !y) continue;
      Rational a1 = make_rational(x, p), a2 = make_rational(y, p);
      b2_sum += bernoulli_b2(a1);
      mixed += a2 * (1 - a1);
    }
  out.push_back({s, "sum B2(a1)", "sum over A of B2(a1) = 0", b2_sum.get_str(), "0", b2_sum == 0});
  Rational target = make_rational(1L * p * p - 1, 4);
  out.push_back({s, "sum a2(1-a1)", "sum over A of a2(1-a1) = (p^2-1)/4", mixed.get_str(), target.get_str(),
                 mixed == target});
  auto orbits = orbit_decomposition(ctx);
  auto cusps = cusp_classes(ctx);
  auto orders = all_orders(ctx, orbits, cusps, prec);
  const long ceiling = 1L * p * p * (1L * p * p - 1) / ctx.d;
  for (const auto& c : cusps) {
    long sum = 0, worst = 0;
    for (const auto& u : orders) {
      if (u.cusp != c.label || u.sigma != 0) continue;
      sum += u.ord;
      worst = std::max(worst, std::labs(u.ord));
    }
    std::string tag = "cusp " + std::to_string(c.label);
    out.push_back(exact_line(s, tag + " orbit sum", "sum over orbits of ord_c = 0", sum, 0));
    out.push_back({s, tag + " max |ord|", "|ord_c U| <= p^2(p^2-1)/d", std::to_string(worst),
                   std::to_string(ceiling), worst <= ceiling});
  }
  return out;
}

std::vector<VerifyLine> suite_heights(const CartanContext& ctx, const RunConfig& cfg) {
  PrecisionPolicy policy{cfg.precision_bits, cfg.precision_cap};
  UnitSystem us = cached_unit_system(ctx, policy, cache_dir_from_env());
  auto orders = all_orders(ctx, orbit_decomposition(ctx), cusp_classes(ctx), us.prec);
  std::vector<VerifyLine> out;
  for (const auto& c : unit_height_checks(us, orders)) out.push_back(from_check("heights", c));
  return out;
}

std::vector<std::string> taus(const RunConfig& cfg, std::vector<std::string> defaults) {
  if (cfg.tau_im) return {*cfg.tau_im};
  return defaults;
}

std::vector<VerifyLine> suite_product(const CartanContext& ctx, const RunConfig& cfg) {
  const mpfr_prec_t prec = std::max<long>(512, cfg.precision_bits);
  std::vector<VerifyLine> out;
  const RealInterval width_limit = RealInterval::from_strings("1e-20", "1e-20", prec);
  for (const auto& im : taus(cfg, {"2", "8"})) {
    RealInterval v = verify_product_identity(ctx, make_tau("0", im, prec), prec);
    bool pass = v.contains(1L) && certainly_less(RealInterval::from_bounds(v.width(), v.width()), width_limit);
    out.push_back({"product-identity", "tau = " + im + "i", "|prod g_a^{12p}| / p^{12p} = 1", range(v, 25),
                   "contains 1, width < 1e-20", pass});
  }
  return out;
}

std::vector<VerifyLine> suite_expansion(const CartanContext& ctx, const RunConfig& cfg) {
  const int p = ctx.p;
  const mpfr_prec_t prec = std::max<long>(256, cfg.precision_bits);
  std::vector<VerifyLine> out;
  for (const auto& im : taus(cfg, {"1", "2"})) {
    ComplexInterval tau = make_tau("0", im, prec);
    RealInterval ceiling = exp(-(RealInterval::pi(prec) * 2 * tau.im())) *
                           RealInterval::from_rational(make_rational(203, 100), prec);
    RealInterval worst(prec);
    bool pass = true;
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        if (!x && !y) continue;
        RealInterval r = abs(first_order_residual(p, {x, y}, tau, prec));
        worst = max(worst, r);
        pass = pass && certify_leq(r, ceiling);
      }
    out.push_back({"expansion", "first-order residual, tau = " + im + "i", "|residual| <= 2.03 |q|", range(worst),
                   certified_upper(ceiling, 12), pass});
  }
  // |q| <= 10^{-p} needs Im tau >= p log 10 / (2 pi).
  const long im_needed = std::max(8L, static_cast<long>(std::ceil(p * std::log(10.0) / (2 * M_PI))) + 1);
  ComplexInterval deep = make_tau("0", std::to_string(im_needed), prec);
  auto orbits = orbit_decomposition(ctx);
  for (const auto& c : cusp_classes(ctx)) {
    OrbitLogValue v = log_u_orbit(ctx, orbits, c, 0, 0, deep, prec);
    out.push_back({"expansion", "log|u_O| residual, cusp " + std::to_string(c.label),
                   "|residual| <= 17 p^3 |q|^{1/p}", range(abs(v.residual)), certified_upper(v.bound, 12),
                   certify_leq(abs(v.residual), v.bound)});
  }
  return out;
}

std::vector<VerifyLine> suite_lambda(const CartanContext& ctx, const RunConfig& cfg) {
  const int p = ctx.p;
  const int K = 4 * p * p;
  const mpfr_prec_t prec = cfg.precision_bits;
  std::vector<VerifyLine> out;
  auto orbits = orbit_decomposition(ctx);
  auto cusps = cusp_classes(ctx);
  auto summarize = [&](const std::string& name, const FormalSeries& fs, long weight) {
    LambdaReport rep = verify_lambda_bounds(fs, K, weight, prec);
    int failing = 0;
    for (const auto& row : rep.rows)
      if (!row.pass) ++failing;
    out.push_back({"lambda-bounds", name, "|lambda_k| <= 48p^2(k+p), k lambda_k integral, height bound",
                   std::to_string(rep.rows.size() - failing) + "/" + std::to_string(rep.rows.size()) + " k pass",
                   "k <= " + std::to_string(K), rep.all_pass});
    FirstNonzero fn = first_nonzero(fs, K);
    out.push_back({"lambda-bounds", name + " first nonzero", "lambda_k != 0 for some k <= p^5",
                   fn.k ? std::to_string(*fn.k) : "none below K", std::to_string(fn.ceiling), fn.k.has_value()});
  };
  for (const auto& c : cusps)
    summarize("U^2 at cusp " + std::to_string(c.label), log_unit_series(ctx, orbits, c, 0, 0, K, 24L * p), 1);
  auto orders = all_orders(ctx, orbits, cusps, prec);
  try {
    CombinedUnit cu = combined_unit_descriptor(ctx, orders, 1);
    summarize("U^{2n2}(U^sigma)^{2n1} at cusp 1", combined_unit_series(ctx, orbits, cusps[0], cu, K), cu.n1 + cu.n2);
  } catch (const AllOrdersZero&) {
  }
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output) {
    std::ofstream f(*cfg.output);
    if (!f) throw ConfigError("cannot open output file " + *cfg.output);
    f << text;
  } else {
    out << text;
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const BadLevel& e) {
    err << "BadLevel: " << e.what() << '\n';
    return kExitConfig;
  } catch (const BadIndex& e) {
    err << "BadIndex: " << e.what() << '\n';
    return kExitConfig;
  } catch (const BadSubgroup& e) {
    err << "BadSubgroup: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PrecisionExhausted& e) {
    err << "PrecisionExhausted: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const Error& e) {
    err << "InternalInconsistency: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

std::vector<VerifyLine> run_suite(const std::string& suite, const RunConfig& cfg, int d) {
  const CartanContext ctx = build_context(cfg.p, d);
  if (suite == "orbits") return suite_orbits(ctx);
  if (suite == "orders") return suite_orders(ctx, cfg.precision_bits);
  if (suite == "heights") return suite_heights(ctx, cfg);
  if (suite == "product-identity") return suite_product(ctx, cfg);
  if (suite == "expansion") return suite_expansion(ctx, cfg);
  if (suite == "lambda-bounds") return suite_lambda(ctx, cfg);
  throw ConfigError("unknown verification suite '" + suite + "'");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PipelineConfig pc;
    pc.p = cfg.p;
    pc.d = cfg.d ? *cfg.d : default_d(cfg.p);
    pc.mode = cfg.mode;
    pc.hplus_override = cfg.hplus_override;
    pc.policy = PrecisionPolicy{cfg.precision_bits, cfg.precision_cap};
    pc.cache_dir = cache_dir_from_env();
    auto start = std::chrono::steady_clock::now();
    BoundReport r = run_pipeline(pc);
    std::map<std::string, double> timings;
    if (cfg.timings)
      timings["pipeline_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cfg.format == "text")
      write_output(cfg, report_to_text(r), out);
    else
      write_output(cfg, report_to_json(r, timings).dump(2) + "\n", out);
    for (const auto& c : r.checks)
      if (!c.pass) {
        err << "certification failed: " << c.name << " (" << c.anchor << ")\n";
        return kExitInternal;
      }
    return kExitOk;
  });
}

int verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int d = cfg.d ? *cfg.d : default_d(cfg.p);
    std::vector<std::string> suites;
    if (cfg.verify.empty() || cfg.verify.count("all")) {
      suites = verify_suite_names();
    } else {
      for (const auto& s : verify_suite_names())
        if (cfg.verify.count(s)) suites.push_back(s);
      for (const auto& s : cfg.verify)
        if (s != "all" && std::find(suites.begin(), suites.end(), s) == suites.end())
          throw ConfigError("unknown verification suite '" + s + "'");
    }
    std::vector<VerifyLine> lines;
    std::map<std::string, double> timings;
    for (const auto& s : suites) {
      auto start = std::chrono::steady_clock::now();
      auto part = run_suite(s, cfg, d);
      timings[s] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      lines.insert(lines.end(), part.begin(), part.end());
    }
    bool ok = true;
    for (const auto& l : lines) ok = ok && l.pass;
    std::ostringstream os;
    if (cfg.format == "text") {
      for (const auto& l : lines)
        os << (l.pass ? "PASS " : "FAIL ") << std::left << std::setw(18) << l.suite << std::setw(44) << l.name
           << l.value << "  vs  " << l.bound << "   [" << l.anchor << "]\n";
      if (cfg.timings)
        for (const auto& [k, v] : timings) os << "time " << k << ": " << v << " s\n";
    } else {
      json j;
      j["p"] = cfg.p;
      j["d"] = d;
      j["pass"] = ok;
      j["checks"] = json::array();
      for (const auto& l : lines)
        j["checks"].push_back({{"suite", l.suite},
                               {"name", l.name},
                               {"anchor", l.anchor},
                               {"value", l.value},
                               {"bound", l.bound},
                               {"pass", l.pass}});
      json t = json::object();
      if (cfg.timings)
        for (const auto& [k, v] : timings) t[k] = v;
      j["timings"] = t;
      os << j.dump(2) << '\n';
    }
    write_output(cfg, os.str(), out);
    return ok ? kExitOk : kExitVerify;
  });
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Certified bounds for integral points on non-split Cartan modular curves"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "rigorous";
  std::vector<std::string> suites;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime level p >= 7")->required();
    sub->add_option("--d", cfg.d, "index d, a divisor >= 3 of (p-1)/2");
    sub->add_option("--precision", cfg.precision_bits, "starting precision in bits")->check(CLI::Range(32L, 1L << 20));
    sub->add_option("--precision-cap", cfg.precision_cap, "maximum precision in bits")->check(CLI::Range(32L, 1L << 20));
    sub->add_option("--mode", mode, "rigorous | paper-worst-case")
        ->check(CLI::IsMember({"rigorous", "paper-worst-case"}));
    sub->add_option("--hplus", cfg.hplus_override, "known class number h+ of the real cyclotomic field");
    sub->add_option("--tau-im", cfg.tau_im, "imaginary part of the verification point tau");
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", cfg.timings, "record wall-clock timings");
  };
  CLI::App* run_cmd = app.add_subcommand("run", "compute the bound report");
  add_common(run_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--verify", suites, "suites: orbits, orders, heights, product-identity, expansion, "
                                             "lambda-bounds, all")
      ->delimiter(',');
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  cfg.mode = parse_mode(mode);
  cfg.verify.insert(suites.begin(), suites.end());
  if (cfg.precision_cap < cfg.precision_bits) cfg.precision_cap = cfg.precision_bits;
  if (*run_cmd) return run(cfg, std::cout, std::cerr);
  return verify(cfg, std::cout, std::cerr);
}

}  // namespace xns
