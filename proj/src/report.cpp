#include "xns/report.hpp"

#include <iomanip>
#include <sstream>

#include "xns/errors.hpp"

namespace xns {

json interval_to_json(const RealInterval& x) {
  return json{{"lo", x.lo().hex()}, {"hi", x.hi().hex()}, {"decimal_hi", certified_upper(x, 20)}};
}

RealInterval interval_from_json(const json& j) {
  return RealInterval::from_bounds(BigFloat::from_hex(j.at("lo").get<std::string>()),
                                   BigFloat::from_hex(j.at("hi").get<std::string>()));
}

json check_to_json(const CheckResult& c) {
  return json{{"name", c.name},
              {"anchor", c.anchor},
              {"value", interval_to_json(c.value)},
              {"ceiling", interval_to_json(c.ceiling)},
              {"pass", c.pass}};
}

CheckResult check_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("anchor").get<std::string>(), interval_from_json(j.at("value")),
          interval_from_json(j.at("ceiling")), j.at("pass").get<bool>()};
}

json report_to_json(const BoundReport& r, const std::map<std::string, double>& timings) {
  json out;
  out["context"] = {
      {"p", r.p},
      {"d", r.d},
      {"mode", to_string(r.mode)},
      {"precision_bits", static_cast<long>(r.precision_bits)},
      {"xi", r.xi},
      {"H", r.H},
      {"coset_reps", r.coset_reps},
      {"group_order", r.group_order},
      {"group_order_H", r.group_order_H},
      {"cusp_count", r.cusp_count},
      {"orbit_sizes", r.orbit_sizes},
      {"chosen_eta", r.chosen_eta},
  };
  out["assumptions"] = r.assumptions;

  json Ak = json::array();
  for (const auto& a : r.A_k) Ak.push_back(interval_to_json(a));
  out["pipeline"] = {
      {"det_A", interval_to_json(r.det_A)},
      {"hplus_bound", interval_to_json(r.index.hplus_bound)},
      {"hplus_overridden", r.index.hplus_overridden},
      {"m_bound", interval_to_json(r.index.m_bound)},
      {"m_formula_bound", interval_to_json(r.index.m_formula_bound)},
      {"regulator_m", r.regulator_m},
      {"m_used", interval_to_json(r.m_used)},
      {"m_source", r.m_source},
      {"delta", interval_to_json(r.delta)},
      {"beta", interval_to_json(r.beta)},
      {"kappa", interval_to_json(r.kappa)},
      {"C1", interval_to_json(r.C1)},
      {"A_k", Ak},
      {"Omega", interval_to_json(r.Omega)},
      {"omega_case", r.omega_case},
      {"omega_cusp", r.omega_cusp},
      {"lambda", interval_to_json(r.lambda)},
      {"K1", interval_to_json(r.K1)},
      {"K2", interval_to_json(r.K2)},
      {"B0", interval_to_json(r.B0)},
  };

  json combined = nullptr;
  if (r.combined_unit) {
    const auto& cu = *r.combined_unit;
    combined = {{"cusp", cu.cusp}, {"orbit", cu.orbit}, {"sigma", cu.sigma}, {"n1", cu.n1}, {"n2", cu.n2}};
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  out["bounds"] = {
      {"bound_log_j", interval_to_json(r.bound_log_j)},
      {"theorem1", interval_to_json(r.theorem1)},
      {"theorem2", interval_to_json(r.theorem2)},
      {"theorem1_at_max_d", interval_to_json(r.theorem1_at_max_d)},
      {"theorem1_max_d_le_theorem2", r.theorem1_max_d_le_theorem2},
      {"lambda_zero",
       {{"main_branch", interval_to_json(r.lambda_zero.main_branch)},
        {"alt_branch", interval_to_json(r.lambda_zero.alt_branch)},
        {"value", interval_to_json(r.lambda_zero.value)}}},
      {"easy_case", interval_to_json(r.easy_case)},
      {"overall", interval_to_json(r.overall)},
      {"combined_unit", combined},
      {"checks", checks},
  };
  json anchors = json::object();
  for (const auto& [k, v] : report_anchors()) anchors[k] = v;
  out["anchors"] = anchors;
  json t = json::object();
  for (const auto& [k, v] : timings) t[k] = v;
  out["timings"] = t;
  return out;
}

BoundReport report_from_json(const json& j) {
  try {
    BoundReport r;
    const json& c = j.at("context");
    r.p = c.at("p");
    r.d = c.at("d");
    r.mode = parse_mode(c.at("mode"));
    r.precision_bits = c.at("precision_bits").get<long>();
    r.xi = c.at("xi");
    r.H = c.at("H").get<std::vector<int>>();
    r.coset_reps = c.at("coset_reps").get<std::vector<int>>();
    r.group_order = c.at("group_order");
    r.group_order_H = c.at("group_order_H");
    r.cusp_count = c.at("cusp_count");
    r.orbit_sizes = c.at("orbit_sizes").get<std::vector<int>>();
    r.chosen_eta = c.at("chosen_eta").get<std::vector<int>>();
    r.assumptions = j.at("assumptions").get<std::vector<std::string>>();

    const json& pl = j.at("pipeline");
    r.det_A = interval_from_json(pl.at("det_A"));
    r.index.hplus_bound = interval_from_json(pl.at("hplus_bound"));
    r.index.hplus_overridden = pl.at("hplus_overridden");
    r.index.m_bound = interval_from_json(pl.at("m_bound"));
    r.index.m_formula_bound = interval_from_json(pl.at("m_formula_bound"));
    r.regulator_m = pl.at("regulator_m");
    r.m_used = interval_from_json(pl.at("m_used"));
    r.m_source = pl.at("m_source");
    r.delta = interval_from_json(pl.at("delta"));
    r.beta = interval_from_json(pl.at("beta"));
    r.kappa = interval_from_json(pl.at("kappa"));
    r.C1 = interval_from_json(pl.at("C1"));
    for (const auto& a : pl.at("A_k")) r.A_k.push_back(interval_from_json(a));
    r.Omega = interval_from_json(pl.at("Omega"));
    r.omega_case = pl.at("omega_case");
    r.omega_cusp = pl.at("omega_cusp");
    r.lambda = interval_from_json(pl.at("lambda"));
    r.K1 = interval_from_json(pl.at("K1"));
    r.K2 = interval_from_json(pl.at("K2"));
    r.B0 = interval_from_json(pl.at("B0"));

    const json& b = j.at("bounds");
    r.bound_log_j = interval_from_json(b.at("bound_log_j"));
    r.theorem1 = interval_from_json(b.at("theorem1"));
    r.theorem2 = interval_from_json(b.at("theorem2"));
    r.theorem1_at_max_d = interval_from_json(b.at("theorem1_at_max_d"));
    r.theorem1_max_d_le_theorem2 = b.at("theorem1_max_d_le_theorem2");
    r.lambda_zero.main_branch = interval_from_json(b.at("lambda_zero").at("main_branch"));
    r.lambda_zero.alt_branch = interval_from_json(b.at("lambda_zero").at("alt_branch"));
    r.lambda_zero.value = interval_from_json(b.at("lambda_zero").at("value"));
    r.easy_case = interval_from_json(b.at("easy_case"));
    r.overall = interval_from_json(b.at("overall"));
    if (!b.at("combined_unit").is_null()) {
      const json& cu = b.at("combined_unit");
      r.combined_unit = CombinedUnit{cu.at("cusp"), cu.at("orbit"), cu.at("sigma"), cu.at("n1"), cu.at("n2")};
    }
    for (const auto& ch : b.at("checks")) r.checks.push_back(check_from_json(ch));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const BoundReport& r) {
  const auto& anchors = report_anchors();
  std::ostringstream os;
  auto anchor = [&](const std::string& key) {
    auto it = anchors.find(key);
    return it == anchors.end() ? std::string() : it->second;
  };
  auto row = [&](const std::string& name, const std::string& value, const std::string& key) {
    os << std::left << std::setw(22) << name << std::setw(42) << value << anchor(key) << '\n';
  };
  auto iv = [](const RealInterval& x) { return certified_upper(x, 12); };

  os << "p = " << r.p << ", d = " << r.d << ", mode = " << to_string(r.mode) << ", precision = " << r.precision_bits
     << " bits\n";
  os << std::left << std::setw(22) << "quantity" << std::setw(42) << "upper bound" << "formula\n";
  os << std::string(112, '-') << '\n';
  row("|G|", std::to_string(r.group_order), "group_order");
  row("cusps", std::to_string(r.cusp_count), "cusp_count");
  row("orbit size", std::to_string(r.orbit_sizes.empty() ? 0 : r.orbit_sizes.front()), "orbit_sizes");
  row("det A", certified_lower(r.det_A, 12) + " .. " + iv(r.det_A), "det_A");
  row("h+ bound", iv(r.index.hplus_bound), "hplus_bound");
  row("m bound", iv(r.index.m_bound), "m_bound");
  row("m formula bound", iv(r.index.m_formula_bound), "m_formula_bound");
  row("regulator m", std::to_string(r.regulator_m), "regulator_m");
  row("m used", iv(r.m_used), "m_used");
  row("delta", iv(r.delta), "delta");
  row("beta", iv(r.beta), "beta");
  row("kappa", iv(r.kappa), "kappa");
  row("C1(d)", iv(r.C1), "C1");
  for (std::size_t k = 0; k < r.A_k.size(); ++k) row("A_" + std::to_string(k + 1), iv(r.A_k[k]), "A_k");
  row("Omega", iv(r.Omega), "Omega");
  row("lambda", iv(r.lambda), "lambda");
  row("K1", iv(r.K1), "K1");
  row("K2", iv(r.K2), "K2");
  row("B0", iv(r.B0), "B0");
  row("bound log|j|", iv(r.bound_log_j), "bound_log_j");
  row("Theorem 1", iv(r.theorem1), "theorem1");
  row("Theorem 2", iv(r.theorem2), "theorem2");
  row("lambda = 0 bound", iv(r.lambda_zero.value), "lambda_zero");
  row("easy case", iv(r.easy_case), "easy_case");
  row("overall", iv(r.overall), "overall");
  if (r.combined_unit) {
    const auto& cu = *r.combined_unit;
    row("combined unit", "n1=" + std::to_string(cu.n1) + " n2=" + std::to_string(cu.n2), "combined_unit");
  }
  os << std::string(112, '-') << '\n';
  for (const auto& c : r.checks)
    os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << c.name << c.anchor << '\n';
  os << "assumptions:\n";
  for (const auto& a : r.assumptions) os << "  - " << a << '\n';
  return os.str();
}

}  // namespace xns
