#include "xns/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "xns/errors.hpp"
#include "xns/version.hpp"

namespace xns {

namespace fs = std::filesystem;

std::optional<fs::path> cache_dir_from_env() {
  const char* dir = std::getenv("XNS_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

json cyclo_to_json(const CycloNumber& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(c.get_str());
  return out;
}

CycloNumber cyclo_from_json(int p, const json& j) {
  std::vector<Rational> full(p);
  if (static_cast<int>(j.size()) != p - 1) throw ConfigError("cyclotomic coordinate count mismatch");
  for (int k = 1; k < p; ++k) full[k] = rational_from_string(j.at(k - 1).get<std::string>());
  return CycloNumber::from_exponents(p, full);
}

namespace {

json matrix_to_json(const IntervalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(interval_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

IntervalMatrix matrix_from_json(const json& j, mpfr_prec_t prec) {
  const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  IntervalMatrix m(rows, cols, prec);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = interval_from_json(j.at(r).at(c)).with_precision(prec);
  return m;
}

json intervals_to_json(const std::vector<RealInterval>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(interval_to_json(x));
  return out;
}

std::vector<RealInterval> intervals_from_json(const json& j, mpfr_prec_t prec) {
  std::vector<RealInterval> out;
  for (const auto& x : j) out.push_back(interval_from_json(x).with_precision(prec));
  return out;
}

}  // namespace

json unit_system_to_json(const UnitSystem& us) {
  json out;
  out["version"] = kVersion;
  out["p"] = us.ctx.p;
  out["d"] = us.ctx.d;
  out["precision_bits"] = static_cast<long>(us.prec);
  json xi = json::array(), eta = json::array(), logs = json::array();
  for (const auto& x : us.xi) xi.push_back(cyclo_to_json(x));
  for (const auto& e : us.eta) eta.push_back(cyclo_to_json(e));
  for (const auto& l : us.eta_logs) logs.push_back(intervals_to_json(l));
  out["xi"] = xi;
  out["eta"] = eta;
  out["mu"] = cyclo_to_json(us.mu);
  out["eta0_exponent"] = us.eta0_exponent;
  out["chosen"] = us.chosen;
  out["default_subset"] = us.default_subset;
  out["A"] = matrix_to_json(us.A);
  out["A_inv"] = matrix_to_json(us.A_inv);
  out["det_A"] = interval_to_json(us.det_A);
  out["eta_logs"] = logs;
  out["mu_logs"] = intervals_to_json(us.mu_logs);
  return out;
}

UnitSystem unit_system_from_json(const json& j) {
  try {
    UnitSystem us;
    us.ctx = build_context(j.at("p"), j.at("d"));
    const int p = us.ctx.p;
    us.prec = j.at("precision_bits").get<long>();
    for (const auto& x : j.at("xi")) us.xi.push_back(cyclo_from_json(p, x));
    for (const auto& e : j.at("eta")) us.eta.push_back(cyclo_from_json(p, e));
    us.mu = cyclo_from_json(p, j.at("mu"));
    us.eta0_exponent = j.at("eta0_exponent");
    us.chosen = j.at("chosen").get<std::vector<int>>();
    us.default_subset = j.at("default_subset");
    us.A = matrix_from_json(j.at("A"), us.prec);
    us.A_inv = matrix_from_json(j.at("A_inv"), us.prec);
    us.det_A = interval_from_json(j.at("det_A")).with_precision(us.prec);
    for (const auto& l : j.at("eta_logs")) us.eta_logs.push_back(intervals_from_json(l, us.prec));
    us.mu_logs = intervals_from_json(j.at("mu_logs"), us.prec);
    return us;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed unit-system cache: ") + e.what());
  }
}

fs::path cache_path(const fs::path& dir, int p, int d, mpfr_prec_t prec) {
  return dir / ("units-p" + std::to_string(p) + "-d" + std::to_string(d) + "-b" + std::to_string(prec) + "-v" +
                kVersion + ".json");
}

std::optional<UnitSystem> load_unit_system(const fs::path& dir, const CartanContext& ctx, mpfr_prec_t prec) {
  const fs::path path = cache_path(dir, ctx.p, ctx.d, prec);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // a truncated or foreign file is treated as a miss
  }
  if (j.value("version", "") != kVersion) return std::nullopt;
  return unit_system_from_json(j);
}

void store_unit_system(const fs::path& dir, const UnitSystem& us, mpfr_prec_t requested_prec) {
  fs::create_directories(dir);
  const fs::path target = cache_path(dir, us.ctx.p, us.ctx.d, requested_prec);
  std::random_device rd;
  const fs::path tmp = dir / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) throw ConfigError("cannot write cache file " + tmp.string());
    out << unit_system_to_json(us).dump(1) << '\n';
  }
  fs::rename(tmp, target);
}

UnitSystem cached_unit_system(const CartanContext& ctx, const PrecisionPolicy& policy,
                              const std::optional<fs::path>& dir) {
  if (dir) {
    if (auto hit = load_unit_system(*dir, ctx, policy.start_bits)) return *hit;
  }
  UnitSystem us = build_unit_system(ctx, policy);
  if (dir) store_unit_system(*dir, us, policy.start_bits);
  return us;
}

}  // namespace xns
