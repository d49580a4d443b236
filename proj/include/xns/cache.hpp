#pragma once

#include <filesystem>
#include <optional>

#include "xns/report.hpp"
#include "xns/units.hpp"

namespace xns {

// Directory named by XNS_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

json cyclo_to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(int p, const json& j);
json unit_system_to_json(const UnitSystem& us);
UnitSystem unit_system_from_json(const json& j);

// File name for the key (p, d, start precision, library version).
std::filesystem::path cache_path(const std::filesystem::path& dir, int p, int d, mpfr_prec_t prec);

std::optional<UnitSystem> load_unit_system(const std::filesystem::path& dir, const CartanContext& ctx,
                                           mpfr_prec_t prec);
// Writes to a temporary file in `dir` and renames it into place.
void store_unit_system(const std::filesystem::path& dir, const UnitSystem& us, mpfr_prec_t requested_prec);

// Loads from the cache directory when one is configured, otherwise builds
// (and stores) a fresh unit system.
UnitSystem cached_unit_system(const CartanContext& ctx, const PrecisionPolicy& policy,
                              const std::optional<std::filesystem::path>& dir);

}  // namespace xns
