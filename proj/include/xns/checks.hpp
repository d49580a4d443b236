#pragma once

#include <string>

#include "xns/errors.hpp"
#include "xns/interval.hpp"

namespace xns {

// Asserts value <= ceiling for every point of both intervals. Overlap raises
// PrecisionExhausted (so callers can retry at higher precision); a certified
// violation raises InternalInconsistency.
inline void require_leq(const RealInterval& value, const RealInterval& ceiling, const std::string& what) {
  if (!certify_leq(value, ceiling)) throw InternalInconsistency(what + " exceeds its ceiling");
}

inline void require_less(const RealInterval& value, const RealInterval& ceiling, const std::string& what) {
  if (!certify_less(value, ceiling)) throw InternalInconsistency(what + " is not below its ceiling");
}

}  // namespace xns

namespace xns {

// One certified inequality value <= ceiling, recorded for reports.
struct CheckResult {
  std::string name;
  std::string anchor;  // the formula being checked
  RealInterval value;
  RealInterval ceiling;
  bool pass = false;
};

// Evaluates value <= ceiling without throwing on a certified violation.
inline CheckResult make_check(std::string name, std::string anchor, RealInterval value, RealInterval ceiling) {
  bool pass = certify_leq(value, ceiling);
  return {std::move(name), std::move(anchor), std::move(value), std::move(ceiling), pass};
}

}  // namespace xns
