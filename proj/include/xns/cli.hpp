#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xns/baker.hpp"

namespace xns {

struct RunConfig {
  int p = 0;
  std::optional<int> d;  // default: smallest divisor >= 3 of (p-1)/2
  long precision_bits = 128;
  long precision_cap = 4096;
  Mode mode = Mode::Rigorous;
  std::optional<long> hplus_override;
  std::set<std::string> verify;  // suite names
  std::optional<std::string> tau_im;
  std::optional<std::string> output;
  std::string format = "json";  // json | text
  bool timings = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitInternal = 4;
inline constexpr int kExitVerify = 5;

// Smallest divisor >= 3 of (p-1)/2; BadLevel / BadIndex when none applies.
int default_d(int p);

const std::vector<std::string>& verify_suite_names();

struct VerifyLine {
  std::string suite;
  std::string name;
  std::string anchor;
  std::string value;
  std::string bound;
  bool pass = false;
};

// Runs one named suite for (p, d).
std::vector<VerifyLine> run_suite(const std::string& suite, const RunConfig& cfg, int d);

// Both return the process exit status; library errors are mapped to codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Full command-line entry point (subcommands run / verify).
int cli_main(int argc, char** argv);

}  // namespace xns
