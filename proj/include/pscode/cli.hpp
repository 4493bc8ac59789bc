#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pscode/enumeration.hpp"

namespace pscode {

enum class Command { Validate, Build, Verify, Attack, Count, Report };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Report;
  unsigned qExp = 1;
  std::optional<std::uint32_t> modulus;
  std::size_t nu = 0;
  std::size_t s = 0;
  std::size_t m0 = 0;
  std::size_t s0 = 0;
  std::size_t m = 0;  // count: subspace dimension
  std::size_t n = 0;  // count: symplectic dimension
  std::optional<std::string> outputPath;
  Format format = Format::Json;
  std::uint64_t oracleBudget = kDefaultOracleBudget;
  std::optional<std::size_t> pairSample;  // unset: default_pair_sample; 0: every pair
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Executes one command. The document goes to `out` (or cfg.outputPath);
/// per-check PASS/FAIL lines and diagnostics go to `log`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace pscode
