#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace purecubic::cli {

enum class Command { Ideals, Reduced, Sequence, Unit, Verify };

struct RunConfig {
  Command command = Command::Reduced;
  std::int64_t m = 2;
  std::optional<std::int64_t> m_max;  // sweep m .. m_max
  std::optional<long> length;
  std::optional<long> all_lengths_up_to;
  bool until_period = false;
  std::optional<long> max_z;
  int digits = 10;
  unsigned precision_cap = 1024;
  long iteration_cap = 1'000'000;
  bool json = false;
  bool verify = false;
  bool four_corner = false;
};

enum ExitCode : int { Ok = 0, VerificationFailed = 1, InvalidField = 2, CapExhausted = 3 };

std::optional<Command> parse_command(const std::string& name);

/// Applies PURECUBIC_PRECISION_CAP and PURECUBIC_ITERATION_CAP when set.
void apply_environment(RunConfig& config);

/// Runs one command. Records go to `out`, rejected moduli and cap messages to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace purecubic::cli
