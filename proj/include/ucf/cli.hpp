#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ucf {

// Exit statuses shared by every subcommand: 0 for success, 1 when the run
// completed but the mathematical answer is negative (non-uniform tuple,
// failed audit, empty search), 2 for errors of any kind.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

// Environment variable consulted for the group enumeration cap when the
// --cap flag is absent.
inline constexpr const char* kElementCapEnv = "UCF_ELEMENT_CAP";

struct CommandConfig {
  // One of: construct, verify, classify, search, sylow, sample, audit.
  std::string subcommand;
  // Named builder string (e.g. "S5", "A4xC2") or path to a group JSON file.
  std::string group;
  // Ordered Sylow prime list "sylow:2,5,3" (verify only).
  std::string factors;
  // Path to a certificate JSON file (verify, classify, sample, audit).
  std::string certificate;
  // construct: crt | abelian | solvable | alternating | symmetric |
  // simple-reduction.  search: bounded | pairs.
  std::string algorithm;
  // Simple-group database path; empty means the built-in database.
  std::string db;
  // Output path for the JSON artifact; empty prints JSON to standard out.
  std::string output;

  std::uint64_t budget = 1;       // multiplicity bound (search); closure cap (pairs)
  std::uint32_t max_len = 3;      // tuple length bound (search)
  std::uint32_t retries = 20;     // representative choices (sylow)
  std::uint64_t trials = 0;       // draw count (sample) / audit trials
  std::uint64_t seed = 5;         // Sylow search and sampler seed
  std::uint64_t cap = 0;          // element cap override; 0 = default or env
  bool reproducible = false;      // omit the generated_at field from JSON

  // Human-readable summary sink; null means standard output.
  std::ostream* out = nullptr;
};

// Executes one subcommand; never throws (errors become kExitError and a
// message on the summary stream).
int run(const CommandConfig& config);

}  // namespace ucf
