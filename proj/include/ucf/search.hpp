#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ucf/certificate.hpp"
#include "ucf/sylow.hpp"

namespace ucf {

// Ceiling on the total number of product tuples walked by a single search
// call while verifying candidates; past it the search stops early and the
// result is flagged incomplete.
inline constexpr std::uint64_t kDefaultSearchWorkCap = 50'000'000;

// How a group relates to orderings of one Sylow subgroup per prime:
//   I   some tested choice of representatives is exact under every ordering
//   II  no tested choice works under every ordering, but some tested choice
//       has both an exact ordering and a failing one
//   III no ordering of any choice works (never concluded from sampling;
//       the enum value exists so reports can be read back)
//   Undetermined  anything else within the retry budget
enum class SylowType { I, II, III, Undetermined };

std::string to_string(SylowType type);

struct OrderingResult {
  std::vector<std::uint64_t> primes;  // the ordering tested
  std::uint64_t covered = 0;
  bool uniform = false;
  std::optional<std::uint64_t> multiplicity;
};

struct SylowReport {
  std::string group_name;
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> primes;        // ascending
  std::vector<std::uint64_t> sylow_orders;  // aligned with `primes`
  // Per-ordering outcomes for the decisive representative choice (the one
  // that settled the type), or for the first choice when undetermined.
  std::vector<OrderingResult> orderings;
  SylowType type = SylowType::Undetermined;
  std::uint32_t choices_tested = 0;
  std::string choice_note;  // generators of the decisive representatives
};

// Tests every ordering of one tuple of Sylow representatives per retry;
// retry 0 uses the representatives the seeded Sylow search returns, later
// retries conjugate each representative by an independent random element.
SylowReport sylow_orderings_report(const GroupPtr& g, std::uint32_t retries = 20,
                                   std::uint64_t seed = kDefaultSylowSeed);

nlohmann::json sylow_report_to_json(const SylowReport& report);

struct SearchResult {
  std::vector<Certificate> certificates;
  bool complete = true;  // false when the work cap cut the search short
};

// The non-trivial cyclic subgroups of g, deduplicated, ordered by
// (order, sorted element index set); each carries its first-found generator.
std::vector<Subgroup> cyclic_subgroup_pool(const GroupPtr& g);

// Depth-first search over ordered tuples (repeats allowed) drawn from the
// cyclic subgroup pool, emitting a certificate for every uniform tuple of
// length at most max_len whose multiplicity is at most `budget`.  Output
// order follows the canonical pool order, so results are deterministic.
SearchResult find_ucf_bounded(const GroupPtr& g, std::uint32_t max_len,
                              std::uint64_t budget,
                              std::uint64_t work_cap = kDefaultSearchWorkCap);

// All unordered pairs (H1, H2) of proper subgroups from the pool (cyclic
// subgroups plus closures of their generator pairs, each closure abandoned
// past `closure_cap` elements) with H1 H2 = G, certified with multiplicity
// |H1 ∩ H2|.
SearchResult find_length_two(const GroupPtr& g, std::uint64_t closure_cap,
                             std::uint64_t work_cap = kDefaultSearchWorkCap);

}  // namespace ucf
