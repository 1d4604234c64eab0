#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ucf/classify.hpp"
#include "ucf/factor.hpp"

namespace ucf {

// --- group descriptions --------------------------------------------------

// {"degree": n, "generators": ["(1,2)", ...], "name": "S5"} with `name`
// optional.  Cycle strings use 1-indexed points.
nlohmann::json group_to_json(const PermGroup& g);
GroupPtr group_from_json(const nlohmann::json& j);

// Accepts either a builder name such as "S5" / "PSL(2,7)" / "A4xC2" or a
// path to a group description file in the JSON form above.
GroupPtr load_group(const std::string& name_or_path);

// --- certificates --------------------------------------------------------

// A factorization claim in independently checkable form: the group, the
// ordered factor tuple, the claimed multiplicity, and the class flags.
// `verified` records whether this process re-checked the claim by
// exhaustive counting (deserialized certificates start unverified).
struct Certificate {
  GroupPtr group;
  FactorTuple tuple;
  std::uint64_t multiplicity = 1;
  ClassFlags flags;
  bool verified = false;
  std::string construction;  // producer's note on how the tuple was built
  bool fallback = false;
};

// Checks the claimed multiplicity by exhaustive counting and fills in the
// class flags; throws PreconditionError when the claim does not hold.
Certificate make_certificate(const Factorization& fz,
                             std::uint64_t budget = kDefaultTupleBudget);

// Recounts from scratch and refreshes the flags.  Sets `verified` to
// whether the tuple is uniform with the claimed multiplicity instead of
// throwing, so callers can report a failed check.
Certificate reverify(Certificate cert, std::uint64_t budget = kDefaultTupleBudget);

// Certificate JSON:
//   {"group": {...}, "factors": [...], "claimed_multiplicity": t,
//    "flags": {"UF": ..., ..., "MLCS": ..., "size": s, "lower_bound": b},
//    "verified": ..., "construction": "...", "fallback": ...}
// Factors are {"kind": "subgroup", "generators": [...]} (a single generator
// when the factor is cyclic) or {"kind": "subset", "elements": [...]}.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& cert, const std::string& path);

}  // namespace ucf
