#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucf/factor.hpp"

namespace ucf {

// Membership of a factor tuple in the nine factorization families:
//
//   uniform (UF)          every group element has the same number of
//                         product representations (multiplicity t)
//   ... with group factors (UGF) / cyclic factors (UCF)
//   exact (LS)            uniform with t = 1
//   ... with group factors (LGS) / cyclic factors (LCS)
//   minimal (MLS)         exact, and the total size sum |H_1|+...+|H_k|
//                         meets the lower bound a_1 p_1 + ... + a_m p_m
//                         where |G| = p_1^a_1 ... p_m^a_m
//   ... with group factors (MLGS) / cyclic factors (MLCS)
//
// Factor kinds are re-derived from the element sets, so a subset factor
// whose elements happen to form a (cyclic) subgroup still counts as one.
struct ClassFlags {
  bool uf = false;
  bool ugf = false;
  bool ucf = false;
  bool ls = false;
  bool lgs = false;
  bool lcs = false;
  bool mls = false;
  bool mlgs = false;
  bool mlcs = false;
  std::uint64_t size = 0;
  std::uint64_t lower_bound = 0;
  std::optional<std::uint64_t> multiplicity;
  std::uint64_t covered = 0;
};

ClassFlags classify(const FactorTuple& tuple,
                    std::uint64_t budget = kDefaultTupleBudget);

// Same, reusing an already computed report for the tuple.
ClassFlags classify_with_report(const FactorTuple& tuple,
                                const MultiplicityReport& report);

// True when the flags respect the containment lattice (cyclic implies
// group-factor implies plain, minimal implies exact implies uniform, and
// mixed implications such as exact-cyclic implying both exact and cyclic).
bool flags_coherent(const ClassFlags& flags);

// Is the element set closed under products (hence a subgroup)?
bool is_subgroup_set(const std::vector<Perm>& elements);

// Does some element generate the whole set?
bool is_cyclic_set(const std::vector<Perm>& elements);

// Sum of a_i * p_i over the prime factorization n = prod p_i^a_i.
std::uint64_t factorization_size_lower_bound(std::uint64_t n);

}  // namespace ucf
