#include "ucf/classify.hpp"

#include <set>

namespace ucf {

bool is_subgroup_set(const std::vector<Perm>& elements) {
  std::set<Perm> set(elements.begin(), elements.end());
  for (const Perm& a : elements)
    for (const Perm& b : elements)
      if (!set.contains(a * b)) return false;
  // Finite and closed under products implies closed under inverses too.
  return !elements.empty();
}

bool is_cyclic_set(const std::vector<Perm>& elements) {
  for (const Perm& p : elements)
    if (p.order() == elements.size()) return is_subgroup_set(elements);
  return false;
}

std::uint64_t factorization_size_lower_bound(std::uint64_t n) {
  std::uint64_t bound = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      bound += p;
      n /= p;
    }
  }
  if (n > 1) bound += n;
  return bound;
}

ClassFlags classify_with_report(const FactorTuple& tuple,
                                const MultiplicityReport& report) {
  ClassFlags flags;
  flags.size = tuple.total_size();
  flags.lower_bound = factorization_size_lower_bound(report.group_order);
  flags.multiplicity = report.multiplicity;
  flags.covered = report.covered;

  flags.uf = report.uniform;
  if (!flags.uf) return flags;

  bool all_groups = true, all_cyclic = true;
  for (const Factor& f : tuple.factors) {
    if (!is_subgroup_set(f.elements)) {
      all_groups = false;
      all_cyclic = false;
      break;
    }
    if (!is_cyclic_set(f.elements)) all_cyclic = false;
  }
  flags.ugf = all_groups;
  flags.ucf = all_cyclic;

  flags.ls = *report.multiplicity == 1;
  flags.lgs = flags.ls && flags.ugf;
  flags.lcs = flags.ls && flags.ucf;

  flags.mls = flags.ls && flags.size == flags.lower_bound;
  flags.mlgs = flags.mls && flags.ugf;
  flags.mlcs = flags.mls && flags.ucf;
  return flags;
}

ClassFlags classify(const FactorTuple& tuple, std::uint64_t budget) {
  return classify_with_report(tuple, multiplicity_report(tuple, budget));
}

bool flags_coherent(const ClassFlags& f) {
  auto implies = [](bool a, bool b) { return !a || b; };
  return implies(f.ucf, f.ugf) && implies(f.ugf, f.uf) &&
         implies(f.lcs, f.lgs) && implies(f.lgs, f.ls) &&
         implies(f.mlcs, f.mlgs) && implies(f.mlgs, f.mls) &&
         implies(f.ls, f.uf) && implies(f.lgs, f.ugf) && implies(f.lcs, f.ucf) &&
         implies(f.mls, f.ls) && implies(f.mlgs, f.lgs) && implies(f.mlcs, f.lcs);
}

}  // namespace ucf
