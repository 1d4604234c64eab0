#include "ucf/hom.hpp"

#include "ucf/errors.hpp"

namespace ucf {

Homomorphism::Homomorphism(GroupPtr domain, GroupPtr codomain,
                           std::unordered_map<Perm, Perm, PermHash> forward,
                           std::unordered_map<Perm, Perm, PermHash> section,
                           Subgroup kernel)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      forward_(std::move(forward)),
      section_(std::move(section)),
      kernel_(std::move(kernel)) {}

Perm Homomorphism::map(const Perm& x) const {
  auto it = forward_.find(x);
  if (it == forward_.end())
    throw PreconditionError("element " + format_cycles(x) + " is not in the domain");
  return it->second;
}

Perm Homomorphism::section(const Perm& y) const {
  auto it = section_.find(y);
  if (it == section_.end())
    throw PreconditionError("element " + format_cycles(y) + " is not in the codomain");
  return it->second;
}

Homomorphism quotient_action(GroupPtr g, const Subgroup& n) {
  if (n.parent != g)
    throw PreconditionError("quotient requires a subgroup of the given group");
  if (!is_subset_of(*n.group, *g))
    throw PreconditionError("quotient subgroup is not contained in the group");

  // Normality check: conjugating subgroup generators by group generators
  // must stay inside the subgroup.
  for (const Perm& t : g->generators())
    for (const Perm& s : n.group->generators())
      if (!n.group->contains(t * s * t.inverse()))
        throw PreconditionError("quotient subgroup is not normal (conjugate of " +
                                format_cycles(s) + " by " + format_cycles(t) +
                                " escapes)");

  // Partition g into left cosets x*n, numbering cosets by the first element
  // of g's enumeration order that lands in them.
  const auto& els = g->elements();
  std::unordered_map<Perm, std::uint32_t, PermHash> coset_of;
  std::vector<Perm> reps;
  for (const Perm& x : els) {
    if (coset_of.contains(x)) continue;
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const Perm& s : n.group->elements()) coset_of.emplace(x * s, id);
  }
  std::uint32_t q = static_cast<std::uint32_t>(reps.size());

  // The action of x sends coset i to the coset of x * reps[i].
  auto action_of = [&](const Perm& x) {
    std::vector<std::uint32_t> img(q);
    for (std::uint32_t i = 0; i < q; ++i) img[i] = coset_of.at(x * reps[i]);
    return Perm(std::move(img));
  };

  std::vector<Perm> codomain_gens;
  codomain_gens.reserve(g->generators().size());
  for (const Perm& t : g->generators()) codomain_gens.push_back(action_of(t));
  auto codomain = make_group(q, std::move(codomain_gens), "", g->element_cap());

  std::unordered_map<Perm, Perm, PermHash> forward;
  std::unordered_map<Perm, Perm, PermHash> section;
  std::vector<Perm> kernel_elements;
  forward.reserve(els.size());
  for (const Perm& x : els) {
    Perm y = action_of(x);
    section.try_emplace(y, x);  // first domain element wins
    if (y.is_identity()) kernel_elements.push_back(x);
    forward.emplace(x, std::move(y));
  }
  if (section.size() != codomain->order())
    throw PreconditionError("quotient action table does not cover the codomain");

  Subgroup kernel = make_subgroup(g, std::move(kernel_elements));
  if (kernel.order() != n.order())
    throw PreconditionError("kernel of the coset action differs from the subgroup");

  return Homomorphism(std::move(g), std::move(codomain), std::move(forward),
                      std::move(section), std::move(kernel));
}

}  // namespace ucf
