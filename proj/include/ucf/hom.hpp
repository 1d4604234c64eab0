#pragma once

#include <unordered_map>

#include "ucf/group.hpp"

namespace ucf {

// A surjective homomorphism with a chosen section.  Built table-driven (maps
// over fully enumerated domain and codomain), which keeps evaluation and the
// section total and exact at this scale.
class Homomorphism {
public:
  Homomorphism(GroupPtr domain, GroupPtr codomain,
               std::unordered_map<Perm, Perm, PermHash> forward,
               std::unordered_map<Perm, Perm, PermHash> section,
               Subgroup kernel);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const Subgroup& kernel() const { return kernel_; }

  // Image of a domain element.
  Perm map(const Perm& x) const;
  // A fixed preimage of a codomain element; map(section(y)) == y.
  Perm section(const Perm& y) const;

private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::unordered_map<Perm, Perm, PermHash> forward_;
  std::unordered_map<Perm, Perm, PermHash> section_;
  Subgroup kernel_;
};

// Natural map g -> g/n realized as the permutation action of g on the left
// cosets of n.  Cosets are indexed by first appearance in g's enumeration
// order, and the stored section maps each codomain element to the first
// domain element (in enumeration order) that induces it.  Requires n normal
// in g.
Homomorphism quotient_action(GroupPtr g, const Subgroup& n);

}  // namespace ucf
