#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucf/perm.hpp"

namespace ucf {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

// Ceiling on how many elements a single group may enumerate before the
// library gives up.  Overridable per group and via the CLI.
inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

// A finite permutation group given by generators.  The full element set is
// enumerated on first demand by breadth-first closure (multiplying stored
// elements by generators on the right), which fixes a deterministic
// enumeration order; every element has a stable canonical index.  Groups are
// immutable after construction and shared via GroupPtr.
class PermGroup {
public:
  PermGroup(std::uint32_t degree, std::vector<Perm> generators,
            std::string name = "", std::uint64_t element_cap = kDefaultElementCap);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  std::uint64_t element_cap() const { return element_cap_; }

  // Enumerates on demand; throws CapExceededError past the element cap.
  const std::vector<Perm>& elements() const;
  std::uint64_t order() const { return elements().size(); }

  bool contains(const Perm& p) const;
  // Canonical index of an element (its position in enumeration order);
  // throws PreconditionError if the element is not in the group.
  std::uint32_t index_of(const Perm& p) const;
  std::optional<std::uint32_t> try_index_of(const Perm& p) const;

  const Perm& identity() const { return identity_; }

private:
  void ensure_enumerated() const;

  std::uint32_t degree_;
  std::vector<Perm> generators_;
  std::string name_;
  std::uint64_t element_cap_;
  Perm identity_;

  mutable std::once_flag enumerated_;
  mutable std::vector<Perm> elements_;
  mutable std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

GroupPtr make_group(std::uint32_t degree, std::vector<Perm> generators,
                    std::string name = "",
                    std::uint64_t element_cap = kDefaultElementCap);

// A subgroup remembers both the ambient group and its own group structure.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;

  std::uint64_t order() const { return group->order(); }
};

Subgroup make_subgroup(GroupPtr parent, std::vector<Perm> generators,
                       std::string name = "");

// True if every element of `inner` lies in `outer` (used by tests and
// consistency checks; quadratic in the subgroup order).
bool is_subset_of(const PermGroup& inner, const PermGroup& outer);

// --- elementary constructions -------------------------------------------

// Cyclic subgroup generated by one element of `parent`.
Subgroup cyclic(GroupPtr parent, const Perm& a);

// Intersection of two subgroups of the same parent.
Subgroup intersection(const Subgroup& h, const Subgroup& k);

// Smallest normal subgroup of g containing `seed`.
Subgroup normal_closure(GroupPtr g, const std::vector<Perm>& seed);

// Commutator subgroup [g, g].
Subgroup derived_subgroup(GroupPtr g);

// Derived series g > [g,g] > ... as subgroups of g; strictly decreasing and
// stops when the series stabilizes.  Ends at the trivial subgroup exactly
// when g is solvable.
std::vector<Subgroup> derived_series(GroupPtr g);

bool is_solvable(GroupPtr g);

// Point stabilizer; `point` is 1-indexed to match cycle notation.
Subgroup stabilizer(GroupPtr g, std::uint32_t point);

// Conjugacy classes of g, each listed in canonical-index order; classes
// ordered by their smallest member's canonical index.
std::vector<std::vector<Perm>> conjugacy_classes(GroupPtr g);

// All maximal proper normal subgroups, largest order first (ties broken by
// comparing sorted element-index sets).  Normal subgroups are enumerated by
// closing conjugacy-class unions under join.
std::vector<Subgroup> maximal_normal_subgroups(GroupPtr g);

// True if g is nontrivial and has no proper nontrivial normal subgroup.
bool is_simple(GroupPtr g);

// True if all generators commute pairwise.
bool is_abelian(GroupPtr g);

// Generator of g if g is cyclic (some element's order equals |g|).
std::optional<Perm> cyclic_generator_of(GroupPtr g);

}  // namespace ucf
