#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucf/group.hpp"
#include "ucf/hom.hpp"

namespace ucf {

// Exhaustive product enumeration stops past this many tuples.
inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

enum class FactorKind { Subgroup, Subset };

// One factor of a factorization: either a subgroup (with generators, and a
// cyclic generator when one exists) or a bare subset of the parent group.
struct Factor {
  FactorKind kind;
  std::vector<Perm> elements;            // full element list, deduplicated
  std::vector<Perm> generators;          // subgroup kind only
  std::optional<Perm> cyclic_generator;  // powers enumerate `elements` exactly
  GroupPtr group;                        // subgroup kind: the factor as a group

  std::uint64_t size() const { return elements.size(); }
};

// Subgroup factor; detects and records a cyclic generator if one exists.
Factor subgroup_factor(const Subgroup& s);

// Cyclic subgroup factor with a caller-chosen generator.
Factor cyclic_factor(const GroupPtr& parent, const Perm& generator);

// Plain subset factor (deduplicates, must be nonempty).
Factor subset_factor(std::vector<Perm> elements);

// An ordered tuple of factors over a parent group.
struct FactorTuple {
  GroupPtr parent;
  std::vector<Factor> factors;

  std::size_t length() const { return factors.size(); }
  // Sum of factor sizes (the "size" of the factorization).
  std::uint64_t total_size() const;
  // Product of factor sizes; throws BudgetExceededError past `budget`.
  std::uint64_t order_product(std::uint64_t budget = kDefaultTupleBudget) const;
};

// Outcome of exhaustively counting, for each group element, the number of
// ways to write it as an ordered product with one term from each factor.
struct MultiplicityReport {
  std::uint64_t group_order = 0;
  std::uint64_t total_tuples = 0;
  std::uint64_t covered = 0;    // elements hit at least once
  std::uint64_t min_count = 0;  // over all group elements (0 when uncovered)
  std::uint64_t max_count = 0;
  bool uniform = false;  // covered == group_order and min_count == max_count
  std::optional<std::uint64_t> multiplicity;  // set when uniform

  struct Witness {
    Perm element;
    std::uint64_t count;
  };
  // First element (in canonical order) achieving the min and the max count.
  std::vector<Witness> witnesses;
};

// Exhaustive multiplicity count.  Requires every factor element to lie in
// the parent group; throws BudgetExceededError when the number of product
// tuples exceeds `budget` (the sampler's statistical mode covers groups past
// that size).
MultiplicityReport multiplicity_report(const FactorTuple& tuple,
                                       std::uint64_t budget = kDefaultTupleBudget);

// A factor tuple together with its claimed multiplicity and provenance.
// Producers compute the claim from the composition laws; consumers can
// always re-check it with multiplicity_report.
struct Factorization {
  FactorTuple tuple;
  std::uint64_t multiplicity = 1;
  std::string construction;
  bool fallback = false;  // a construction had to take its fallback path
  bool improper = false;  // some factor is the whole group
};

// Replaces each factor of a uniform tuple by a uniform factorization of that
// factor (which must be subgroup-kind); the flattened tuple is uniform with
// multiplicity t * t_1 * ... * t_k.
Factorization refine(const FactorTuple& outer, const std::vector<FactorTuple>& inners,
                     std::uint64_t budget = kDefaultTupleBudget);

// Given a homomorphism f and subgroups H_1..H_k of its domain whose images
// form a uniform tuple of the codomain with multiplicity t', returns
// (H_1, ..., H_k, ker f) with multiplicity t' * prod |ker f  ∩ H_i|.
Factorization lift_through_hom(const Homomorphism& f,
                               const std::vector<Subgroup>& lifted,
                               std::uint64_t budget = kDefaultTupleBudget);

// Report for the pair (h1, h2); cross-checks the subgroup product-size law
// |H1 H2| = |H1||H2| / |H1 ∩ H2| and, when the product covers the parent,
// that the uniform multiplicity equals |H1 ∩ H2|.
MultiplicityReport length_two(const Subgroup& h1, const Subgroup& h2,
                              std::uint64_t budget = kDefaultTupleBudget);

}  // namespace ucf
