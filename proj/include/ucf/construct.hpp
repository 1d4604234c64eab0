#pragma once

#include <cstdint>
#include <vector>

#include "ucf/factor.hpp"
#include "ucf/group.hpp"

namespace ucf {

// Splits a cyclic group into cyclic factors of pairwise coprime prime-power
// orders.  The result is exact (multiplicity 1); for a group of prime-power
// order the single factor is the whole group and the result is improper.
Factorization cyclic_crt(GroupPtr g);

// Exact cyclic factorization of an abelian group from a direct-sum basis:
// per prime, greedily picks elements of maximal order whose cyclic span
// meets the span of the previous picks trivially.  Should the greedy pass
// ever stall, falls back to quotient lifting (flagged `fallback`, and the
// multiplicity may then exceed 1).
Factorization abelian_ucf(GroupPtr g);

// Cyclic factorization of a solvable group: factors the abelianization,
// lifts generator preimages through the quotient map, and recurses on the
// derived subgroup.  Multiplicity can exceed 1 when lifted cyclic subgroups
// meet the layer below.
Factorization solvable_ucf(GroupPtr g);

// Builds the exact tuple (ks[0], ..., ks[l-1], h) after checking the two
// descent conditions:
//   (a) the subgroup orders multiply to the group order, and
//   (b) every group element can be pushed into h by left-multiplying with
//       one element from each of ks[l-1], ..., ks[0] in that order.
// Throws PreconditionError if (a) fails and SearchError if (b) fails; when
// both hold the tuple has multiplicity 1.
Factorization stabilizer_chain_step(const Subgroup& h,
                                    const std::vector<Subgroup>& ks);

// Exact cyclic factorization of the alternating group on n >= 3 points by
// stabilizer descent: one n-rotation for odd n, a pair of half-rotations
// for even n, then recursion into the stabilizer of the last point.
Factorization alternating_ucf(std::uint32_t n);

// The exact cyclic tuple (<(1,2)>, <(1,2,3)>, ..., <(1,2,...,n)>) over the
// symmetric group on n points.
Factorization symmetric_ucf(std::uint32_t n);

// For odd degree n = 2m+1 with m odd, the half-rotation
// sigma = (1,...,m)(m+1,...,2m) is even, but the half-swap
// tau = (1,m+1)(2,m+2)...(m,2m) is a product of an odd number of
// transpositions.  A doubling recipe seeded with this pair therefore
// escapes the alternating group; the report records the parities and the
// containment verdict.
struct HalfSwapParityReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Perm sigma = Perm::identity(0);
  Perm tau = Perm::identity(0);
  bool sigma_even = false;
  bool tau_even = false;
  bool pair_in_alternating = false;
};

HalfSwapParityReport half_swap_parity_check(std::uint32_t n);

}  // namespace ucf
