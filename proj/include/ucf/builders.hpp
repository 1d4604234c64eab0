#pragma once

#include <cstdint>
#include <string>

#include "ucf/group.hpp"

namespace ucf {

// Standard groups in their natural permutation representations.  All
// builders produce deterministic generator lists.

// S_n on n points (n >= 1).
GroupPtr symmetric_group(std::uint32_t n);

// A_n on n points (n >= 1), generated by consecutive 3-cycles.
GroupPtr alternating_group(std::uint32_t n);

// C_n generated by the n-cycle (1,...,n).
GroupPtr cyclic_group(std::uint32_t n);

// Symmetries of the regular n-gon (order 2n) on n points; n >= 3.
GroupPtr dihedral_group(std::uint32_t n);

// Quaternion group of order 8 in its regular action on 8 points.
GroupPtr quaternion_group();

// g x h acting on deg(g) + deg(h) points, g on the first block.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

// PSL(2, q) for prime q acting on the q+1 points of the projective line
// (point i <= q is the field value i-1; point q+1 is infinity).
GroupPtr psl2(std::uint32_t q);

// Resolves a group name: S5, A6, C12, D8 (dihedral of *order* 8), Q8,
// PSL(2,7), and direct products spelled with 'x' such as A5xC6.
GroupPtr named_group(const std::string& name,
                     std::uint64_t element_cap = kDefaultElementCap);

}  // namespace ucf
