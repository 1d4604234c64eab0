#pragma once

#include <cstdint>

#include "ucf/group.hpp"

namespace ucf {

// Fixed default seed so repeated runs pick the same Sylow representatives.
inline constexpr std::uint64_t kDefaultSylowSeed = 5;

// A Sylow p-subgroup of g, found by randomized growth: seed with a p-element
// (a suitable power of a random element), repeatedly adjoin conjugates of
// p-elements as long as the closure stays a p-group, and restart on
// stagnation.  Deterministic for a fixed seed; raises SearchError if the
// retry budget is exhausted and PreconditionError if p does not divide |g|
// or is not prime.
Subgroup sylow(GroupPtr g, std::uint64_t p, std::uint64_t seed = kDefaultSylowSeed);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace ucf
