#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "ucf/builders.hpp"
#include "ucf/catalog.hpp"
#include "ucf/certificate.hpp"
#include "ucf/classify.hpp"
#include "ucf/construct.hpp"
#include "ucf/errors.hpp"

using namespace ucf;

namespace {

// Independent tally: walks every ordered product with one term per factor
// and counts hits per element, with no help from the library's counters.
std::map<Perm, std::uint64_t> reference_counts(const FactorTuple& tuple) {
  std::map<Perm, std::uint64_t> counts;
  std::vector<std::size_t> idx(tuple.factors.size(), 0);
  for (;;) {
    Perm acc = Perm::identity(tuple.parent->degree());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      acc = acc * tuple.factors[i].elements[idx[i]];
    }
    ++counts[acc];
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < tuple.factors[pos].elements.size()) break;
      idx[pos] = 0;
      if (pos == 0) return counts;
    }
    if (idx.size() == 0) return counts;
  }
}

bool constant_count(const FactorTuple& tuple, std::uint64_t group_order,
                    std::uint64_t expected) {
  std::map<Perm, std::uint64_t> counts = reference_counts(tuple);
  if (counts.size() != group_order) return false;
  for (const auto& [p, c] : counts) {
    if (c != expected) return false;
  }
  return true;
}

std::vector<std::uint64_t> orders_of(const Factorization& fz) {
  std::vector<std::uint64_t> out;
  for (const Factor& f : fz.tuple.factors) out.push_back(f.size());
  return out;
}

bool all_cyclic(const Factorization& fz) {
  return std::all_of(fz.tuple.factors.begin(), fz.tuple.factors.end(),
                     [](const Factor& f) { return f.cyclic_generator.has_value(); });
}

}  // namespace

TEST_CASE("coprime splitting of cyclic groups") {
  SUBCASE("order with three prime factors splits into prime-power parts") {
    Factorization fz = cyclic_crt(cyclic_group(60));
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{4, 3, 5});
    CHECK(fz.multiplicity == 1);
    CHECK_FALSE(fz.improper);
    CHECK(fz.construction == "crt");
    CHECK(all_cyclic(fz));
    CHECK(constant_count(fz.tuple, 60, 1));
  }
  SUBCASE("other composite orders split exactly") {
    for (std::uint32_t n : {6, 12, 30}) {
      Factorization fz = cyclic_crt(cyclic_group(n));
      CHECK(fz.multiplicity == 1);
      CHECK_FALSE(fz.improper);
      CHECK(fz.tuple.factors.size() >= 2);
      CHECK(constant_count(fz.tuple, n, 1));
    }
  }
  SUBCASE("prime-power order yields the whole group, flagged improper") {
    for (std::uint32_t n : {7, 8, 9, 16, 27}) {
      Factorization fz = cyclic_crt(cyclic_group(n));
      CHECK(fz.tuple.factors.size() == 1);
      CHECK(fz.tuple.factors[0].size() == n);
      CHECK(fz.improper);
      CHECK(fz.multiplicity == 1);
    }
  }
  SUBCASE("non-cyclic input is rejected") {
    CHECK_THROWS_AS(cyclic_crt(symmetric_group(3)), PreconditionError);
    CHECK_THROWS_AS(cyclic_crt(direct_product(cyclic_group(2), cyclic_group(2))),
                    PreconditionError);
  }
}

TEST_CASE("abelian groups factor through a direct-sum basis") {
  SUBCASE("C6 x C6") {
    Factorization fz = abelian_ucf(direct_product(cyclic_group(6), cyclic_group(6)));
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{2, 2, 3, 3});
    CHECK(fz.multiplicity == 1);
    CHECK_FALSE(fz.fallback);
    CHECK(all_cyclic(fz));
    CHECK(constant_count(fz.tuple, 36, 1));
  }
  SUBCASE("elementary abelian 2-group of rank 4") {
    GroupPtr g = direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                direct_product(cyclic_group(2), cyclic_group(2)));
    Factorization fz = abelian_ucf(g);
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{2, 2, 2, 2});
    CHECK(constant_count(fz.tuple, 16, 1));
  }
  SUBCASE("C3 x C9 picks the large cycle first") {
    Factorization fz = abelian_ucf(direct_product(cyclic_group(3), cyclic_group(9)));
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{9, 3});
    CHECK(constant_count(fz.tuple, 27, 1));
  }
  SUBCASE("non-abelian input is rejected") {
    CHECK_THROWS_AS(abelian_ucf(symmetric_group(3)), PreconditionError);
  }
}

TEST_CASE("solvable groups factor by derived descent") {
  SUBCASE("S4") {
    Factorization fz = solvable_ucf(symmetric_group(4));
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{2, 3, 2, 2});
    CHECK(fz.multiplicity == 1);
    CHECK(all_cyclic(fz));
    CHECK(constant_count(fz.tuple, 24, 1));
  }
  SUBCASE("Q8 carries multiplicity from overlapping lifts") {
    Factorization fz = solvable_ucf(quaternion_group());
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{4, 4, 2});
    CHECK(fz.multiplicity == 4);
    CHECK(constant_count(fz.tuple, 8, 4));
  }
  SUBCASE("dihedral group of order 24") {
    Factorization fz = solvable_ucf(dihedral_group(12));
    CHECK(orders_of(fz) == std::vector<std::uint64_t>{12, 2, 2, 3});
    CHECK(fz.multiplicity == 6);
    CHECK(constant_count(fz.tuple, 24, 6));
  }
  SUBCASE("a solvable direct product stays exact") {
    Factorization fz = solvable_ucf(direct_product(symmetric_group(4), symmetric_group(3)));
    CHECK(fz.tuple.factors.size() == 6);
    CHECK(fz.multiplicity == 1);
    CHECK(all_cyclic(fz));
    CHECK(constant_count(fz.tuple, 144, 1));
  }
  SUBCASE("abelian input takes the basis path") {
    Factorization fz = solvable_ucf(cyclic_group(12));
    CHECK(fz.multiplicity == 1);
    CHECK(all_cyclic(fz));
  }
  SUBCASE("non-solvable input is rejected") {
    CHECK_THROWS_AS(solvable_ucf(alternating_group(5)), PreconditionError);
    CHECK_THROWS_AS(solvable_ucf(symmetric_group(5)), PreconditionError);
  }
  SUBCASE("every solvable catalog group factors into verified cyclic parts") {
    for (const CatalogEntry& entry : solvable_catalog()) {
      CAPTURE(entry.name);
      Factorization fz = solvable_ucf(entry.group);
      CHECK(all_cyclic(fz));
      CHECK_FALSE(fz.fallback);
      Certificate cert = make_certificate(fz);  // throws if the claim is wrong
      CHECK(cert.verified);
      CHECK(flags_coherent(cert.flags));
    }
  }
}

TEST_CASE("stabilizer descent step") {
  GroupPtr a4 = alternating_group(4);
  Subgroup v4 = make_subgroup(a4, {parse_cycles("(1,2)(3,4)", 4),
                                   parse_cycles("(1,3)(2,4)", 4)});
  Subgroup c3 = cyclic(a4, parse_cycles("(1,2,3)", 4));

  SUBCASE("valid step emits the exact tuple (k, h)") {
    Factorization fz = stabilizer_chain_step(v4, {c3});
    REQUIRE(fz.tuple.factors.size() == 2);
    CHECK(fz.tuple.factors[0].size() == 3);
    CHECK(fz.tuple.factors[1].size() == 4);
    CHECK(fz.multiplicity == 1);
    CHECK(fz.construction == "chain");
    CHECK(constant_count(fz.tuple, 12, 1));
  }
  SUBCASE("order mismatch fails the counting condition") {
    Subgroup c2 = cyclic(a4, parse_cycles("(1,2)(3,4)", 4));
    CHECK_THROWS_AS(stabilizer_chain_step(v4, {c2}), PreconditionError);
  }
  SUBCASE("right size but no witness chain fails the reach condition") {
    GroupPtr c4 = cyclic_group(4);
    Perm s = parse_cycles("(1,2,3,4)", 4);
    Subgroup h = cyclic(c4, s.pow(2));
    Subgroup k = cyclic(c4, s.pow(2));
    CHECK_THROWS_AS(stabilizer_chain_step(h, {k}), SearchError);
  }
  SUBCASE("subgroups of a different parent are rejected") {
    GroupPtr other = alternating_group(4);
    Subgroup foreign = cyclic(other, parse_cycles("(1,2,3)", 4));
    CHECK_THROWS_AS(stabilizer_chain_step(v4, {foreign}), PreconditionError);
  }
}

TEST_CASE("alternating groups factor by point-stabilizer descent") {
  const std::vector<std::vector<std::uint64_t>> expected = {
      {3},                          // n = 3 (whole group, improper)
      {3, 2, 2},                    // n = 4
      {5, 3, 2, 2},                 // n = 5
      {3, 2, 5, 3, 2, 2},          // n = 6
      {7, 3, 2, 5, 3, 2, 2},       // n = 7
      {4, 2, 7, 3, 2, 5, 3, 2, 2}, // n = 8
  };
  std::uint64_t half_factorial = 3;
  for (std::uint32_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    Factorization fz = alternating_ucf(n);
    CHECK(orders_of(fz) == expected[n - 3]);
    CHECK(fz.multiplicity == 1);
    CHECK(all_cyclic(fz));
    CHECK(fz.tuple.order_product() == half_factorial);
    if (n <= 6) CHECK(constant_count(fz.tuple, half_factorial, 1));
    half_factorial *= n + 1;
  }
  CHECK(alternating_ucf(3).improper);
  CHECK_FALSE(alternating_ucf(5).improper);
  CHECK_THROWS_AS(alternating_ucf(2), PreconditionError);
}

TEST_CASE("symmetric groups factor into the full-cycle ladder") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    Factorization fz = symmetric_ucf(n);
    std::vector<std::uint64_t> want;
    for (std::uint64_t k = 2; k <= n; ++k) want.push_back(k);
    CHECK(orders_of(fz) == want);
    CHECK(fz.multiplicity == 1);
    CHECK(all_cyclic(fz));
    if (n <= 5) CHECK(constant_count(fz.tuple, fz.tuple.order_product(), 1));
  }
  SUBCASE("n = 5 matches the textbook ladder generator by generator") {
    Factorization fz = symmetric_ucf(5);
    const std::vector<const char*> gens = {"(1,2)", "(1,2,3)", "(1,2,3,4)",
                                           "(1,2,3,4,5)"};
    REQUIRE(fz.tuple.factors.size() == 4);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(*fz.tuple.factors[i].cyclic_generator == parse_cycles(gens[i], 5));
    }
  }
}

TEST_CASE("half-rotation and half-swap parities") {
  // Independent parity oracle: inversion count of the image table.
  auto even_by_inversions = [](const Perm& p) {
    std::uint64_t inversions = 0;
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
      for (std::uint32_t j = i + 1; j < p.degree(); ++j) {
        if (p.apply(i) > p.apply(j)) ++inversions;
      }
    }
    return inversions % 2 == 0;
  };

  SUBCASE("for valid degrees the pair always escapes the alternating group") {
    for (std::uint32_t n : {3u, 7u, 11u}) {
      CAPTURE(n);
      HalfSwapParityReport r = half_swap_parity_check(n);
      CHECK(r.n == n);
      CHECK(r.m == (n - 1) / 2);
      CHECK(r.sigma_even);
      CHECK_FALSE(r.tau_even);
      CHECK_FALSE(r.pair_in_alternating);
      CHECK(even_by_inversions(r.sigma));
      CHECK_FALSE(even_by_inversions(r.tau));
      if (n <= 7) {  // small enough to enumerate: membership cross-check
        GroupPtr alt = alternating_group(n);
        CHECK(alt->contains(r.sigma));
        CHECK_FALSE(alt->contains(r.tau));
      }
    }
  }
  SUBCASE("the half-swap really is the point-exchange involution") {
    HalfSwapParityReport r = half_swap_parity_check(7);
    CHECK(r.tau == parse_cycles("(1,4)(2,5)(3,6)", 7));
    CHECK(r.sigma == parse_cycles("(1,2,3)(4,5,6)", 7));
  }
  SUBCASE("even degree or even half is rejected") {
    CHECK_THROWS_AS(half_swap_parity_check(4), PreconditionError);
    CHECK_THROWS_AS(half_swap_parity_check(5), PreconditionError);   // m = 2
    CHECK_THROWS_AS(half_swap_parity_check(9), PreconditionError);   // m = 4
    CHECK_THROWS_AS(half_swap_parity_check(1), PreconditionError);
  }
}
