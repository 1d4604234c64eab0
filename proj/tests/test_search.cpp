#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "ucf/builders.hpp"
#include "ucf/classify.hpp"
#include "ucf/errors.hpp"
#include "ucf/search.hpp"
#include "ucf/sylow.hpp"

using namespace ucf;

namespace {

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
  }
}

bool verifies_at(const Certificate& cert) {
  std::map<Perm, std::uint64_t> counts = reference_counts(cert.tuple);
  if (counts.size() != cert.group->order()) return false;
  for (const auto& [p, c] : counts) {
    if (c != cert.multiplicity) return false;
  }
  return true;
}

std::vector<std::uint64_t> sizes_of(const Certificate& cert) {
  std::vector<std::uint64_t> out;
  for (const Factor& f : cert.tuple.factors) out.push_back(f.size());
  return out;
}

}  // namespace

TEST_CASE("ordering reports over Sylow representatives") {
  SUBCASE("two-prime solvable groups settle immediately") {
    SylowReport r = sylow_orderings_report(symmetric_group(4));
    CHECK(r.type == SylowType::I);
    CHECK(r.choices_tested == 1);
    CHECK(r.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(r.sylow_orders == std::vector<std::uint64_t>{8, 3});
    REQUIRE(r.orderings.size() == 2);
    for (const OrderingResult& row : r.orderings) {
      CHECK(row.uniform);
      CHECK(row.multiplicity == 1);
      CHECK(row.covered == 24);
    }
  }
  SUBCASE("the alternating group on five points splits by ordering") {
    SylowReport r = sylow_orderings_report(alternating_group(5));
    CHECK(r.type == SylowType::II);
    CHECK(r.choices_tested == 20);  // no choice passes every ordering
    REQUIRE(r.orderings.size() == 6);
    std::map<std::vector<std::uint64_t>, std::uint64_t> covered;
    for (const OrderingResult& row : r.orderings) covered[row.primes] = row.covered;
    CHECK(covered[{2, 3, 5}] == 60);
    CHECK(covered[{2, 5, 3}] == 48);
    CHECK(covered[{3, 5, 2}] == 48);
    CHECK(covered[{5, 3, 2}] == 60);

    // Oracle: recount the decisive choice's products directly from the
    // default representatives.
    GroupPtr g = alternating_group(5);
    std::vector<Subgroup> reps = {sylow(g, 2), sylow(g, 3), sylow(g, 5)};
    FactorTuple good{g, {subgroup_factor(reps[0]), subgroup_factor(reps[1]),
                         subgroup_factor(reps[2])}};
    CHECK(reference_counts(good).size() == 60);
    FactorTuple bad{g, {subgroup_factor(reps[0]), subgroup_factor(reps[2]),
                        subgroup_factor(reps[1])}};
    CHECK(reference_counts(bad).size() == 48);
  }
  SUBCASE("the symmetric group on five points also splits") {
    SylowReport r = sylow_orderings_report(symmetric_group(5));
    CHECK(r.type == SylowType::II);
    std::map<std::vector<std::uint64_t>, std::uint64_t> covered;
    for (const OrderingResult& row : r.orderings) covered[row.primes] = row.covered;
    CHECK(covered[{2, 5, 3}] == 96);
    CHECK(covered[{2, 3, 5}] == 120);
  }
  SUBCASE("cyclic groups pass every ordering") {
    SylowReport r = sylow_orderings_report(cyclic_group(30));
    CHECK(r.type == SylowType::I);
    CHECK(r.choices_tested == 1);
    CHECK(r.orderings.size() == 6);
  }
  SUBCASE("the order-168 simple group reaches a full system by retrying") {
    SylowReport r = sylow_orderings_report(psl2(7));
    CHECK(r.type == SylowType::I);
    CHECK(r.choices_tested == 11);  // pinned for the default seed
    for (const OrderingResult& row : r.orderings) {
      CHECK(row.uniform);
      CHECK(row.covered == 168);
    }
  }
  SUBCASE("reports are deterministic") {
    nlohmann::json a = sylow_report_to_json(sylow_orderings_report(alternating_group(5)));
    nlohmann::json b = sylow_report_to_json(sylow_orderings_report(alternating_group(5)));
    CHECK(a.dump() == b.dump());
  }
  SUBCASE("serialization carries the per-ordering table") {
    nlohmann::json j = sylow_report_to_json(sylow_orderings_report(alternating_group(5)));
    CHECK(j["type"] == "II");
    CHECK(j["primes"] == nlohmann::json({2, 3, 5}));
    CHECK(j["sylow_orders"] == nlohmann::json({4, 3, 5}));
    CHECK(j["choices_tested"] == 20);
    REQUIRE(j["orderings"].size() == 6);
    bool saw_null = false, saw_one = false;
    for (const auto& row : j["orderings"]) {
      if (row["multiplicity"].is_null()) saw_null = true;
      if (row["multiplicity"] == 1) saw_one = true;
    }
    CHECK(saw_null);
    CHECK(saw_one);
  }
  SUBCASE("zero retries are rejected") {
    CHECK_THROWS_AS(sylow_orderings_report(symmetric_group(4), 0), PreconditionError);
  }
}

TEST_CASE("canonical cyclic subgroup pool") {
  SUBCASE("counts for small groups") {
    CHECK(cyclic_subgroup_pool(symmetric_group(5)).size() == 66);
    CHECK(cyclic_subgroup_pool(alternating_group(4)).size() == 7);
    CHECK(cyclic_subgroup_pool(cyclic_group(1)).empty());
    std::vector<Subgroup> q8 = cyclic_subgroup_pool(quaternion_group());
    REQUIRE(q8.size() == 4);
    CHECK(q8[0].order() == 2);
    CHECK(q8[1].order() == 4);
    CHECK(q8[3].order() == 4);
  }
  SUBCASE("pool entries are distinct subgroups in ascending order") {
    std::vector<Subgroup> pool = cyclic_subgroup_pool(symmetric_group(4));
    std::set<std::vector<Perm>> element_sets;
    std::uint64_t prev = 0;
    for (const Subgroup& s : pool) {
      CHECK(s.order() >= prev);
      prev = s.order();
      std::vector<Perm> sorted_elems = s.group->elements();
      std::sort(sorted_elems.begin(), sorted_elems.end(),
                [](const Perm& a, const Perm& b) { return a.images() < b.images(); });
      CHECK(element_sets.insert(sorted_elems).second);
    }
  }
}

TEST_CASE("bounded search over cyclic tuples") {
  SUBCASE("S5 with three factors and multiplicity at most two") {
    SearchResult res = find_ucf_bounded(symmetric_group(5), 3, 2);
    CHECK(res.complete);
    CHECK(res.certificates.size() == 1200);
    bool has546 = false;
    for (const Certificate& c : res.certificates) {
      CHECK(c.verified);
      CHECK(flags_coherent(c.flags));
      if (c.multiplicity == 1 && sizes_of(c) == std::vector<std::uint64_t>{5, 4, 6}) {
        has546 = true;
      }
    }
    CHECK(has546);
    CHECK(verifies_at(res.certificates.front()));
  }
  SUBCASE("A4 finds the exact triples with the three-cycle outside the middle") {
    SearchResult res = find_ucf_bounded(alternating_group(4), 3, 1);
    CHECK(res.complete);
    CHECK(res.certificates.size() == 48);
    std::map<std::vector<std::uint64_t>, int> shapes;
    for (const Certificate& c : res.certificates) ++shapes[sizes_of(c)];
    CHECK(shapes[{2, 2, 3}] == 24);
    CHECK(shapes[{3, 2, 2}] == 24);
    CHECK(shapes.count({2, 3, 2}) == 0);
    CHECK(verifies_at(res.certificates.front()));
  }
  SUBCASE("a prime cyclic group admits only improper tuples") {
    SearchResult res = find_ucf_bounded(cyclic_group(7), 2, 7);
    CHECK(res.complete);
    REQUIRE(res.certificates.size() == 2);
    for (const Certificate& c : res.certificates) {
      bool improper = false;
      for (const Factor& f : c.tuple.factors) improper |= f.size() == 7;
      CHECK(improper);
    }
    CHECK(res.certificates[0].multiplicity == 1);
    CHECK(res.certificates[1].multiplicity == 7);
  }
  SUBCASE("an exhausted work cap flags the result incomplete") {
    SearchResult res = find_ucf_bounded(symmetric_group(5), 3, 2, 100);
    CHECK_FALSE(res.complete);
    CHECK(res.certificates.empty());
  }
  SUBCASE("degenerate bounds are rejected") {
    CHECK_THROWS_AS(find_ucf_bounded(symmetric_group(3), 0, 1), PreconditionError);
    CHECK_THROWS_AS(find_ucf_bounded(symmetric_group(3), 2, 0), PreconditionError);
  }
}

TEST_CASE("length-two subgroup pair search") {
  SUBCASE("A5 pairs split between exact and multiplicity two") {
    SearchResult res = find_length_two(alternating_group(5), 30);
    CHECK(res.complete);
    CHECK(res.certificates.size() == 60);
    int exact = 0, doubled = 0;
    bool has_rotation_stabilizer = false;
    for (const Certificate& c : res.certificates) {
      CHECK(c.verified);
      if (c.multiplicity == 1) {
        ++exact;
        if (sizes_of(c) == std::vector<std::uint64_t>{5, 12}) {
          has_rotation_stabilizer = true;
        }
      } else if (c.multiplicity == 2) {
        ++doubled;
        CHECK(sizes_of(c) == std::vector<std::uint64_t>{10, 12});
      }
    }
    CHECK(exact == 30);
    CHECK(doubled == 30);
    CHECK(has_rotation_stabilizer);
    CHECK(verifies_at(res.certificates.front()));
  }
  SUBCASE("S3 finds its three reflection pairings") {
    SearchResult res = find_length_two(symmetric_group(3), 6);
    CHECK(res.certificates.size() == 3);
    for (const Certificate& c : res.certificates) {
      CHECK(c.multiplicity == 1);
      CHECK(sizes_of(c) == std::vector<std::uint64_t>{2, 3});
      CHECK(verifies_at(c));
    }
  }
  SUBCASE("Q8 pairs its three maximal cyclic subgroups") {
    SearchResult res = find_length_two(quaternion_group(), 7);
    CHECK(res.certificates.size() == 3);
    for (const Certificate& c : res.certificates) {
      CHECK(c.multiplicity == 2);
      CHECK(sizes_of(c) == std::vector<std::uint64_t>{4, 4});
    }
  }
  SUBCASE("C6 splits into its prime parts") {
    SearchResult res = find_length_two(cyclic_group(6), 5);
    REQUIRE(res.certificates.size() == 1);
    CHECK(res.certificates[0].multiplicity == 1);
    CHECK(sizes_of(res.certificates[0]) == std::vector<std::uint64_t>{2, 3});
  }
  SUBCASE("an exhausted work cap flags the result incomplete") {
    SearchResult res = find_length_two(alternating_group(5), 30, 500);
    CHECK_FALSE(res.complete);
  }
  SUBCASE("a closure cap below two is rejected") {
    CHECK_THROWS_AS(find_length_two(symmetric_group(3), 1), PreconditionError);
  }
}
