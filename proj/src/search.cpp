#include "ucf/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ucf/classify.hpp"
#include "ucf/errors.hpp"
#include "ucf/factor.hpp"
#include "ucf/rng.hpp"

namespace ucf {

namespace {

std::vector<std::uint64_t> prime_factors_ascending(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Sorted canonical-index key identifying a subgroup inside its parent.
std::vector<std::uint32_t> element_key(const PermGroup& parent,
                                       const PermGroup& sub) {
  std::vector<std::uint32_t> key;
  key.reserve(sub.order());
  for (const Perm& p : sub.elements()) key.push_back(parent.index_of(p));
  std::sort(key.begin(), key.end());
  return key;
}

std::string describe_generators(const PermGroup& g) {
  std::ostringstream out;
  out << "<";
  bool first = true;
  for (const Perm& gen : g.generators()) {
    if (!first) out << ", ";
    out << format_cycles(gen);
    first = false;
  }
  out << ">";
  return out.str();
}

Certificate certificate_from_report(const GroupPtr& g, FactorTuple tuple,
                                    const MultiplicityReport& report,
                                    std::string construction) {
  Certificate cert;
  cert.group = g;
  cert.flags = classify_with_report(tuple, report);
  cert.tuple = std::move(tuple);
  cert.multiplicity = *report.multiplicity;
  cert.verified = true;
  cert.construction = std::move(construction);
  return cert;
}

}  // namespace

std::string to_string(SylowType type) {
  switch (type) {
    case SylowType::I: return "I";
    case SylowType::II: return "II";
    case SylowType::III: return "III";
    case SylowType::Undetermined: return "undetermined";
  }
  return "undetermined";
}

SylowReport sylow_orderings_report(const GroupPtr& g, std::uint32_t retries,
                                   std::uint64_t seed) {
  if (retries == 0) throw PreconditionError("sylow_orderings_report: retries must be positive");
  const std::uint64_t n = g->order();
  SylowReport report;
  report.group_name = g->name();
  report.group_order = n;
  report.primes = prime_factors_ascending(n);
  if (report.primes.size() > 6) {
    throw PreconditionError("sylow_orderings_report: more than 6 distinct primes");
  }
  for (std::uint64_t p : report.primes) report.sylow_orders.push_back(p_part(n, p));
  if (report.primes.empty()) {  // trivial group: nothing to order
    report.type = SylowType::I;
    report.choices_tested = 1;
    report.choice_note = "trivial group, empty tuple";
    return report;
  }

  const std::size_t k = report.primes.size();
  std::vector<Subgroup> base;
  base.reserve(k);
  for (std::uint64_t p : report.primes) base.push_back(sylow(g, p, seed));

  Rng rng(seed * 0x9E3779B97F4A7C15ull + 1);
  const std::vector<Perm>& elems = g->elements();

  bool have_split = false;  // saw a choice with both an exact and a failing ordering
  std::vector<OrderingResult> split_orderings;
  std::string split_note;
  std::vector<OrderingResult> first_orderings;
  std::string first_note;

  for (std::uint32_t attempt = 0; attempt < retries; ++attempt) {
    std::vector<Subgroup> reps;
    std::string note;
    if (attempt == 0) {
      reps = base;
      note = "choice 0 (seeded defaults)";
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        const Perm& x = elems[rng.uniform_below(n)];
        std::vector<Perm> gens;
        gens.reserve(base[i].group->generators().size());
        for (const Perm& gen : base[i].group->generators()) {
          gens.push_back(x * gen * x.inverse());
        }
        reps.push_back(make_subgroup(g, std::move(gens)));
      }
      note = "choice " + std::to_string(attempt) + " (conjugated defaults)";
    }
    for (std::size_t i = 0; i < k; ++i) {
      note += "; P" + std::to_string(report.primes[i]) + " = " +
              describe_generators(*reps[i].group);
    }
    report.choices_tested = attempt + 1;

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<OrderingResult> rows;
    bool all_exact = true;
    bool any_exact = false;
    bool any_fail = false;
    do {
      FactorTuple tuple;
      tuple.parent = g;
      OrderingResult row;
      for (std::size_t idx : order) {
        tuple.factors.push_back(subgroup_factor(reps[idx]));
        row.primes.push_back(report.primes[idx]);
      }
      MultiplicityReport counts = multiplicity_report(tuple);
      row.covered = counts.covered;
      row.uniform = counts.uniform;
      row.multiplicity = counts.multiplicity;
      bool exact = counts.uniform && counts.multiplicity == 1;
      all_exact = all_exact && exact;
      any_exact = any_exact || exact;
      any_fail = any_fail || !exact;
      rows.push_back(std::move(row));
    } while (std::next_permutation(order.begin(), order.end()));

    if (attempt == 0) {
      first_orderings = rows;
      first_note = note;
    }
    if (all_exact) {
      report.type = SylowType::I;
      report.orderings = std::move(rows);
      report.choice_note = std::move(note);
      return report;
    }
    if (any_exact && any_fail && !have_split) {
      have_split = true;
      split_orderings = std::move(rows);
      split_note = std::move(note);
    }
  }

  if (have_split) {
    report.type = SylowType::II;
    report.orderings = std::move(split_orderings);
    report.choice_note = std::move(split_note);
  } else {
    report.type = SylowType::Undetermined;
    report.orderings = std::move(first_orderings);
    report.choice_note = std::move(first_note);
  }
  return report;
}

nlohmann::json sylow_report_to_json(const SylowReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const OrderingResult& row : report.orderings) {
    nlohmann::json entry = {
        {"ordering", row.primes},
        {"covered", row.covered},
        {"uniform", row.uniform},
    };
    if (row.multiplicity) {
      entry["multiplicity"] = *row.multiplicity;
    } else {
      entry["multiplicity"] = nullptr;
    }
    rows.push_back(std::move(entry));
  }
  return nlohmann::json{
      {"group", report.group_name},
      {"order", report.group_order},
      {"primes", report.primes},
      {"sylow_orders", report.sylow_orders},
      {"type", to_string(report.type)},
      {"choices_tested", report.choices_tested},
      {"choice_note", report.choice_note},
      {"orderings", std::move(rows)},
  };
}

std::vector<Subgroup> cyclic_subgroup_pool(const GroupPtr& g) {
  std::map<std::vector<std::uint32_t>, Perm> seen;
  for (const Perm& x : g->elements()) {
    if (x.order() == 1) continue;
    std::vector<std::uint32_t> key;
    Perm acc = x;
    while (acc.order() != 1) {
      key.push_back(g->index_of(acc));
      acc = acc * x;
    }
    key.push_back(g->index_of(acc));  // identity
    std::sort(key.begin(), key.end());
    seen.emplace(std::move(key), x);  // keeps the first-found generator
  }
  std::vector<std::pair<std::vector<std::uint32_t>, Perm>> entries(seen.begin(),
                                                                   seen.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size())
                return a.first.size() < b.first.size();
              return a.first < b.first;
            });
  std::vector<Subgroup> pool;
  pool.reserve(entries.size());
  for (const auto& [key, gen] : entries) pool.push_back(cyclic(g, gen));
  return pool;
}

SearchResult find_ucf_bounded(const GroupPtr& g, std::uint32_t max_len,
                              std::uint64_t budget, std::uint64_t work_cap) {
  if (max_len == 0) throw PreconditionError("find_ucf_bounded: max_len must be positive");
  if (budget == 0) throw PreconditionError("find_ucf_bounded: budget must be positive");
  const std::uint64_t n = g->order();
  std::vector<Subgroup> pool = cyclic_subgroup_pool(g);
  std::vector<std::uint64_t> orders;
  orders.reserve(pool.size());
  for (const Subgroup& s : pool) orders.push_back(s.order());
  const std::uint64_t max_order = orders.empty() ? 1 : orders.back();
  const std::uint64_t product_cap = budget * n;

  SearchResult result;
  std::uint64_t work = 0;
  std::vector<std::size_t> stack;

  // Smallest power of max_order reaching `target` from `have`, capped at
  // `slots` factors; true when coverage is still possible.
  auto reachable = [&](std::uint64_t have, std::uint32_t slots) {
    for (std::uint32_t i = 0; i < slots; ++i) {
      if (have >= n) return true;
      have *= max_order;
    }
    return have >= n;
  };

  auto dfs = [&](auto&& self, std::uint64_t product) -> bool {
    if (!stack.empty() && product % n == 0 && product / n <= budget) {
      if (work + product > work_cap) return false;
      work += product;
      FactorTuple tuple;
      tuple.parent = g;
      for (std::size_t idx : stack) tuple.factors.push_back(subgroup_factor(pool[idx]));
      MultiplicityReport counts = multiplicity_report(tuple, product);
      if (counts.uniform) {
        result.certificates.push_back(
            certificate_from_report(g, std::move(tuple), counts, "search"));
      }
    }
    if (stack.size() == max_len) return true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (product > product_cap / orders[i]) break;  // pool sorted ascending
      std::uint64_t next = product * orders[i];
      if (!reachable(next, max_len - static_cast<std::uint32_t>(stack.size()) - 1)) {
        continue;
      }
      stack.push_back(i);
      bool ok = self(self, next);
      stack.pop_back();
      if (!ok) return false;
    }
    return true;
  };

  result.complete = dfs(dfs, 1);
  return result;
}

SearchResult find_length_two(const GroupPtr& g, std::uint64_t closure_cap,
                             std::uint64_t work_cap) {
  if (closure_cap < 2) throw PreconditionError("find_length_two: closure_cap must be at least 2");
  const std::uint64_t n = g->order();
  std::vector<Subgroup> cyclics = cyclic_subgroup_pool(g);

  std::map<std::vector<std::uint32_t>, Subgroup> pool_map;
  for (const Subgroup& s : cyclics) {
    if (s.order() == n) continue;  // proper factors only
    pool_map.emplace(element_key(*g, *s.group), s);
  }
  const std::uint64_t cap = std::min<std::uint64_t>(closure_cap, n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < cyclics.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclics.size(); ++j) {
      std::vector<Perm> gens = {*cyclics[i].group->generators().begin(),
                                *cyclics[j].group->generators().begin()};
      try {
        GroupPtr closure = make_group(g->degree(), std::move(gens), "", cap);
        closure->order();  // forces enumeration; throws past the cap
        Subgroup sub = make_subgroup(g, closure->generators());
        pool_map.emplace(element_key(*g, *sub.group), sub);
      } catch (const CapExceededError&) {
        continue;  // closure too large (or the whole group): not a factor candidate
      }
    }
  }

  std::vector<Subgroup> pool;
  pool.reserve(pool_map.size());
  {
    std::vector<std::pair<std::vector<std::uint32_t>, Subgroup>> entries(
        pool_map.begin(), pool_map.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    for (auto& [key, sub] : entries) pool.push_back(sub);
  }

  SearchResult result;
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const Subgroup& a = pool[i];
      const Subgroup& b = pool[j];
      std::uint64_t product = a.order() * b.order();
      if (product < n || product % n != 0) continue;
      // |H1 H2| = |H1| |H2| / |H1 ∩ H2|, so covering forces this quotient.
      const Subgroup& small = a.order() <= b.order() ? a : b;
      const Subgroup& large = a.order() <= b.order() ? b : a;
      std::uint64_t meet = 0;
      for (const Perm& p : small.group->elements()) {
        if (large.group->contains(p)) ++meet;
      }
      if (product != n * meet) continue;
      if (work + product > work_cap) {
        result.complete = false;
        return result;
      }
      work += product;
      MultiplicityReport counts = length_two(a, b, product);
      if (!counts.uniform) continue;
      FactorTuple tuple;
      tuple.parent = g;
      tuple.factors.push_back(subgroup_factor(a));
      tuple.factors.push_back(subgroup_factor(b));
      result.certificates.push_back(
          certificate_from_report(g, std::move(tuple), counts, "pair"));
    }
  }
  return result;
}

}  // namespace ucf
