#include "ucf/construct.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ucf/builders.hpp"
#include "ucf/errors.hpp"
#include "ucf/hom.hpp"
#include "ucf/sylow.hpp"

namespace ucf {

namespace {

FactorTuple self_tuple(const Factor& f) { return FactorTuple{f.group, {f}}; }

// The only tuple available for the trivial group.
Factorization trivial_factorization(GroupPtr g, std::string construction) {
  Factorization out;
  out.tuple = FactorTuple{g, {subgroup_factor(Subgroup{g, g})}};
  out.multiplicity = 1;
  out.construction = std::move(construction);
  out.improper = true;
  return out;
}

void mark_improper(Factorization& fz) {
  for (const Factor& f : fz.tuple.factors)
    if (f.size() == fz.tuple.parent->order()) fz.improper = true;
}

// Prime-power decomposition n = q_1 * q_2 * ... with q_i = p_i^{a_i},
// returned as (p_i, q_i) pairs with p_i ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_parts(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t q = 1;
    while (n % p == 0) {
      q *= p;
      n /= p;
    }
    parts.emplace_back(p, q);
  }
  if (n > 1) parts.emplace_back(n, n);
  return parts;
}

// "(lo,lo+1,...,hi)" in cycle notation.
std::string cycle_text(std::uint32_t lo, std::uint32_t hi) {
  std::string s = "(";
  for (std::uint32_t i = lo; i <= hi; ++i) {
    s += std::to_string(i);
    if (i < hi) s += ',';
  }
  return s + ")";
}

// Elements of p-power order; in an abelian group these form the unique
// Sylow p-subgroup.
std::vector<Perm> p_torsion(const PermGroup& g, std::uint64_t p) {
  std::vector<Perm> out;
  for (const Perm& x : g.elements()) {
    std::uint64_t o = x.order();
    if (o == p_part(o, p)) out.push_back(x);
  }
  return out;
}

// Greedy direct-sum basis of an abelian p-group, scanning candidates by
// decreasing order.  A candidate x joins the basis exactly when the minimal
// subgroup of <x> misses the span of the picks so far, which in a p-group
// reduces to the single membership test x^(ord(x)/p) not-in span.
std::optional<std::vector<Perm>> p_basis(const std::vector<Perm>& torsion,
                                         std::uint64_t p, const Perm& id) {
  std::vector<Perm> candidates = torsion;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Perm& a, const Perm& b) { return a.order() > b.order(); });
  std::set<Perm> span{id};
  std::vector<Perm> basis;
  for (const Perm& x : candidates) {
    std::uint64_t o = x.order();
    if (o == 1) continue;
    if (span.contains(x.pow(static_cast<std::int64_t>(o / p)))) continue;
    basis.push_back(x);
    std::set<Perm> grown;
    for (const Perm& s : span)
      for (std::uint64_t i = 0; i < o; ++i)
        grown.insert(s * x.pow(static_cast<std::int64_t>(i)));
    span = std::move(grown);
    if (span.size() == torsion.size()) return basis;
  }
  if (span.size() == torsion.size()) return basis;
  return std::nullopt;
}

// Quotient-lift path for abelian groups, reached only if the greedy basis
// pass stalls: split off a maximal-order cyclic subgroup, factor the
// quotient, and lift the quotient generators back.
Factorization abelian_fallback(GroupPtr g) {
  const std::vector<Perm>& elements = g->elements();
  const Perm* best = &elements.front();
  for (const Perm& x : elements)
    if (x.order() > best->order()) best = &x;
  Subgroup split = make_subgroup(g, {*best});
  Factorization out;
  if (split.order() == g->order()) {
    out = cyclic_crt(g);
  } else {
    Homomorphism f = quotient_action(g, split);
    Factorization quotient = abelian_ucf(f.codomain());
    std::vector<Subgroup> lifted;
    for (const Factor& fac : quotient.tuple.factors) {
      if (!fac.cyclic_generator)
        throw Error("internal inconsistency: abelian factor without a generator");
      lifted.push_back(make_subgroup(g, {f.section(*fac.cyclic_generator)}));
    }
    out = lift_through_hom(f, lifted);
  }
  out.construction = "abelian";
  out.fallback = true;
  mark_improper(out);
  return out;
}

// Shared descent recursion for the alternating group on {1..m}, embedded in
// a group of possibly larger degree.
Factorization alternating_rec(GroupPtr g, std::uint32_t m) {
  std::uint32_t degree = g->degree();
  Factorization out;
  if (m == 3) {
    out.tuple = FactorTuple{g, {cyclic_factor(g, parse_cycles("(1,2,3)", degree))}};
    out.multiplicity = 1;
  } else if (m == 4) {
    // The doubled-rotation pattern degenerates at four points; descend
    // through the normal 2x2 rectangle subgroup instead.
    Subgroup rectangle = make_subgroup(
        g, {parse_cycles("(1,2)(3,4)", degree), parse_cycles("(1,3)(2,4)", degree)});
    Subgroup three = make_subgroup(g, {parse_cycles("(1,2,3)", degree)});
    Factorization top = stabilizer_chain_step(rectangle, {three});
    FactorTuple rectangle_split{
        rectangle.group,
        {cyclic_factor(rectangle.group, parse_cycles("(1,2)(3,4)", degree)),
         cyclic_factor(rectangle.group, parse_cycles("(1,3)(2,4)", degree))}};
    out = refine(top.tuple, {self_tuple(top.tuple.factors[0]), rectangle_split});
  } else {
    Subgroup stab = stabilizer(g, m);
    std::vector<Subgroup> ks;
    if (m % 2 == 1) {
      ks.push_back(make_subgroup(g, {parse_cycles(cycle_text(1, m), degree)}));
    } else {
      std::uint32_t half = m / 2;
      std::string rotations = cycle_text(1, half) + cycle_text(half + 1, m);
      std::string swaps = "(1,2)(" + std::to_string(half) + "," + std::to_string(m) + ")";
      ks.push_back(make_subgroup(g, {parse_cycles(rotations, degree)}));
      ks.push_back(make_subgroup(g, {parse_cycles(swaps, degree)}));
    }
    Factorization top = stabilizer_chain_step(stab, ks);
    Factorization inner = alternating_rec(stab.group, m - 1);
    std::vector<FactorTuple> inners;
    for (std::size_t i = 0; i + 1 < top.tuple.factors.size(); ++i)
      inners.push_back(self_tuple(top.tuple.factors[i]));
    inners.push_back(inner.tuple);
    out = refine(top.tuple, inners);
  }
  out.construction = "alternating";
  mark_improper(out);
  return out;
}

}  // namespace

Factorization cyclic_crt(GroupPtr g) {
  if (g->order() == 1) return trivial_factorization(g, "crt");
  std::optional<Perm> gen = cyclic_generator_of(g);
  if (!gen) throw PreconditionError("splitting into coprime parts needs a cyclic group");
  std::uint64_t n = g->order();
  Factorization out;
  out.tuple.parent = g;
  for (const auto& [p, q] : prime_power_parts(n))
    out.tuple.factors.push_back(cyclic_factor(g, gen->pow(static_cast<std::int64_t>(n / q))));
  out.multiplicity = 1;
  out.construction = "crt";
  mark_improper(out);
  return out;
}

Factorization abelian_ucf(GroupPtr g) {
  if (!is_abelian(g))
    throw PreconditionError("direct-sum factorization needs an abelian group");
  if (g->order() == 1) return trivial_factorization(g, "abelian");
  std::vector<Perm> basis;
  for (const auto& [p, q] : prime_power_parts(g->order())) {
    auto part = p_basis(p_torsion(*g, p), p, g->identity());
    if (!part) return abelian_fallback(g);
    basis.insert(basis.end(), part->begin(), part->end());
  }
  Factorization out;
  out.tuple.parent = g;
  for (const Perm& b : basis) out.tuple.factors.push_back(cyclic_factor(g, b));
  out.multiplicity = 1;
  out.construction = "abelian";
  mark_improper(out);
  return out;
}

Factorization solvable_ucf(GroupPtr g) {
  if (!is_solvable(g)) throw PreconditionError("derived descent needs a solvable group");
  if (g->order() == 1) return trivial_factorization(g, "solvable");
  if (is_abelian(g)) {
    Factorization out = abelian_ucf(g);
    out.construction = "solvable";
    return out;
  }
  Subgroup derived = derived_subgroup(g);
  Homomorphism f = quotient_action(g, derived);
  Factorization quotient = abelian_ucf(f.codomain());
  std::vector<Subgroup> lifted;
  for (const Factor& fac : quotient.tuple.factors) {
    if (!fac.cyclic_generator)
      throw Error("internal inconsistency: abelian factor without a generator");
    lifted.push_back(make_subgroup(g, {f.section(*fac.cyclic_generator)}));
  }
  Factorization top = lift_through_hom(f, lifted);
  Factorization inner = solvable_ucf(derived.group);
  std::vector<FactorTuple> inners;
  for (std::size_t i = 0; i + 1 < top.tuple.factors.size(); ++i)
    inners.push_back(self_tuple(top.tuple.factors[i]));
  inners.push_back(inner.tuple);
  Factorization out = refine(top.tuple, inners);
  out.construction = "solvable";
  out.fallback = quotient.fallback || inner.fallback;
  return out;
}

Factorization stabilizer_chain_step(const Subgroup& h, const std::vector<Subgroup>& ks) {
  if (ks.empty()) throw PreconditionError("descent needs at least one stepping subgroup");
  const GroupPtr& g = h.parent;
  if (h.order() < 2) throw PreconditionError("the base subgroup must be non-trivial");
  for (const Subgroup& k : ks) {
    if (k.parent != g) throw PreconditionError("stepping subgroups must share the parent");
    if (k.order() < 2) throw PreconditionError("stepping subgroups must be non-trivial");
  }
  unsigned __int128 product = h.order();
  for (const Subgroup& k : ks) product *= k.order();
  if (product != g->order())
    throw PreconditionError("subgroup orders do not multiply to the group order");

  // Try to push `target` into h by left products drawn from ks.back() down
  // to ks.front(); exactness then follows from the order count above.
  auto reaches_base = [&](const Perm& target) {
    auto dfs = [&](auto&& self, std::size_t depth, const Perm& acc) -> bool {
      if (depth == ks.size()) return h.group->contains(acc * target);
      for (const Perm& k : ks[ks.size() - 1 - depth].group->elements())
        if (self(self, depth + 1, acc * k)) return true;
      return false;
    };
    return dfs(dfs, 0, g->identity());
  };
  for (const Perm& x : g->elements())
    if (!reaches_base(x))
      throw SearchError("no stepping product lands " + format_cycles(x) +
                        " in the base subgroup");

  Factorization out;
  out.tuple.parent = g;
  for (const Subgroup& k : ks) out.tuple.factors.push_back(subgroup_factor(k));
  out.tuple.factors.push_back(subgroup_factor(h));
  out.multiplicity = 1;
  out.construction = "chain";
  return out;
}

Factorization alternating_ucf(std::uint32_t n) {
  if (n < 3) throw PreconditionError("alternating descent needs n >= 3");
  return alternating_rec(alternating_group(n), n);
}

Factorization symmetric_ucf(std::uint32_t n) {
  if (n == 0) throw PreconditionError("degree must be positive");
  GroupPtr g = symmetric_group(n);
  if (n == 1) return trivial_factorization(g, "symmetric");
  Factorization out;
  out.tuple.parent = g;
  for (std::uint32_t k = 2; k <= n; ++k)
    out.tuple.factors.push_back(cyclic_factor(g, parse_cycles(cycle_text(1, k), n)));
  out.multiplicity = 1;
  out.construction = "symmetric";
  mark_improper(out);
  return out;
}

HalfSwapParityReport half_swap_parity_check(std::uint32_t n) {
  if (n < 3 || n % 2 == 0)
    throw PreconditionError("the doubling recipe applies to odd degrees n = 2m+1");
  std::uint32_t m = (n - 1) / 2;
  if (m % 2 == 0)
    throw PreconditionError("the parity obstruction concerns odd m = (n-1)/2");

  std::vector<std::uint32_t> s(n), t(n);
  for (std::uint32_t i = 0; i < n; ++i) s[i] = t[i] = i;
  for (std::uint32_t i = 0; i < m; ++i) {
    s[i] = (i + 1) % m;
    s[m + i] = m + (i + 1) % m;
    t[i] = m + i;
    t[m + i] = i;
  }

  HalfSwapParityReport report;
  report.n = n;
  report.m = m;
  report.sigma = Perm(std::move(s));
  report.tau = Perm(std::move(t));
  report.sigma_even = report.sigma.is_even();
  report.tau_even = report.tau.is_even();
  report.pair_in_alternating = report.sigma_even && report.tau_even;
  return report;
}

}  // namespace ucf
