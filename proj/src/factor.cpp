#include "ucf/factor.hpp"

#include <algorithm>
#include <set>

#include "ucf/errors.hpp"

namespace ucf {

namespace {

std::optional<Perm> detect_cyclic_generator(const std::vector<Perm>& elements) {
  for (const Perm& p : elements)
    if (p.order() == elements.size()) return p;
  return std::nullopt;
}

}  // namespace

Factor subgroup_factor(const Subgroup& s) {
  Factor f;
  f.kind = FactorKind::Subgroup;
  f.elements = s.group->elements();
  f.generators = s.group->generators();
  f.cyclic_generator = detect_cyclic_generator(f.elements);
  f.group = s.group;
  return f;
}

Factor cyclic_factor(const GroupPtr& parent, const Perm& generator) {
  Subgroup s = cyclic(parent, generator);
  Factor f = subgroup_factor(s);
  f.generators = {generator};
  f.cyclic_generator = generator;
  return f;
}

Factor subset_factor(std::vector<Perm> elements) {
  if (elements.empty()) throw PreconditionError("a subset factor cannot be empty");
  std::set<Perm> dedup(elements.begin(), elements.end());
  Factor f;
  f.kind = FactorKind::Subset;
  f.elements.assign(dedup.begin(), dedup.end());
  return f;
}

std::uint64_t FactorTuple::total_size() const {
  std::uint64_t sum = 0;
  for (const Factor& f : factors) sum += f.size();
  return sum;
}

std::uint64_t FactorTuple::order_product(std::uint64_t budget) const {
  unsigned __int128 product = 1;
  for (const Factor& f : factors) {
    product *= f.size();
    if (product > budget)
      throw BudgetExceededError(
          "product enumeration would exceed the tuple budget of " +
          std::to_string(budget) +
          " tuples; use the sampler's statistical mode for groups this large");
  }
  return static_cast<std::uint64_t>(product);
}

MultiplicityReport multiplicity_report(const FactorTuple& tuple, std::uint64_t budget) {
  if (!tuple.parent) throw PreconditionError("factor tuple has no parent group");
  if (tuple.factors.empty())
    throw PreconditionError("factor tuple must contain at least one factor");
  const PermGroup& g = *tuple.parent;
  std::uint64_t n = g.order();
  for (const Factor& f : tuple.factors) {
    if (f.elements.empty()) throw PreconditionError("factor with no elements");
    for (const Perm& p : f.elements)
      if (!g.contains(p))
        throw PreconditionError("factor element " + format_cycles(p) +
                                " lies outside the parent group");
  }

  MultiplicityReport report;
  report.group_order = n;
  report.total_tuples = tuple.order_product(budget);

  std::vector<std::uint64_t> counts(n, 0);
  // Depth-first walk over the product space, extending a running product by
  // one factor element per level.
  auto walk = [&](auto&& self, std::size_t depth, const Perm& acc) -> void {
    if (depth == tuple.factors.size()) {
      ++counts[g.index_of(acc)];
      return;
    }
    for (const Perm& h : tuple.factors[depth].elements) self(self, depth + 1, acc * h);
  };
  walk(walk, 0, g.identity());

  report.min_count = counts[0];
  report.max_count = counts[0];
  std::size_t min_at = 0, max_at = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) ++report.covered;
    if (counts[i] < report.min_count) {
      report.min_count = counts[i];
      min_at = i;
    }
    if (counts[i] > report.max_count) {
      report.max_count = counts[i];
      max_at = i;
    }
  }
  report.uniform = report.covered == n && report.min_count == report.max_count;
  if (report.uniform) report.multiplicity = report.min_count;
  report.witnesses.push_back({g.elements()[min_at], report.min_count});
  if (max_at != min_at)
    report.witnesses.push_back({g.elements()[max_at], report.max_count});
  return report;
}

Factorization refine(const FactorTuple& outer, const std::vector<FactorTuple>& inners,
                     std::uint64_t budget) {
  if (outer.factors.size() != inners.size())
    throw PreconditionError("refine needs one inner tuple per outer factor");
  MultiplicityReport outer_report = multiplicity_report(outer, budget);
  if (!outer_report.uniform)
    throw PreconditionError("refine requires a uniform outer tuple");

  unsigned __int128 multiplicity = *outer_report.multiplicity;
  std::vector<Factor> flat;
  for (std::size_t i = 0; i < inners.size(); ++i) {
    const Factor& f = outer.factors[i];
    const FactorTuple& inner = inners[i];
    if (f.kind != FactorKind::Subgroup)
      throw PreconditionError("refine requires subgroup outer factors");
    if (!inner.parent || inner.parent->degree() != outer.parent->degree())
      throw PreconditionError("inner tuple degree mismatch");
    if (inner.parent->order() != f.size())
      throw PreconditionError("inner tuple " + std::to_string(i) +
                              " does not factor its outer factor");
    for (const Perm& p : f.elements)
      if (!inner.parent->contains(p))
        throw PreconditionError("inner tuple " + std::to_string(i) +
                                " does not factor its outer factor");
    MultiplicityReport inner_report = multiplicity_report(inner, budget);
    if (!inner_report.uniform)
      throw PreconditionError("inner tuple " + std::to_string(i) + " is not uniform");
    multiplicity *= *inner_report.multiplicity;
    for (const Factor& inner_factor : inner.factors) flat.push_back(inner_factor);
  }

  Factorization out;
  out.tuple = FactorTuple{outer.parent, std::move(flat)};
  out.multiplicity = static_cast<std::uint64_t>(multiplicity);
  out.construction = "refine";
  for (const Factor& f : out.tuple.factors)
    if (f.size() == outer.parent->order()) out.improper = true;
  return out;
}

Factorization lift_through_hom(const Homomorphism& f,
                               const std::vector<Subgroup>& lifted,
                               std::uint64_t budget) {
  const GroupPtr& domain = f.domain();
  std::vector<Factor> image_factors;
  for (const Subgroup& h : lifted) {
    if (h.group->degree() != domain->degree() || !is_subset_of(*h.group, *domain))
      throw PreconditionError("lifted subgroup is not a subgroup of the domain");
    std::set<Perm> image;
    for (const Perm& p : h.group->elements()) image.insert(f.map(p));
    image_factors.push_back(
        subgroup_factor(make_subgroup(f.codomain(), {image.begin(), image.end()})));
  }
  MultiplicityReport image_report =
      multiplicity_report(FactorTuple{f.codomain(), std::move(image_factors)}, budget);
  if (!image_report.uniform)
    throw PreconditionError("the image tuple is not uniform over the codomain");

  unsigned __int128 multiplicity = *image_report.multiplicity;
  std::vector<Factor> factors;
  for (const Subgroup& h : lifted) {
    multiplicity *= intersection(h, Subgroup{h.parent, f.kernel().group}).order();
    factors.push_back(subgroup_factor(h));
  }
  factors.push_back(subgroup_factor(f.kernel()));

  Factorization out;
  out.tuple = FactorTuple{domain, std::move(factors)};
  out.multiplicity = static_cast<std::uint64_t>(multiplicity);
  out.construction = "lift";
  for (const Factor& fac : out.tuple.factors)
    if (fac.size() == domain->order()) out.improper = true;
  return out;
}

MultiplicityReport length_two(const Subgroup& h1, const Subgroup& h2,
                              std::uint64_t budget) {
  if (h1.parent != h2.parent)
    throw PreconditionError("length_two requires subgroups of the same parent");
  FactorTuple tuple{h1.parent, {subgroup_factor(h1), subgroup_factor(h2)}};
  MultiplicityReport report = multiplicity_report(tuple, budget);

  // Cross-check against the closed-form product size |H1||H2| / |H1 ∩ H2|.
  std::uint64_t meet = intersection(h1, h2).order();
  std::uint64_t product_size = h1.order() * h2.order() / meet;
  if (report.covered != product_size)
    throw Error("internal inconsistency: enumerated product size " +
                std::to_string(report.covered) + " != |H1||H2|/|H1∩H2| = " +
                std::to_string(product_size));
  if (report.covered == h1.parent->order() &&
      (!report.uniform || *report.multiplicity != meet))
    throw Error("internal inconsistency: covering pair with multiplicity != |H1∩H2|");
  return report;
}

}  // namespace ucf
