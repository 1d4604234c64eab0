#include "ucf/sample.hpp"

#include <cmath>

#include "ucf/errors.hpp"

namespace ucf {

namespace {

// powers[i][e] = h_i^e for e in [0, |H_i|); one multiplication per sample
// term instead of a pow call.
std::vector<std::vector<Perm>> power_tables(const Sampler& s) {
  std::vector<std::vector<Perm>> tables;
  tables.reserve(s.generators.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    std::vector<Perm> row;
    row.reserve(s.factor_orders[i]);
    Perm acc = Perm::identity(s.generators[i].degree());
    for (std::uint64_t e = 0; e < s.factor_orders[i]; ++e) {
      row.push_back(acc);
      acc = acc * s.generators[i];
    }
    tables.push_back(std::move(row));
  }
  return tables;
}

}  // namespace

Sampler make_sampler(Certificate certificate, std::uint64_t seed) {
  if (!certificate.verified) {
    throw PreconditionError("make_sampler: certificate is not verified");
  }
  Sampler s;
  for (const Factor& f : certificate.tuple.factors) {
    if (!f.cyclic_generator) {
      throw PreconditionError("make_sampler: factor without a cyclic generator");
    }
    s.generators.push_back(*f.cyclic_generator);
    s.factor_orders.push_back(f.size());
  }
  s.certificate = std::move(certificate);
  s.rng_seed = seed;
  s.rng = Rng(seed);
  return s;
}

Sampler biased_variant(const Sampler& s, std::size_t factor) {
  if (factor >= s.factor_orders.size()) {
    throw PreconditionError("biased_variant: factor index out of range");
  }
  if (s.factor_orders[factor] < 2) {
    throw PreconditionError("biased_variant: factor order must be at least 2");
  }
  Sampler out = s;
  out.biased_factor = factor;
  out.rng = Rng(out.rng_seed);
  return out;
}

std::vector<Perm> sample(Sampler& s, std::uint64_t count) {
  std::vector<std::vector<Perm>> tables = power_tables(s);
  const std::uint32_t degree = s.certificate.group->degree();
  std::vector<Perm> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    Perm acc = Perm::identity(degree);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::uint64_t range = s.factor_orders[i];
      if (s.biased_factor && *s.biased_factor == i) range -= 1;
      acc = acc * tables[i][s.rng.uniform_below(range)];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

ExactDistribution exact_distribution(const Certificate& cert, std::uint64_t budget) {
  const GroupPtr& g = cert.group;
  ExactDistribution dist;
  dist.total_tuples = cert.tuple.order_product(budget);
  dist.counts.assign(g->order(), 0);

  const std::vector<Factor>& factors = cert.tuple.factors;
  auto walk = [&](auto&& self, std::size_t depth, const Perm& acc) -> void {
    if (depth == factors.size()) {
      ++dist.counts[g->index_of(acc)];
      return;
    }
    for (const Perm& p : factors[depth].elements) self(self, depth + 1, acc * p);
  };
  walk(walk, 0, Perm::identity(g->degree()));

  bool constant = true;
  for (std::uint64_t c : dist.counts) constant = constant && c == dist.counts[0];
  if (constant && !dist.counts.empty()) dist.constant = dist.counts[0];
  return dist;
}

ExactDistribution exact_distribution(const Sampler& s, std::uint64_t budget) {
  return exact_distribution(s.certificate, budget);
}

double chi_square_critical_999(std::uint64_t dof) {
  // Wilson-Hilferty: chi2_q(k) ~ k * (1 - 2/(9k) + z_q * sqrt(2/(9k)))^3.
  const double z = 3.090232306167814;  // 99.9th percentile of the normal
  double k = static_cast<double>(dof);
  double u = 2.0 / (9.0 * k);
  double base = 1.0 - u + z * std::sqrt(u);
  return k * base * base * base;
}

AuditResult chi_square_audit(const Sampler& s, std::uint64_t trials) {
  const GroupPtr& g = s.certificate.group;
  const std::uint64_t n = g->order();
  if (trials < 10 * n) {
    throw PreconditionError("chi_square_audit: trials must be at least 10 * |G|");
  }
  AuditResult result;
  result.seed = s.rng_seed;
  result.trials = trials;
  if (n == 1) {  // one cell, zero degrees of freedom: nothing to test
    result.pass = true;
    return result;
  }
  result.dof = n - 1;

  Sampler fresh = s;
  fresh.rng = Rng(s.rng_seed);
  std::vector<std::uint64_t> counts(n, 0);
  for (const Perm& p : sample(fresh, trials)) ++counts[g->index_of(p)];

  const double expected = static_cast<double>(trials) / static_cast<double>(n);
  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  result.statistic = statistic;
  result.pass = statistic < chi_square_critical_999(result.dof);
  return result;
}

nlohmann::json audit_to_json(const AuditResult& a) {
  return nlohmann::json{
      {"statistic", a.statistic}, {"dof", a.dof},       {"pass", a.pass},
      {"seed", a.seed},           {"trials", a.trials},
  };
}

}  // namespace ucf
