#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "ucf/certificate.hpp"
#include "ucf/rng.hpp"

namespace ucf {

// Draws group elements as h_1^{x_1} ... h_k^{x_k} with independent uniform
// exponents x_i in [0, |H_i|).  Requires a verified certificate whose
// factors all carry cyclic generators; when the claimed multiplicity is t,
// every element is hit by exactly t exponent tuples, so the output is
// exactly uniform on the group.
struct Sampler {
  Certificate certificate;
  std::uint64_t rng_seed = 0;
  std::vector<std::uint64_t> factor_orders;
  std::vector<Perm> generators;  // aligned with factor_orders
  // When set, exponents for this factor are drawn from [0, |H_i| - 1):
  // a deliberately broken variant for negative statistical tests.
  std::optional<std::size_t> biased_factor;
  Rng rng{0};
};

// Validates the certificate (verified, all factors cyclic) and seeds the
// exponent stream; throws PreconditionError otherwise.
Sampler make_sampler(Certificate certificate, std::uint64_t seed);

// Same sampler with the exponent range for `factor` shortened by one; the
// factor must have order at least 2.  The stream restarts from the seed.
Sampler biased_variant(const Sampler& s, std::size_t factor);

// Draws `count` elements, advancing the sampler's stream.
std::vector<Perm> sample(Sampler& s, std::uint64_t count);

struct ExactDistribution {
  std::vector<std::uint64_t> counts;  // by canonical element index
  std::uint64_t total_tuples = 0;
  // Set when every element is hit the same number of times.
  std::optional<std::uint64_t> constant;
};

// Walks every factor-element tuple (prod |H_i| of them, bounded by
// `budget`) and counts hits per group element; the distribution is uniform
// exactly when the certificate's multiplicity claim holds.  Works for any
// factor kind, since the walk only needs each factor's element list.
ExactDistribution exact_distribution(const Certificate& cert,
                                     std::uint64_t budget = kDefaultTupleBudget);

// Same count table for the sampler's certificate (exponent tuples biject
// with element tuples factor-wise).
ExactDistribution exact_distribution(const Sampler& s,
                                     std::uint64_t budget = kDefaultTupleBudget);

struct AuditResult {
  double statistic = 0.0;
  std::uint64_t dof = 0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

// 99.9th-percentile chi-square critical value with `dof` degrees of freedom
// (Wilson-Hilferty cube approximation).
double chi_square_critical_999(std::uint64_t dof);

// Draws `trials` samples from a fresh stream at the sampler's seed and
// tests the empirical counts against the uniform distribution on the group
// (|G| - 1 degrees of freedom); passes below the 99.9th-percentile critical
// value.  Requires trials >= 10 * |G|; a one-element group passes
// degenerately.
AuditResult chi_square_audit(const Sampler& s, std::uint64_t trials);

nlohmann::json audit_to_json(const AuditResult& a);

}  // namespace ucf
