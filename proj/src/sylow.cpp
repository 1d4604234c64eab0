#include "ucf/sylow.hpp"

#include "ucf/errors.hpp"
#include "ucf/rng.hpp"

namespace ucf {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Extracts the p-element x^(m/p^k) from x, where m = ord(x) and p^k is the
// p-part of m; identity if p does not divide m.
Perm p_component(const Perm& x, std::uint64_t p) {
  std::uint64_t m = x.order();
  return x.pow(static_cast<std::int64_t>(m / p_part(m, p)));
}

}  // namespace

Subgroup sylow(GroupPtr g, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p))
    throw PreconditionError("sylow requires a prime, got " + std::to_string(p));
  std::uint64_t n = g->order();
  std::uint64_t target = p_part(n, p);
  if (target == 1)
    throw PreconditionError(std::to_string(p) + " does not divide the group order " +
                            std::to_string(n));
  if (target == n) return Subgroup{g, g};

  const auto& els = g->elements();
  // Mix the prime into the stream so sylow(g, 2) and sylow(g, 3) draw
  // independently even under the same seed.
  Rng rng(seed * 0x9E3779B97F4A7C15ull + p);
  auto random_element = [&] { return els[rng.uniform_below(els.size())]; };
  auto random_p_element = [&] {
    for (;;) {
      Perm y = p_component(random_element(), p);
      if (!y.is_identity()) return y;
    }
  };

  constexpr int kMaxRestarts = 64;
  constexpr int kStagnationLimit = 50;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::vector<Perm> gens{random_p_element()};
    auto current = make_group(g->degree(), gens, "", g->element_cap());
    int stale = 0;
    while (current->order() < target && stale < kStagnationLimit) {
      Perm t = random_element();
      Perm candidate = t * random_p_element() * t.inverse();
      if (current->contains(candidate)) {
        ++stale;
        continue;
      }
      std::vector<Perm> extended = gens;
      extended.push_back(candidate);
      auto grown = make_group(g->degree(), extended, "", g->element_cap());
      if (is_power_of(grown->order(), p)) {
        gens = std::move(extended);
        current = std::move(grown);
        stale = 0;
      } else {
        ++stale;
      }
    }
    if (current->order() == target) return Subgroup{std::move(g), std::move(current)};
  }
  throw SearchError("sylow growth for p=" + std::to_string(p) +
                    " stagnated past the retry budget");
}

}  // namespace ucf
