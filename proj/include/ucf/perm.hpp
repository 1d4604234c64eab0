#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ucf {

// A permutation of {0, ..., degree-1}, stored as an image table.
//
// Composition applies the right factor first: (a * b)(x) = a(b(x)).
// Textual I/O uses 1-indexed disjoint cycle notation, e.g. "(1,2,3)(4,5)";
// the identity is "()".
class Perm {
public:
  // Identity permutation of the given degree.
  explicit Perm(std::uint32_t degree);

  // From an image table; validates that `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::uint32_t degree) { return Perm(degree); }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t apply(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(std::int64_t k) const;

  // Order of the permutation: lcm of its cycle lengths.
  std::uint64_t order() const;

  // True for even permutations.
  bool is_even() const;

  // Nontrivial cycles (0-indexed), each starting at its smallest point,
  // listed in increasing order of that point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  // Pads with fixed points up to `degree` (which must be >= current degree).
  Perm extended_to(std::uint32_t degree) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Parses 1-indexed cycle notation.  Every point must lie in [1, degree] and
// may appear at most once across all cycles; violations raise ParseError
// naming the offending token.
Perm parse_cycles(std::string_view text, std::uint32_t degree);

// Formats as 1-indexed disjoint cycles; identity formats as "()".
std::string format_cycles(const Perm& p);

}  // namespace ucf
