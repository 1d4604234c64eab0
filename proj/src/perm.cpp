#include "ucf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ucf/errors.hpp"

namespace ucf {

Perm::Perm(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("image table is not a permutation");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm out(degree());
  out.images_ = std::move(inv);
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw PreconditionError("cannot compose permutations of degrees " +
                            std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
  Perm out(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x)
    out.images_[x] = a.images_[b.images_[x]];
  return out;
}

Perm Perm::pow(std::int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Perm acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

bool Perm::is_even() const {
  std::uint32_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<std::uint32_t>(c.size()) - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<std::uint32_t>> Perm::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<std::uint32_t> cycle;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Perm Perm::extended_to(std::uint32_t degree) const {
  if (degree < this->degree())
    throw PreconditionError("cannot extend a permutation to a smaller degree");
  std::vector<std::uint32_t> img(images_);
  img.reserve(degree);
  for (std::uint32_t i = this->degree(); i < degree; ++i) img.push_back(i);
  return Perm(std::move(img));
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw ParseError("bad cycle notation \"" + std::string(text) + "\": " + why);
}

}  // namespace

Perm parse_cycles(std::string_view text, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };

  skip_ws();
  if (i == text.size()) parse_fail(text, "empty input");
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') parse_fail(text, std::string("expected '(' at \"") + text[i] + "\"");
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) parse_fail(text, std::string("expected a point at \"") + text[i] + "\"");
      std::uint64_t point = std::stoull(std::string(text.substr(start, i - start)));
      if (point < 1 || point > degree)
        parse_fail(text, "point " + std::to_string(point) + " outside [1, " +
                             std::to_string(degree) + "]");
      std::uint32_t p0 = static_cast<std::uint32_t>(point - 1);
      if (used[p0])
        parse_fail(text, "point " + std::to_string(point) + " appears twice");
      used[p0] = true;
      cycle.push_back(p0);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
        if (i < text.size() && text[i] == ')') parse_fail(text, "trailing comma");
      }
    }
    if (i == text.size()) parse_fail(text, "unterminated cycle");
    ++i;  // ')'
    saw_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!saw_cycle) parse_fail(text, "no cycles present");
  return Perm(std::move(images));
}

std::string format_cycles(const Perm& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ',';
      out << c[k] + 1;
    }
    out << ')';
  }
  return out.str();
}

}  // namespace ucf
