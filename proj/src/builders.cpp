#include "ucf/builders.hpp"

#include <algorithm>
#include <cctype>

#include "ucf/errors.hpp"
#include "ucf/sylow.hpp"

namespace ucf {

namespace {

Perm cycle(std::uint32_t degree, const std::vector<std::uint32_t>& points1) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  for (std::size_t k = 0; k < points1.size(); ++k)
    img[points1[k] - 1] = points1[(k + 1) % points1.size()] - 1;
  return Perm(std::move(img));
}

GroupPtr trivial_group(std::uint32_t degree, std::string name) {
  return make_group(degree, {Perm(degree)}, std::move(name));
}

}  // namespace

GroupPtr symmetric_group(std::uint32_t n) {
  if (n < 1) throw PreconditionError("symmetric_group requires n >= 1");
  if (n == 1) return trivial_group(1, "S1");
  std::vector<std::uint32_t> full(n);
  for (std::uint32_t i = 0; i < n; ++i) full[i] = i + 1;
  return make_group(n, {cycle(n, {1, 2}), cycle(n, full)}, "S" + std::to_string(n));
}

GroupPtr alternating_group(std::uint32_t n) {
  if (n < 1) throw PreconditionError("alternating_group requires n >= 1");
  if (n <= 2) return trivial_group(n, "A" + std::to_string(n));
  std::vector<Perm> gens;
  for (std::uint32_t i = 1; i + 2 <= n; ++i) gens.push_back(cycle(n, {i, i + 1, i + 2}));
  return make_group(n, std::move(gens), "A" + std::to_string(n));
}

GroupPtr cyclic_group(std::uint32_t n) {
  if (n < 1) throw PreconditionError("cyclic_group requires n >= 1");
  if (n == 1) return trivial_group(1, "C1");
  std::vector<std::uint32_t> full(n);
  for (std::uint32_t i = 0; i < n; ++i) full[i] = i + 1;
  return make_group(n, {cycle(n, full)}, "C" + std::to_string(n));
}

GroupPtr dihedral_group(std::uint32_t n) {
  if (n < 3) throw PreconditionError("dihedral_group requires n >= 3");
  std::vector<std::uint32_t> rot(n);
  for (std::uint32_t i = 0; i < n; ++i) rot[i] = i + 1;
  // Reflection i -> n+1-i.
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = n - 1 - i;
  return make_group(n, {cycle(n, rot), Perm(std::move(img))},
                    "D" + std::to_string(2 * n));
}

GroupPtr quaternion_group() {
  // Points 1..8 are the unit quaternions 1,-1,i,-i,j,-j,k,-k; generators act
  // by left multiplication by i and j.
  return make_group(8,
                    {cycle(8, {1, 3, 2, 4}) * cycle(8, {5, 7, 6, 8}),
                     cycle(8, {1, 5, 2, 6}) * cycle(8, {3, 8, 4, 7})},
                    "Q8");
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  std::uint32_t dg = g->degree(), dh = h->degree();
  std::vector<Perm> gens;
  for (const Perm& a : g->generators()) gens.push_back(a.extended_to(dg + dh));
  for (const Perm& b : h->generators()) {
    std::vector<std::uint32_t> img(dg + dh);
    for (std::uint32_t i = 0; i < dg; ++i) img[i] = i;
    for (std::uint32_t i = 0; i < dh; ++i) img[dg + i] = dg + b.apply(i);
    gens.push_back(Perm(std::move(img)));
  }
  std::string name;
  if (!g->name().empty() && !h->name().empty()) name = g->name() + "x" + h->name();
  return make_group(dg + dh, std::move(gens), std::move(name),
                    std::max(g->element_cap(), h->element_cap()));
}

GroupPtr psl2(std::uint32_t q) {
  if (!is_prime(q)) throw PreconditionError("psl2 requires a prime field size");
  std::uint32_t degree = q + 1;  // field values 0..q-1 then infinity
  const std::uint32_t inf = q;
  auto inv_mod = [&](std::uint32_t a) {  // inverse in F_q*, q prime
    std::uint32_t r = 1;
    for (std::uint32_t e = q - 2; e > 0; e >>= 1) {
      if (e & 1) r = static_cast<std::uint64_t>(r) * a % q;
      a = static_cast<std::uint64_t>(a) * a % q;
    }
    return r;
  };
  // z -> z + 1 and z -> -1/z generate PSL(2, q).
  std::vector<std::uint32_t> shift(degree);
  for (std::uint32_t z = 0; z < q; ++z) shift[z] = (z + 1) % q;
  shift[inf] = inf;
  std::vector<std::uint32_t> flip(degree);
  flip[0] = inf;
  flip[inf] = 0;
  for (std::uint32_t z = 1; z < q; ++z) flip[z] = (q - inv_mod(z)) % q;
  return make_group(degree, {Perm(std::move(shift)), Perm(std::move(flip))},
                    "PSL(2," + std::to_string(q) + ")");
}

namespace {

GroupPtr named_atom(const std::string& name, std::uint64_t cap) {
  auto require_number = [&](std::size_t from) -> std::uint32_t {
    if (from >= name.size())
      throw ParseError("group name \"" + name + "\" is missing a number");
    for (std::size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw ParseError("group name \"" + name + "\" is not recognized");
    return static_cast<std::uint32_t>(std::stoul(name.substr(from)));
  };

  GroupPtr out;
  if (name == "Q8") {
    out = quaternion_group();
  } else if (name.rfind("PSL(2,", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(6, name.size() - 7);
    for (char c : inner)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("group name \"" + name + "\" is not recognized");
    out = psl2(static_cast<std::uint32_t>(std::stoul(inner)));
  } else if (name.size() >= 2 && name[0] == 'S') {
    out = symmetric_group(require_number(1));
  } else if (name.size() >= 2 && name[0] == 'A') {
    out = alternating_group(require_number(1));
  } else if (name.size() >= 2 && name[0] == 'C') {
    out = cyclic_group(require_number(1));
  } else if (name.size() >= 2 && name[0] == 'D') {
    std::uint32_t order = require_number(1);
    if (order % 2 != 0 || order < 6)
      throw ParseError("dihedral name D<order> needs an even order >= 6, got \"" +
                       name + "\"");
    out = dihedral_group(order / 2);
  } else {
    throw ParseError("group name \"" + name + "\" is not recognized");
  }
  if (cap != out->element_cap())
    out = make_group(out->degree(), out->generators(), out->name(), cap);
  return out;
}

}  // namespace

GroupPtr named_group(const std::string& name, std::uint64_t element_cap) {
  // Split on 'x' outside parentheses to allow products such as A5xC6.
  std::vector<std::string> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (name[i] == 'x' && depth == 0) {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(name.substr(start));
  if (parts.empty() || parts.front().empty())
    throw ParseError("empty group name");
  GroupPtr out = named_atom(parts.front(), element_cap);
  for (std::size_t i = 1; i < parts.size(); ++i)
    out = direct_product(out, named_atom(parts[i], element_cap));
  return out;
}

}  // namespace ucf
