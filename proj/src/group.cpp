#include "ucf/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ucf/errors.hpp"

namespace ucf {

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators,
                     std::string name, std::uint64_t element_cap)
    : degree_(degree),
      generators_(std::move(generators)),
      name_(std::move(name)),
      element_cap_(element_cap),
      identity_(degree) {
  if (generators_.empty())
    throw PreconditionError("a group needs at least one generator (use the identity)");
  for (const Perm& g : generators_)
    if (g.degree() != degree_)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " does not match group degree " + std::to_string(degree_));
}

void PermGroup::ensure_enumerated() const {
  // On failure the caches stay empty and the next call starts over, so a
  // thrown CapExceededError leaves the group in a consistent state.
  std::call_once(enumerated_, [this] {
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
    elements.push_back(identity_);
    index.emplace(identity_, 0u);
    // Breadth-first closure: take stored elements in discovery order and
    // right-multiply by each generator.  Discovery order is the canonical
    // enumeration order.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const Perm& g : generators_) {
        Perm candidate = elements[i] * g;
        if (index.contains(candidate)) continue;
        if (elements.size() >= element_cap_)
          throw CapExceededError(
              "group enumeration exceeded the element cap of " +
                  std::to_string(element_cap_) + " (found " +
                  std::to_string(elements.size()) + " elements so far)",
              elements.size());
        index.emplace(candidate, static_cast<std::uint32_t>(elements.size()));
        elements.push_back(std::move(candidate));
      }
    }
    elements_ = std::move(elements);
    index_ = std::move(index);
  });
}

const std::vector<Perm>& PermGroup::elements() const {
  ensure_enumerated();
  return elements_;
}

bool PermGroup::contains(const Perm& p) const {
  ensure_enumerated();
  return index_.contains(p);
}

std::uint32_t PermGroup::index_of(const Perm& p) const {
  ensure_enumerated();
  auto it = index_.find(p);
  if (it == index_.end())
    throw PreconditionError("element " + format_cycles(p) + " is not in the group");
  return it->second;
}

std::optional<std::uint32_t> PermGroup::try_index_of(const Perm& p) const {
  ensure_enumerated();
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupPtr make_group(std::uint32_t degree, std::vector<Perm> generators,
                    std::string name, std::uint64_t element_cap) {
  return std::make_shared<PermGroup>(degree, std::move(generators), std::move(name),
                                     element_cap);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<Perm> generators,
                       std::string name) {
  if (generators.empty()) generators.push_back(parent->identity());
  auto group = make_group(parent->degree(), std::move(generators), std::move(name),
                          parent->element_cap());
  return Subgroup{std::move(parent), std::move(group)};
}

bool is_subset_of(const PermGroup& inner, const PermGroup& outer) {
  if (inner.degree() != outer.degree()) return false;
  for (const Perm& p : inner.elements())
    if (!outer.contains(p)) return false;
  return true;
}

Subgroup cyclic(GroupPtr parent, const Perm& a) {
  if (a.degree() != parent->degree())
    throw PreconditionError("cyclic generator degree does not match the parent group");
  if (!parent->contains(a))
    throw PreconditionError("cyclic generator " + format_cycles(a) +
                            " is not in the parent group");
  return make_subgroup(std::move(parent), {a});
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent)
    throw PreconditionError("intersection requires subgroups of the same parent");
  const PermGroup& small = h.order() <= k.order() ? *h.group : *k.group;
  const PermGroup& large = h.order() <= k.order() ? *k.group : *h.group;
  std::vector<Perm> common;
  for (const Perm& p : small.elements())
    if (large.contains(p)) common.push_back(p);
  return make_subgroup(h.parent, std::move(common));
}

Subgroup normal_closure(GroupPtr g, const std::vector<Perm>& seed) {
  // Grow a generating set: whenever conjugating a current generator by a
  // group generator leaves the closure, adjoin the conjugate and re-close.
  std::vector<Perm> gens = seed;
  if (gens.empty()) gens.push_back(g->identity());
  auto closure = make_group(g->degree(), gens, "", g->element_cap());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& t : g->generators()) {
      Perm ti = t.inverse();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm conj = t * gens[i] * ti;
        if (!closure->contains(conj)) {
          gens.push_back(std::move(conj));
          closure = make_group(g->degree(), gens, "", g->element_cap());
          changed = true;
        }
      }
    }
  }
  return Subgroup{std::move(g), std::move(closure)};
}

Subgroup derived_subgroup(GroupPtr g) {
  std::vector<Perm> commutators;
  for (const Perm& a : g->generators()) {
    for (const Perm& b : g->generators()) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  // The commutator subgroup is the normal closure of the generator
  // commutators.
  return normal_closure(std::move(g), commutators);
}

std::vector<Subgroup> derived_series(GroupPtr g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup{g, g});
  for (;;) {
    const Subgroup& current = series.back();
    Subgroup next = derived_subgroup(current.group);
    if (next.group->order() == current.group->order()) break;  // stabilized
    series.push_back(Subgroup{g, next.group});
    if (series.back().group->order() == 1) break;
  }
  return series;
}

bool is_solvable(GroupPtr g) {
  return derived_series(std::move(g)).back().group->order() == 1;
}

Subgroup stabilizer(GroupPtr g, std::uint32_t point) {
  if (point < 1 || point > g->degree())
    throw PreconditionError("stabilizer point " + std::to_string(point) +
                            " outside [1, " + std::to_string(g->degree()) + "]");
  std::uint32_t p0 = point - 1;
  std::vector<Perm> fixed;
  for (const Perm& e : g->elements())
    if (e.apply(p0) == p0) fixed.push_back(e);
  return make_subgroup(std::move(g), std::move(fixed));
}

std::vector<std::vector<Perm>> conjugacy_classes(GroupPtr g) {
  const auto& els = g->elements();
  std::vector<bool> assigned(els.size(), false);
  std::vector<std::vector<Perm>> classes;
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (assigned[i]) continue;
    // Orbit of els[i] under conjugation by generators.
    std::vector<std::uint32_t> orbit{i};
    assigned[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& t : g->generators()) {
        Perm conj = t * els[orbit[k]] * t.inverse();
        std::uint32_t j = g->index_of(conj);
        if (!assigned[j]) {
          assigned[j] = true;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Perm> cls;
    cls.reserve(orbit.size());
    for (std::uint32_t j : orbit) cls.push_back(els[j]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// Sorted canonical element indices of a subgroup, used as a set key.
std::vector<std::uint32_t> index_set(const PermGroup& parent, const PermGroup& sub) {
  std::vector<std::uint32_t> out;
  out.reserve(sub.elements().size());
  for (const Perm& p : sub.elements()) out.push_back(parent.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> maximal_normal_subgroups(GroupPtr g) {
  // Every normal subgroup is the join of the subgroups generated by the
  // conjugacy classes it contains, so closing the single-class subgroups
  // under pairwise join enumerates all of them.
  auto classes = conjugacy_classes(g);
  std::map<std::vector<std::uint32_t>, GroupPtr> normals;
  for (const auto& cls : classes) {
    auto sub = make_group(g->degree(), cls, "", g->element_cap());
    normals.emplace(index_set(*g, *sub), sub);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupPtr> current;
    current.reserve(normals.size());
    for (const auto& [key, sub] : normals) current.push_back(sub);
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<Perm> gens = current[a]->generators();
        const auto& bg = current[b]->generators();
        gens.insert(gens.end(), bg.begin(), bg.end());
        auto join = make_group(g->degree(), std::move(gens), "", g->element_cap());
        auto key = index_set(*g, *join);
        if (normals.emplace(std::move(key), join).second) grew = true;
      }
    }
  }

  // Keep proper subgroups that are maximal among the normal ones.
  std::vector<std::pair<std::vector<std::uint32_t>, GroupPtr>> proper;
  for (const auto& [key, sub] : normals)
    if (sub->order() < g->order()) proper.emplace_back(key, sub);
  std::vector<Subgroup> maximal;
  for (const auto& [key, sub] : proper) {
    bool dominated = false;
    for (const auto& [okey, other] : proper) {
      if (other->order() <= sub->order()) continue;
      if (std::includes(okey.begin(), okey.end(), key.begin(), key.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(Subgroup{g, sub});
  }
  std::sort(maximal.begin(), maximal.end(), [&](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() > y.order();
    return index_set(*g, *x.group) < index_set(*g, *y.group);
  });
  return maximal;
}

bool is_simple(GroupPtr g) {
  if (g->order() == 1) return false;
  auto maximal = maximal_normal_subgroups(g);
  return maximal.size() == 1 && maximal.front().order() == 1;
}

bool is_abelian(GroupPtr g) {
  const auto& gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

std::optional<Perm> cyclic_generator_of(GroupPtr g) {
  std::uint64_t n = g->order();
  for (const Perm& p : g->elements())
    if (p.order() == n) return p;
  return std::nullopt;
}

}  // namespace ucf
