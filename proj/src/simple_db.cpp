#include "ucf/simple_db.hpp"

#include <fstream>
#include <map>
#include <utility>
#include <vector>

#include "ucf/builders.hpp"
#include "ucf/construct.hpp"
#include "ucf/errors.hpp"
#include "ucf/hom.hpp"

namespace ucf {

namespace {

FactorTuple self_tuple(const Factor& f) { return FactorTuple{f.group, {f}}; }

Certificate certify_tuple(const GroupPtr& g, std::vector<Factor> factors,
                          std::uint64_t multiplicity, const std::string& note) {
  Factorization fz;
  fz.tuple = FactorTuple{g, std::move(factors)};
  fz.multiplicity = multiplicity;
  fz.construction = note;
  return make_certificate(fz);
}

}  // namespace

std::string group_fingerprint(const PermGroup& g) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const Perm& x : g.elements()) ++histogram[x.order()];
  std::string s = std::to_string(g.order()) + "|";
  bool first = true;
  for (const auto& [order, count] : histogram) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(order) + ":" + std::to_string(count);
  }
  return s;
}

void SimpleFactorizationDB::add(const Certificate& cert) {
  Certificate checked = reverify(cert);
  if (!checked.verified)
    throw DbError("certificate failed re-verification; refusing to store it");
  std::string key = group_fingerprint(*checked.group);
  if (entries_.contains(key))
    throw DbError("duplicate database entry for fingerprint " + key);
  entries_.emplace(std::move(key), std::move(checked));
}

SimpleFactorizationDB SimpleFactorizationDB::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DbError("cannot open database file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DbError("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw DbError("database file " + path + " has no \"entries\" array");
  SimpleFactorizationDB db;
  for (const auto& entry : j.at("entries")) {
    if (!entry.contains("certificate"))
      throw DbError("database entry without a certificate");
    Certificate cert = certificate_from_json(entry.at("certificate"));
    if (entry.contains("fingerprint") &&
        entry.at("fingerprint").get<std::string>() != group_fingerprint(*cert.group))
      throw DbError("database entry fingerprint does not match its group");
    db.add(cert);
  }
  return db;
}

void SimpleFactorizationDB::save(const std::string& path) const {
  nlohmann::json j;
  auto entries = nlohmann::json::array();
  for (const auto& [fingerprint, cert] : entries_) {
    nlohmann::json entry;
    entry["fingerprint"] = fingerprint;
    entry["certificate"] = certificate_to_json(cert);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

bool SimpleFactorizationDB::contains_fingerprint(const std::string& fingerprint) const {
  return entries_.contains(fingerprint);
}

std::optional<Factorization> SimpleFactorizationDB::lookup(const GroupPtr& g) const {
  auto it = entries_.find(group_fingerprint(*g));
  if (it == entries_.end()) return std::nullopt;
  const Certificate& entry = it->second;
  if (entry.group->degree() > g->degree())
    throw DbError("database entry acts on more points than the target group");

  Factorization out;
  out.tuple.parent = g;
  for (const Factor& f : entry.tuple.factors) {
    std::vector<Perm> gens;
    for (const Perm& p : f.generators) {
      Perm padded = p.extended_to(g->degree());
      if (!g->contains(padded))
        throw DbError("database entry does not embed into the target group: " +
                      format_cycles(padded) + " is missing");
      gens.push_back(std::move(padded));
    }
    out.tuple.factors.push_back(subgroup_factor(make_subgroup(g, std::move(gens))));
  }
  out.multiplicity = entry.multiplicity;
  out.construction = "db";

  MultiplicityReport check = multiplicity_report(out.tuple);
  if (!check.uniform || *check.multiplicity != out.multiplicity)
    throw DbError("transplanted database entry failed re-verification");
  return out;
}

const SimpleFactorizationDB& builtin_simple_db() {
  static const SimpleFactorizationDB db = [] {
    SimpleFactorizationDB built;

    // Alternating group on five points: a Sylow tuple in the one ordering
    // that multiplies exactly.
    {
      GroupPtr a5 = alternating_group(5);
      Subgroup rectangle = make_subgroup(
          a5, {parse_cycles("(1,2)(3,4)", 5), parse_cycles("(1,3)(2,4)", 5)});
      Subgroup three = make_subgroup(a5, {parse_cycles("(1,2,3)", 5)});
      Subgroup five = make_subgroup(a5, {parse_cycles("(1,2,3,4,5)", 5)});
      built.add(certify_tuple(
          a5,
          {subgroup_factor(rectangle), subgroup_factor(three), subgroup_factor(five)},
          1, "sylow-tuple"));
    }

    // Alternating group on six points: a point stabilizer against an
    // order-36 complement-like partner, multiplicity 6.
    {
      GroupPtr a6 = alternating_group(6);
      Subgroup stab = stabilizer(a6, 6);
      Subgroup partner = make_subgroup(
          a6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)", 6),
               parse_cycles("(1,4,2,5)(3,6)", 6)});
      built.add(certify_tuple(a6, {subgroup_factor(stab), subgroup_factor(partner)},
                              6, "pair"));
    }

    // Simple group of order 168 on eight points: the affine-like subgroup
    // of order 21 against a Sylow 2-subgroup; coprime orders make the pair
    // exact.
    {
      GroupPtr g = psl2(7);
      Subgroup affine = make_subgroup(
          g, {parse_cycles("(1,2,3,4,5,6,7)", 8), parse_cycles("(2,3,5)(4,7,6)", 8)});
      Subgroup sylow2 = make_subgroup(
          g, {parse_cycles("(1,4,2,3)(5,8,7,6)", 8),
              parse_cycles("(1,5)(2,7)(3,8)(4,6)", 8)});
      built.add(certify_tuple(g, {subgroup_factor(affine), subgroup_factor(sylow2)},
                              1, "pair"));
    }

    return built;
  }();
  return db;
}

Factorization simple_reduction_ucf(GroupPtr g, const SimpleFactorizationDB& db) {
  if (g->order() == 1) {
    Factorization out;
    out.tuple = FactorTuple{g, {subgroup_factor(Subgroup{g, g})}};
    out.multiplicity = 1;
    out.construction = "simple-reduction";
    out.improper = true;
    return out;
  }

  if (cyclic_generator_of(g)) {
    Factorization out = cyclic_crt(g);
    out.construction = "simple-reduction";
    return out;
  }

  if (is_simple(g)) {
    std::optional<Factorization> hit = db.lookup(g);
    if (!hit)
      throw DbError("no database entry for simple group with fingerprint " +
                    group_fingerprint(*g));
    std::vector<FactorTuple> inners;
    bool fallback = false;
    for (const Factor& f : hit->tuple.factors) {
      if (f.cyclic_generator) {
        inners.push_back(self_tuple(f));
      } else {
        Factorization sub = simple_reduction_ucf(f.group, db);
        fallback = fallback || sub.fallback;
        inners.push_back(sub.tuple);
      }
    }
    Factorization out = refine(hit->tuple, inners);
    out.construction = "simple-reduction";
    out.fallback = fallback;
    return out;
  }

  // Composite and non-cyclic: descend through a largest maximal normal
  // subgroup, factoring the quotient and the subgroup separately.
  Subgroup normal = maximal_normal_subgroups(g).front();
  Homomorphism onto_quotient = quotient_action(g, normal);
  Factorization quotient = simple_reduction_ucf(onto_quotient.codomain(), db);
  std::vector<Subgroup> lifted;
  for (const Factor& f : quotient.tuple.factors) {
    if (!f.cyclic_generator)
      throw Error("internal inconsistency: reduction produced a non-cyclic factor");
    lifted.push_back(
        make_subgroup(g, {onto_quotient.section(*f.cyclic_generator)}));
  }
  Factorization top = lift_through_hom(onto_quotient, lifted);
  Factorization inner = simple_reduction_ucf(normal.group, db);
  std::vector<FactorTuple> inners;
  for (std::size_t i = 0; i + 1 < top.tuple.factors.size(); ++i)
    inners.push_back(self_tuple(top.tuple.factors[i]));
  inners.push_back(inner.tuple);
  Factorization out = refine(top.tuple, inners);
  out.construction = "simple-reduction";
  out.fallback = quotient.fallback || inner.fallback;
  return out;
}

Factorization simple_reduction_ucf(GroupPtr g) {
  return simple_reduction_ucf(std::move(g), builtin_simple_db());
}

}  // namespace ucf
