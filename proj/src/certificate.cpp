#include "ucf/certificate.hpp"

#include <filesystem>
#include <fstream>
#include <utility>

#include "ucf/builders.hpp"
#include "ucf/errors.hpp"

namespace ucf {

namespace {

const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key \"") + key + '"');
  return j.at(key);
}

nlohmann::json factor_to_json(const Factor& f) {
  nlohmann::json j;
  if (f.kind == FactorKind::Subgroup) {
    j["kind"] = "subgroup";
    auto gens = nlohmann::json::array();
    if (f.cyclic_generator) {
      gens.push_back(format_cycles(*f.cyclic_generator));
    } else {
      for (const Perm& g : f.generators) gens.push_back(format_cycles(g));
    }
    j["generators"] = std::move(gens);
  } else {
    j["kind"] = "subset";
    auto elems = nlohmann::json::array();
    for (const Perm& e : f.elements) elems.push_back(format_cycles(e));
    j["elements"] = std::move(elems);
  }
  return j;
}

Factor factor_from_json(const nlohmann::json& j, const GroupPtr& parent) {
  const std::string kind = require_key(j, "kind").get<std::string>();
  if (kind == "subgroup") {
    std::vector<Perm> gens;
    for (const auto& s : require_key(j, "generators"))
      gens.push_back(parse_cycles(s.get<std::string>(), parent->degree()));
    return subgroup_factor(make_subgroup(parent, std::move(gens)));
  }
  if (kind == "subset") {
    std::vector<Perm> elems;
    for (const auto& s : require_key(j, "elements"))
      elems.push_back(parse_cycles(s.get<std::string>(), parent->degree()));
    return subset_factor(std::move(elems));
  }
  throw ParseError("unknown factor kind \"" + kind + '"');
}

nlohmann::json flags_to_json(const ClassFlags& f) {
  return nlohmann::json{{"UF", f.uf},     {"UGF", f.ugf},   {"UCF", f.ucf},
                        {"LS", f.ls},     {"LGS", f.lgs},   {"LCS", f.lcs},
                        {"MLS", f.mls},   {"MLGS", f.mlgs}, {"MLCS", f.mlcs},
                        {"size", f.size}, {"lower_bound", f.lower_bound}};
}

ClassFlags flags_from_json(const nlohmann::json& j) {
  ClassFlags f;
  f.uf = j.value("UF", false);
  f.ugf = j.value("UGF", false);
  f.ucf = j.value("UCF", false);
  f.ls = j.value("LS", false);
  f.lgs = j.value("LGS", false);
  f.lcs = j.value("LCS", false);
  f.mls = j.value("MLS", false);
  f.mlgs = j.value("MLGS", false);
  f.mlcs = j.value("MLCS", false);
  f.size = j.value("size", std::uint64_t{0});
  f.lower_bound = j.value("lower_bound", std::uint64_t{0});
  return f;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

nlohmann::json group_to_json(const PermGroup& g) {
  nlohmann::json j;
  j["degree"] = g.degree();
  auto gens = nlohmann::json::array();
  for (const Perm& p : g.generators()) gens.push_back(format_cycles(p));
  j["generators"] = std::move(gens);
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

GroupPtr group_from_json(const nlohmann::json& j) {
  try {
    const auto degree = require_key(j, "degree").get<std::uint32_t>();
    if (degree == 0) throw ParseError("group degree must be positive");
    std::vector<Perm> gens;
    for (const auto& s : require_key(j, "generators"))
      gens.push_back(parse_cycles(s.get<std::string>(), degree));
    return make_group(degree, std::move(gens), j.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group description: ") + e.what());
  }
}

GroupPtr load_group(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path))
    return group_from_json(read_json_file(name_or_path));
  try {
    return named_group(name_or_path);
  } catch (const ParseError&) {
    throw ParseError('"' + name_or_path +
                     "\" is neither a known group name nor a readable file");
  }
}

Certificate make_certificate(const Factorization& fz, std::uint64_t budget) {
  MultiplicityReport report = multiplicity_report(fz.tuple, budget);
  if (!report.uniform)
    throw PreconditionError(
        "tuple is not uniform: covered " + std::to_string(report.covered) +
        " of " + std::to_string(report.group_order) +
        " elements with counts in [" + std::to_string(report.min_count) + ", " +
        std::to_string(report.max_count) + "]");
  if (*report.multiplicity != fz.multiplicity)
    throw PreconditionError("claimed multiplicity " +
                            std::to_string(fz.multiplicity) +
                            " but counting gives " +
                            std::to_string(*report.multiplicity));
  Certificate cert;
  cert.group = fz.tuple.parent;
  cert.tuple = fz.tuple;
  cert.multiplicity = fz.multiplicity;
  cert.flags = classify_with_report(fz.tuple, report);
  cert.verified = true;
  cert.construction = fz.construction;
  cert.fallback = fz.fallback;
  return cert;
}

Certificate reverify(Certificate cert, std::uint64_t budget) {
  MultiplicityReport report = multiplicity_report(cert.tuple, budget);
  cert.flags = classify_with_report(cert.tuple, report);
  cert.verified = report.uniform && report.multiplicity == cert.multiplicity;
  return cert;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["group"] = group_to_json(*cert.group);
  auto factors = nlohmann::json::array();
  for (const Factor& f : cert.tuple.factors) factors.push_back(factor_to_json(f));
  j["factors"] = std::move(factors);
  j["claimed_multiplicity"] = cert.multiplicity;
  j["flags"] = flags_to_json(cert.flags);
  j["verified"] = cert.verified;
  if (!cert.construction.empty()) j["construction"] = cert.construction;
  if (cert.fallback) j["fallback"] = true;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate cert;
    cert.group = group_from_json(require_key(j, "group"));
    cert.tuple.parent = cert.group;
    for (const auto& f : require_key(j, "factors"))
      cert.tuple.factors.push_back(factor_from_json(f, cert.group));
    cert.multiplicity = require_key(j, "claimed_multiplicity").get<std::uint64_t>();
    if (j.contains("flags")) cert.flags = flags_from_json(j.at("flags"));
    cert.verified = j.value("verified", false);
    cert.construction = j.value("construction", std::string{});
    cert.fallback = j.value("fallback", false);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

Certificate load_certificate(const std::string& path) {
  return certificate_from_json(read_json_file(path));
}

void save_certificate(const Certificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << certificate_to_json(cert).dump(2) << '\n';
}

}  // namespace ucf
