#include "ucf/cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ucf/builders.hpp"
#include "ucf/certificate.hpp"
#include "ucf/classify.hpp"
#include "ucf/construct.hpp"
#include "ucf/errors.hpp"
#include "ucf/sample.hpp"
#include "ucf/search.hpp"
#include "ucf/simple_db.hpp"

namespace ucf {

namespace {

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes the artifact to the configured path, or to the summary stream when
// no path was given; stamps non-reproducible runs.
void emit_json(const CommandConfig& cfg, nlohmann::json j, std::ostream& out) {
  if (!cfg.reproducible) j["generated_at"] = timestamp_utc();
  if (cfg.output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw ParseError("cannot open output path: " + cfg.output);
    file << j.dump(2) << "\n";
    out << "wrote " << cfg.output << "\n";
  }
}

GroupPtr load_group_with_cap(const CommandConfig& cfg) {
  if (cfg.group.empty()) {
    throw PreconditionError("missing --group (builder name like S5/A6/D12/C30/Q8/"
                            "PSL(2,7), products like A4xC2, or a JSON file path)");
  }
  GroupPtr g = load_group(cfg.group);
  std::uint64_t cap = cfg.cap;
  if (cap == 0) {
    if (const char* env = std::getenv(kElementCapEnv)) {
      cap = std::strtoull(env, nullptr, 10);
    }
  }
  if (cap != 0) {
    g = make_group(g->degree(), g->generators(), g->name(), cap);
  }
  return g;
}

std::vector<std::uint64_t> parse_sylow_factors(const std::string& text) {
  const std::string prefix = "sylow:";
  if (text.rfind(prefix, 0) != 0) {
    throw ParseError("--factors expects an ordered Sylow prime list like "
                     "sylow:2,5,3; got: " + text);
  }
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text.substr(prefix.size()));
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    std::size_t pos = 0;
    std::uint64_t p = std::stoull(part, &pos);
    if (pos != part.size() || !is_prime(p)) {
      throw ParseError("--factors: '" + part + "' is not a prime");
    }
    primes.push_back(p);
  }
  if (primes.empty()) throw ParseError("--factors: empty prime list");
  return primes;
}

nlohmann::json flags_summary(const Certificate& cert) {
  return nlohmann::json{
      {"UF", cert.flags.uf},     {"UGF", cert.flags.ugf},
      {"UCF", cert.flags.ucf},   {"LS", cert.flags.ls},
      {"LGS", cert.flags.lgs},   {"LCS", cert.flags.lcs},
      {"MLS", cert.flags.mls},   {"MLGS", cert.flags.mlgs},
      {"MLCS", cert.flags.mlcs}, {"size", cert.flags.size},
      {"lower_bound", cert.flags.lower_bound},
  };
}

std::vector<std::uint64_t> factor_orders_of(const FactorTuple& tuple) {
  std::vector<std::uint64_t> orders;
  for (const Factor& f : tuple.factors) orders.push_back(f.size());
  return orders;
}

int run_construct(const CommandConfig& cfg, std::ostream& out) {
  GroupPtr g = load_group_with_cap(cfg);
  const std::string& algo = cfg.algorithm;
  Factorization fz{};
  if (algo == "crt") {
    fz = cyclic_crt(g);
  } else if (algo == "abelian") {
    fz = abelian_ucf(g);
  } else if (algo == "solvable") {
    fz = solvable_ucf(g);
  } else if (algo == "alternating" || algo == "symmetric") {
    std::uint32_t n = g->degree();
    std::uint64_t expect = 1;
    for (std::uint32_t i = 2; i <= n; ++i) expect *= i;
    if (algo == "alternating") expect /= 2;
    if (g->order() != expect) {
      throw PreconditionError("--algorithm " + algo + " requires the full " + algo +
                              " group of the given degree");
    }
    fz = algo == "alternating" ? alternating_ucf(n) : symmetric_ucf(n);
    fz.tuple.parent = g;  // keep the caller's group object (same element set)
    for (Factor& f : fz.tuple.factors) {
      f.group = make_subgroup(g, f.group->generators()).group;
    }
  } else if (algo == "simple-reduction") {
    if (cfg.db.empty()) {
      fz = simple_reduction_ucf(g);
    } else {
      SimpleFactorizationDB db = SimpleFactorizationDB::load(cfg.db);
      fz = simple_reduction_ucf(g, db);
    }
  } else {
    throw PreconditionError("unknown --algorithm '" + algo +
                            "' (crt | abelian | solvable | alternating | "
                            "symmetric | simple-reduction)");
  }
  Certificate cert = make_certificate(fz);
  out << "group " << g->name() << " order " << g->order() << ": built tuple of "
      << cert.tuple.length() << " factors, multiplicity " << cert.multiplicity
      << (cert.fallback ? " (fallback path)" : "") << "\n";
  emit_json(cfg, certificate_to_json(cert), out);
  return kExitSuccess;
}

int run_verify(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.certificate.empty()) {
    Certificate cert = reverify(load_certificate(cfg.certificate));
    out << "certificate over " << cert.group->name() << ": "
        << (cert.verified ? "verified" : "FAILED verification") << ", claimed t="
        << cert.multiplicity << "\n";
    nlohmann::json j = certificate_to_json(cert);
    emit_json(cfg, std::move(j), out);
    return cert.verified ? kExitSuccess : kExitNegative;
  }
  GroupPtr g = load_group_with_cap(cfg);
  std::vector<std::uint64_t> primes = parse_sylow_factors(cfg.factors);
  FactorTuple tuple;
  tuple.parent = g;
  for (std::uint64_t p : primes) {
    tuple.factors.push_back(subgroup_factor(sylow(g, p, cfg.seed)));
  }
  MultiplicityReport report = multiplicity_report(tuple);
  nlohmann::json j{
      {"group", g->name()},
      {"order", g->order()},
      {"factors", factor_orders_of(tuple)},
      {"primes", primes},
      {"covered", report.covered},
      {"uniform", report.uniform},
  };
  if (report.multiplicity) {
    j["multiplicity"] = *report.multiplicity;
  } else {
    j["multiplicity"] = nullptr;
  }
  out << "group " << g->name() << ": Sylow tuple";
  for (std::uint64_t p : primes) out << " " << p;
  out << (report.uniform ? " is uniform, t=" + std::to_string(*report.multiplicity)
                         : " is not uniform (covered " +
                               std::to_string(report.covered) + " of " +
                               std::to_string(g->order()) + ")")
      << "\n";
  emit_json(cfg, std::move(j), out);
  return report.uniform ? kExitSuccess : kExitNegative;
}

int run_classify(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.certificate.empty()) {
    throw PreconditionError("classify requires --certificate");
  }
  Certificate cert = reverify(load_certificate(cfg.certificate));
  nlohmann::json j = flags_summary(cert);
  j["group"] = cert.group->name();
  j["verified"] = cert.verified;
  j["multiplicity"] = cert.multiplicity;
  out << "certificate over " << cert.group->name() << ":";
  for (auto& [key, value] : j.items()) {
    if (value.is_boolean() && value.get<bool>()) out << " " << key;
  }
  out << "\n";
  emit_json(cfg, std::move(j), out);
  return cert.verified ? kExitSuccess : kExitNegative;
}

int run_search(const CommandConfig& cfg, std::ostream& out) {
  GroupPtr g = load_group_with_cap(cfg);
  SearchResult res;
  if (cfg.algorithm.empty() || cfg.algorithm == "bounded") {
    res = find_ucf_bounded(g, cfg.max_len, cfg.budget);
  } else if (cfg.algorithm == "pairs") {
    res = find_length_two(g, cfg.budget);
  } else {
    throw PreconditionError("unknown search --algorithm '" + cfg.algorithm +
                            "' (bounded | pairs)");
  }
  nlohmann::json certs = nlohmann::json::array();
  for (const Certificate& c : res.certificates) {
    certs.push_back(certificate_to_json(c));
  }
  nlohmann::json j{
      {"group", g->name()},
      {"order", g->order()},
      {"complete", res.complete},
      {"count", res.certificates.size()},
      {"certificates", std::move(certs)},
  };
  out << "group " << g->name() << ": found " << res.certificates.size()
      << " uniform tuples" << (res.complete ? "" : " (search incomplete)") << "\n";
  emit_json(cfg, std::move(j), out);
  return res.certificates.empty() ? kExitNegative : kExitSuccess;
}

int run_sylow(const CommandConfig& cfg, std::ostream& out) {
  GroupPtr g = load_group_with_cap(cfg);
  SylowReport report = sylow_orderings_report(g, cfg.retries, cfg.seed);
  out << "group " << g->name() << ": type " << to_string(report.type) << " after "
      << report.choices_tested << " choice(s)\n";
  for (const OrderingResult& row : report.orderings) {
    out << "  ordering";
    for (std::uint64_t p : row.primes) out << " " << p;
    out << ": covered " << row.covered
        << (row.uniform ? ", t=" + std::to_string(*row.multiplicity)
                        : ", not uniform")
        << "\n";
  }
  emit_json(cfg, sylow_report_to_json(report), out);
  return kExitSuccess;
}

int run_sample(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.certificate.empty()) {
    throw PreconditionError("sample requires --certificate");
  }
  if (cfg.trials == 0) {
    throw PreconditionError("sample requires --trials (number of draws)");
  }
  Sampler s = make_sampler(load_certificate(cfg.certificate), cfg.seed);
  std::vector<Perm> draws = sample(s, cfg.trials);
  nlohmann::json elems = nlohmann::json::array();
  for (const Perm& p : draws) elems.push_back(format_cycles(p));
  nlohmann::json j{
      {"group", s.certificate.group->name()},
      {"seed", cfg.seed},
      {"count", draws.size()},
      {"elements", std::move(elems)},
  };
  out << "drew " << draws.size() << " elements from "
      << s.certificate.group->name() << " (seed " << cfg.seed << ")\n";
  emit_json(cfg, std::move(j), out);
  return kExitSuccess;
}

int run_audit(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.certificate.empty()) {
    throw PreconditionError("audit requires --certificate");
  }
  if (cfg.trials == 0) {
    throw PreconditionError("audit requires --trials (at least 10 * |G|)");
  }
  Sampler s = make_sampler(load_certificate(cfg.certificate), cfg.seed);
  AuditResult result = chi_square_audit(s, cfg.trials);
  out << "chi-square on " << s.certificate.group->name() << ": statistic "
      << result.statistic << " with " << result.dof << " dof -> "
      << (result.pass ? "pass" : "FAIL") << "\n";
  emit_json(cfg, audit_to_json(result), out);
  return result.pass ? kExitSuccess : kExitNegative;
}

}  // namespace

int run(const CommandConfig& config) {
  std::ostream& out = config.out ? *config.out : std::cout;
  try {
    if (config.subcommand == "construct") return run_construct(config, out);
    if (config.subcommand == "verify") return run_verify(config, out);
    if (config.subcommand == "classify") return run_classify(config, out);
    if (config.subcommand == "search") return run_search(config, out);
    if (config.subcommand == "sylow") return run_sylow(config, out);
    if (config.subcommand == "sample") return run_sample(config, out);
    if (config.subcommand == "audit") return run_audit(config, out);
    out << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitError;
  } catch (const BudgetExceededError& e) {
    out << "error: " << e.what()
        << " (hint: raise --budget, or use the sampler's statistical audit "
           "instead of the exact table)\n";
    return kExitError;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ucf
