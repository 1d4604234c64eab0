#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "ucf/builders.hpp"
#include "ucf/certificate.hpp"
#include "ucf/cli.hpp"
#include "ucf/construct.hpp"

using namespace ucf;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed when the test scope closes.
struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "ucf_cli_tests") {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_quiet(CommandConfig cfg, std::string* summary = nullptr) {
  std::ostringstream out;
  cfg.out = &out;
  int code = run(cfg);
  if (summary) *summary = out.str();
  return code;
}

}  // namespace

TEST_CASE("construct subcommand") {
  TempDir tmp;
  SUBCASE("builds, writes, and the artifact re-verifies") {
    CommandConfig cfg;
    cfg.subcommand = "construct";
    cfg.group = "S4";
    cfg.algorithm = "solvable";
    cfg.output = tmp.file("s4.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);

    nlohmann::json j = read_json(cfg.output);
    CHECK(j["verified"] == true);
    CHECK(j["claimed_multiplicity"] == 1);
    CHECK(j.count("generated_at") == 0);

    CommandConfig check;
    check.subcommand = "verify";
    check.certificate = cfg.output;
    check.output = tmp.file("recheck.json");
    CHECK(run_quiet(check) == kExitSuccess);
  }
  SUBCASE("timestamps appear unless suppressed") {
    CommandConfig cfg;
    cfg.subcommand = "construct";
    cfg.group = "C12";
    cfg.algorithm = "crt";
    cfg.output = tmp.file("c12.json");
    CHECK(run_quiet(cfg) == kExitSuccess);
    CHECK(read_json(cfg.output).count("generated_at") == 1);
  }
  SUBCASE("identical reproducible runs are byte-identical") {
    for (const char* name : {"one.json", "two.json"}) {
      CommandConfig cfg;
      cfg.subcommand = "construct";
      cfg.group = "A5";
      cfg.algorithm = "simple-reduction";
      cfg.output = tmp.file(name);
      cfg.reproducible = true;
      CHECK(run_quiet(cfg) == kExitSuccess);
    }
    CHECK(read_bytes(tmp.file("one.json")) == read_bytes(tmp.file("two.json")));
  }
  SUBCASE("errors are reported with exit code two") {
    CommandConfig cfg;
    cfg.subcommand = "construct";
    cfg.group = "NoSuchGroup";
    cfg.algorithm = "crt";
    std::string summary;
    CHECK(run_quiet(cfg, &summary) == kExitError);
    CHECK(summary.find("error:") != std::string::npos);

    cfg.group = "S4";
    cfg.algorithm = "alternating";  // S4 is not an alternating group
    CHECK(run_quiet(cfg) == kExitError);
    cfg.algorithm = "made-up";
    CHECK(run_quiet(cfg) == kExitError);
    cfg.algorithm = "solvable";
    cfg.group = "A5";  // not solvable
    CHECK(run_quiet(cfg) == kExitError);
  }
}

TEST_CASE("verify subcommand") {
  TempDir tmp;
  SUBCASE("ordering experiments exit by uniformity") {
    CommandConfig cfg;
    cfg.subcommand = "verify";
    cfg.group = "A5";
    cfg.factors = "sylow:2,5,3";
    cfg.output = tmp.file("bad.json");
    cfg.reproducible = true;
    std::string summary;
    CHECK(run_quiet(cfg, &summary) == kExitNegative);
    CHECK(summary.find("not uniform") != std::string::npos);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["uniform"] == false);
    CHECK(j["covered"] == 48);
    CHECK(j["multiplicity"].is_null());

    cfg.factors = "sylow:2,3,5";
    cfg.output = tmp.file("good.json");
    CHECK(run_quiet(cfg) == kExitSuccess);
    CHECK(read_json(cfg.output)["multiplicity"] == 1);
  }
  SUBCASE("a tampered certificate is a negative result, not an error") {
    std::string path = tmp.file("tampered.json");
    save_certificate(make_certificate(alternating_ucf(4)), path);
    nlohmann::json j = read_json(path);
    j["claimed_multiplicity"] = 5;
    std::ofstream(path) << j.dump(2);

    CommandConfig cfg;
    cfg.subcommand = "verify";
    cfg.certificate = path;
    cfg.output = tmp.file("tampered_out.json");
    CHECK(run_quiet(cfg) == kExitNegative);
    CHECK(read_json(cfg.output)["verified"] == false);
  }
  SUBCASE("malformed factor lists are errors") {
    CommandConfig cfg;
    cfg.subcommand = "verify";
    cfg.group = "S4";
    for (const char* bad : {"sylow:abc", "primes:2,3", "sylow:4", "sylow:"}) {
      cfg.factors = bad;
      CHECK(run_quiet(cfg) == kExitError);
    }
  }
}

TEST_CASE("classify subcommand") {
  TempDir tmp;
  SUBCASE("subset splitting of C4 is minimal but not group-built") {
    GroupPtr g = cyclic_group(4);
    Perm s = parse_cycles("(1,2,3,4)", 4);
    FactorTuple tuple;
    tuple.parent = g;
    tuple.factors.push_back(subset_factor({Perm::identity(4), s}));
    tuple.factors.push_back(subset_factor({Perm::identity(4), s.pow(2)}));
    std::string path = tmp.file("c4.json");
    save_certificate(make_certificate(Factorization{tuple, 1, "manual", false, false}),
                     path);

    CommandConfig cfg;
    cfg.subcommand = "classify";
    cfg.certificate = path;
    cfg.output = tmp.file("flags.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["MLS"] == true);
    CHECK(j["UGF"] == false);
    CHECK(j["UF"] == true);
    CHECK(j["LS"] == true);
  }
  SUBCASE("missing certificate argument is an error") {
    CommandConfig cfg;
    cfg.subcommand = "classify";
    CHECK(run_quiet(cfg) == kExitError);
  }
}

TEST_CASE("search and sylow subcommands") {
  TempDir tmp;
  SUBCASE("pair search on S3") {
    CommandConfig cfg;
    cfg.subcommand = "search";
    cfg.group = "S3";
    cfg.algorithm = "pairs";
    cfg.budget = 6;
    cfg.output = tmp.file("pairs.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["count"] == 3);
    CHECK(j["complete"] == true);
    CHECK(j["certificates"].size() == 3);
  }
  SUBCASE("bounded search that finds nothing proper exits negative") {
    CommandConfig cfg;
    cfg.subcommand = "search";
    cfg.group = "C7";
    cfg.max_len = 1;
    cfg.budget = 1;
    std::string summary;
    // The one length-one tuple is the whole group; it is still reported.
    CHECK(run_quiet(cfg, &summary) == kExitSuccess);

    cfg.group = "A5";  // no cyclic tuple of length one covers A5
    CHECK(run_quiet(cfg) == kExitNegative);
  }
  SUBCASE("ordering report lands type II for A5") {
    CommandConfig cfg;
    cfg.subcommand = "sylow";
    cfg.group = "A5";
    cfg.output = tmp.file("a5.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["type"] == "II");
    CHECK(j["orderings"].size() == 6);
  }
  SUBCASE("unknown search algorithm is an error") {
    CommandConfig cfg;
    cfg.subcommand = "search";
    cfg.group = "S3";
    cfg.algorithm = "exhaustive";
    CHECK(run_quiet(cfg) == kExitError);
  }
}

TEST_CASE("sample and audit subcommands") {
  TempDir tmp;
  std::string cert_path = tmp.file("a5.json");
  save_certificate(make_certificate(alternating_ucf(5)), cert_path);

  SUBCASE("sampling writes the drawn elements") {
    CommandConfig cfg;
    cfg.subcommand = "sample";
    cfg.certificate = cert_path;
    cfg.trials = 7;
    cfg.seed = 11;
    cfg.output = tmp.file("draws.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["count"] == 7);
    CHECK(j["elements"].size() == 7);

    cfg.output = tmp.file("draws2.json");
    CHECK(run_quiet(cfg) == kExitSuccess);
    CHECK(read_bytes(tmp.file("draws.json")) == read_bytes(tmp.file("draws2.json")));
  }
  SUBCASE("audit passes the correct sampler") {
    CommandConfig cfg;
    cfg.subcommand = "audit";
    cfg.certificate = cert_path;
    cfg.trials = 3000;
    cfg.seed = 3;
    cfg.output = tmp.file("audit.json");
    cfg.reproducible = true;
    CHECK(run_quiet(cfg) == kExitSuccess);
    nlohmann::json j = read_json(cfg.output);
    CHECK(j["pass"] == true);
    CHECK(j["dof"] == 59);
  }
  SUBCASE("missing arguments and tiny trial counts are errors") {
    CommandConfig cfg;
    cfg.subcommand = "audit";
    cfg.certificate = cert_path;
    cfg.trials = 10;  // below 10 * |A5|
    CHECK(run_quiet(cfg) == kExitError);
    cfg.trials = 0;
    CHECK(run_quiet(cfg) == kExitError);
    cfg.certificate.clear();
    cfg.trials = 3000;
    CHECK(run_quiet(cfg) == kExitError);

    CommandConfig s;
    s.subcommand = "sample";
    s.certificate = cert_path;
    s.trials = 0;
    CHECK(run_quiet(s) == kExitError);
  }
}

TEST_CASE("driver guards") {
  CommandConfig cfg;
  cfg.subcommand = "unknown";
  CHECK(run_quiet(cfg) == kExitError);
  cfg.subcommand = "construct";
  cfg.group.clear();
  cfg.algorithm = "crt";
  CHECK(run_quiet(cfg) == kExitError);
}
