#include <string>

#include "CLI11.hpp"
#include "ucf/cli.hpp"

// Thin argv adapter: every subcommand maps onto ucf::CommandConfig and the
// library-side ucf::run, so behavior is identical for tests driving run()
// directly and for shell users.
int main(int argc, char** argv) {
  CLI::App app{"Uniform factorizations of finite permutation groups: "
               "construct, verify, classify, search, and sample"};
  app.require_subcommand(1);

  ucf::CommandConfig cfg;

  auto add_group = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--group", cfg.group,
                                "builder name (S5, A6, D12, C30, Q8, PSL(2,7), "
                                "A4xC2, ...) or group JSON path");
    if (required) opt->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", cfg.output, "write the JSON artifact here "
                                            "(default: standard output)");
    cmd->add_flag("--reproducible", cfg.reproducible,
                  "omit the generated_at timestamp");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cfg.cap,
                    "group enumeration cap (default: " +
                        std::string(ucf::kElementCapEnv) + " or built-in)");
  };

  CLI::App* construct = app.add_subcommand(
      "construct", "build a uniform factorization with a chosen algorithm");
  add_group(construct, true);
  construct->add_option("--algorithm", cfg.algorithm,
                        "crt | abelian | solvable | alternating | symmetric | "
                        "simple-reduction")
      ->required();
  construct->add_option("--db", cfg.db, "simple-group database JSON path");
  add_cap(construct);
  add_output(construct);

  CLI::App* verify = app.add_subcommand(
      "verify", "check uniformity of a Sylow tuple or a stored certificate");
  add_group(verify, false);
  verify->add_option("--factors", cfg.factors,
                     "ordered Sylow prime list, e.g. sylow:2,5,3");
  verify->add_option("--certificate", cfg.certificate, "certificate JSON path");
  verify->add_option("--seed", cfg.seed, "Sylow search seed");
  add_cap(verify);
  add_output(verify);

  CLI::App* classify = app.add_subcommand(
      "classify", "re-verify a certificate and report its class flags");
  classify->add_option("--certificate", cfg.certificate, "certificate JSON path")
      ->required();
  add_output(classify);

  CLI::App* search = app.add_subcommand(
      "search", "enumerate uniform tuples (bounded) or subgroup pairs (pairs)");
  add_group(search, true);
  search->add_option("--algorithm", cfg.algorithm, "bounded (default) | pairs");
  search->add_option("--max-len", cfg.max_len, "tuple length bound (bounded)");
  search->add_option("--budget", cfg.budget,
                     "multiplicity bound (bounded) / closure cap (pairs)");
  add_cap(search);
  add_output(search);

  CLI::App* sylow = app.add_subcommand(
      "sylow", "test all orderings of Sylow representatives and type the group");
  add_group(sylow, true);
  sylow->add_option("--retries", cfg.retries, "representative choices to try");
  sylow->add_option("--seed", cfg.seed, "Sylow search seed");
  add_cap(sylow);
  add_output(sylow);

  CLI::App* sample = app.add_subcommand(
      "sample", "draw uniformly random elements from a certified factorization");
  sample->add_option("--certificate", cfg.certificate, "certificate JSON path")
      ->required();
  sample->add_option("--trials", cfg.trials, "number of draws")->required();
  sample->add_option("--seed", cfg.seed, "sampler seed");
  add_output(sample);

  CLI::App* audit = app.add_subcommand(
      "audit", "chi-square the sampler against the uniform distribution");
  audit->add_option("--certificate", cfg.certificate, "certificate JSON path")
      ->required();
  audit->add_option("--trials", cfg.trials, "draws (at least 10 * |G|)")
      ->required();
  audit->add_option("--seed", cfg.seed, "sampler seed");
  add_output(audit);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {construct, verify, classify, search, sylow, sample, audit}) {
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  }
  return ucf::run(cfg);
}
