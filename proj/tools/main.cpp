#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_commands.hpp"

int main(int argc, char** argv) {
  namespace cli = autfn::cli;
  CLI::App app{"Presentations of special automorphism groups of free groups"};
  app.require_subcommand(1);

  cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a presentation and write it in v1 format");
  gen_cmd->add_option("--family", gen.family, "gersten | linear | short-aut | out-plus")
      ->required()
      ->check(CLI::IsMember({"gersten", "linear", "short-aut", "out-plus"}));
  gen_cmd->add_option("--n", gen.n, "Rank of the free group")->required();
  gen_cmd->add_option("--provider", gen.provider, "Symmetric group provider")
      ->capture_default_str();
  gen_cmd->add_flag("--compress", gen.compress, "Horner-compress the gamma power");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate every relator of a presentation file");
  verify_cmd->add_option("input", verify_path, "Presentation file")->required();

  cli::StatsOptions stats;
  std::string stats_range;
  auto* stats_cmd = app.add_subcommand("stats", "Generator, relator and length counts per n");
  stats_cmd->add_option("--family", stats.family, "gersten | linear | short-aut | out-plus")
      ->required()
      ->check(CLI::IsMember({"gersten", "linear", "short-aut", "out-plus"}));
  stats_cmd->add_option("--n-range", stats_range, "A..B")->required();
  stats_cmd->add_flag("--doubling", stats.doubling, "Use n = A, 2A, 4A, ... <= B");
  stats_cmd->add_option("--provider", stats.provider, "Symmetric group provider")
      ->capture_default_str();
  stats_cmd->add_flag("--compress", stats.compress, "Horner-compress out-plus");

  std::string proofs_range;
  std::uint64_t seed = 1;
  auto* proofs_cmd = app.add_subcommand("check-proofs", "Check the identities behind the constructions");
  proofs_cmd->add_option("--n-range", proofs_range, "A..B")->required();
  proofs_cmd->add_option("--seed", seed, "Seed for sampled index tuples")->capture_default_str();

  std::string inner_path;
  auto* inner_cmd = app.add_subcommand("inner", "Decide whether a map given by basis images is inner");
  inner_cmd->add_option("input", inner_path, "File with lines 'aK -> word'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    if (*gen_cmd) return cli::cmd_gen(gen, std::cout, std::cerr);
    if (*verify_cmd) return cli::cmd_verify(verify_path, std::cout, std::cerr);
    if (*stats_cmd) {
      stats.range = cli::parse_range(stats_range);
      return cli::cmd_stats(stats, std::cout, std::cerr);
    }
    if (*proofs_cmd) {
      return cli::cmd_check_proofs(cli::parse_range(proofs_range), seed, std::cout, std::cerr);
    }
    if (*inner_cmd) return cli::cmd_inner(inner_path, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  }
  return cli::kUsage;
}
