// fvs: exact feedback vertex set solver.
//
//   fvs solve FILE -k K [--stats] [--audit] [--no-cutoff] [--forbid 1,2,3]
//   fvs minimum FILE
//   fvs oracle FILE
//   fvs gen random|planted N M_OR_K SEED OUT
//
// Exit status: 0 yes, 1 no, 2 error.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace fvs::cli;

  CLI::App app{"Exact feedback vertex set solver"};
  app.require_subcommand(1);

  SolveRequest solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a feedback vertex set of size <= K exists");
  solve_cmd->add_option("file", solve.path, "Instance file")->required();
  solve_cmd->add_option("-k,--budget", solve.budget, "Maximum solution size")->required();
  solve_cmd->add_flag("--stats", solve.stats, "Print search statistics");
  solve_cmd->add_flag("--audit", solve.audit, "Record and verify degree bookkeeping on the solution path");
  solve_cmd->add_flag("--no-cutoff", solve.no_cutoff, "Do not cap exclusions per path");
  solve_cmd->add_option("--forbid", solve.forbid, "Comma-separated vertices that may not be deleted");

  std::string minimum_path;
  auto* minimum_cmd = app.add_subcommand("minimum", "Find a minimum feedback vertex set");
  minimum_cmd->add_option("file", minimum_path, "Instance file")->required();

  std::string oracle_path;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum (small graphs only)");
  oracle_cmd->add_option("file", oracle_path, "Instance file")->required();

  GenRequest gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance file");
  gen_cmd->add_option("kind", gen.kind, "random or planted")->required()->check(CLI::IsMember({"random", "planted"}));
  gen_cmd->add_option("n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("size", gen.size, "Edge count (random) or planted budget (planted)")->required();
  gen_cmd->add_option("seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("out", gen.out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
  if (*minimum_cmd) return cmd_minimum(minimum_path, std::cout, std::cerr);
  if (*oracle_cmd) return cmd_oracle(oracle_path, std::cout, std::cerr);
  if (*gen_cmd) return cmd_gen(gen, std::cerr);
  return kExitError;
}
