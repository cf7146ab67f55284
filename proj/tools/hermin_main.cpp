#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermin/cli.hpp"

namespace {

bool parse_sizes(const std::string& text, std::vector<int>& out) {
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermin: minimal minimizers of symmetric submodular functions "
               "over hereditary families"};
  app.require_subcommand(1);

  hermin::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance file");
  solve_cmd->add_option("path", solve.path, "instance JSON file")->required();
  solve_cmd->add_flag("--all-minimal", solve.all_minimal,
                      "report every minimal optimal solution");
  solve_cmd->add_option("--adapter", solve.adapter, "auto | queyranne | rizzi")
      ->check(CLI::IsMember({"auto", "queyranne", "rizzi"}));
  solve_cmd->add_option("--out", solve.out_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  hermin::VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "cross-check the solver against brute force");
  verify_cmd->add_option("path", verify.path,
                         "instance JSON file (omit for a random campaign)");
  verify_cmd->add_option("--samples", verify.samples, "random instances to verify");
  verify_cmd->add_option("--seed", verify.seed, "campaign seed");

  hermin::BenchOptions bench;
  std::string sizes_text = "10,20,40,80";
  auto* bench_cmd = app.add_subcommand("bench", "measure oracle calls on random instances");
  bench_cmd->add_option("--sizes", sizes_text, "comma-separated ground set sizes");
  bench_cmd->add_option("--trials", bench.trials, "trials per size");
  bench_cmd->add_option("--seed", bench.seed, "bench seed");

  hermin::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a random instance file");
  gen_cmd->add_option("--class", gen.klass,
                      "<function>/<family>; functions: graph_cut, hypergraph_cut, cut_modular; "
                      "families: cardinality, knapsack, partition_matroid, forbidden, "
                      "intersection");
  gen_cmd->add_option("--n", gen.n, "ground set size");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out_path, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) return hermin::run_solve(solve, std::cout, std::cerr);
  if (verify_cmd->parsed()) return hermin::run_verify(verify, std::cout, std::cerr);
  if (bench_cmd->parsed()) {
    if (!parse_sizes(sizes_text, bench.sizes)) {
      std::cerr << "bench: cannot parse --sizes '" << sizes_text << "'\n";
      return hermin::kExitParse;
    }
    return hermin::run_bench(bench, std::cout, std::cerr);
  }
  if (gen_cmd->parsed()) return hermin::run_gen(gen, std::cout, std::cerr);
  return hermin::kExitParse;
}
