#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hermin {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;       // also generic failure / MISMATCH
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitTrivial = 3;
inline constexpr int kExitCap = 4;

struct SolveOptions {
  std::string path;
  bool all_minimal = false;
  std::string adapter = "auto";     // auto | queyranne | rizzi
  std::string out_format = "json";  // json | text
};

struct VerifyOptions {
  std::string path;  // empty: run a random campaign instead
  int samples = 100;
  std::uint64_t seed = 1;
};

struct BenchOptions {
  std::vector<int> sizes;
  int trials = 3;
  std::uint64_t seed = 1;
};

struct GenOptions {
  std::string klass = "graph_cut/cardinality";  // <function>/<family>
  int n = 6;
  std::uint64_t seed = 1;
  std::string out_path;  // empty: stdout
};

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hermin
