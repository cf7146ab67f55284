#include "hermin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hermin/errors.hpp"
#include "hermin/instance_io.hpp"
#include "hermin/reference.hpp"
#include "hermin/solver.hpp"

namespace hermin {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json sets_to_json(const std::vector<Subset>& sets, const GroundSet& universe) {
  json out = json::array();
  for (const Subset& s : sets) {
    json one = json::array();
    for (int e : s.elements()) one.push_back(universe.label(e));
    out.push_back(std::move(one));
  }
  return out;
}

struct ResolvedAdapter {
  std::string name;          // queyranne | rizzi
  bool via_antirestriction;  // posimodular route
};

ResolvedAdapter resolve_adapter(const BuiltInstance& built, const std::string& requested) {
  if (requested == "rizzi" || (requested == "auto" && built.distance != nullptr)) {
    if (built.distance == nullptr) {
      throw InstanceParseError("the rizzi adapter needs a distance_boundary instance");
    }
    return {"rizzi", false};
  }
  if (requested != "auto" && requested != "queyranne") {
    throw InstanceParseError("unknown adapter '" + requested + "'");
  }
  // Posimodular functions go through the antirestriction; the orders on the
  // extension are Queyranne's.
  return {"queyranne", built.posimodular && requested == "auto"};
}

struct SolveOutcome {
  Value value;
  std::vector<Subset> sets;
  std::uint64_t oracle_calls = 0;
  std::uint64_t distance_queries = 0;
};

SolveOutcome solve_built(const BuiltInstance& built, const ResolvedAdapter& adapter,
                         bool all_minimal) {
  SolveOutcome outcome;
  if (adapter.via_antirestriction) {
    if (all_minimal) {
      SolutionFamily fam = find_minimals_via_antirestriction(built.function, built.family);
      outcome = {fam.value, fam.sets, fam.oracle_calls, 0};
    } else {
      Solution sol = find_optimal_via_antirestriction(built.function, built.family);
      outcome = {sol.value, {sol.set}, sol.oracle_calls, 0};
    }
    return outcome;
  }

  std::unique_ptr<PendantPairFinder> finder;
  std::uint64_t queries_before = 0;
  if (adapter.name == "rizzi") {
    queries_before = built.distance->queries();
    finder = std::make_unique<RizziFinder>(*built.distance);
  } else {
    finder = std::make_unique<QueyranneFinder>();
  }
  if (all_minimal) {
    SolutionFamily fam = find_minimals(*built.function, *built.family, *finder);
    outcome = {fam.value, fam.sets, fam.oracle_calls, 0};
  } else {
    Solution sol = find_optimal(*built.function, *built.family, *finder);
    outcome = {sol.value, {sol.set}, sol.oracle_calls, 0};
  }
  if (built.distance) outcome.distance_queries = built.distance->queries() - queries_before;
  return outcome;
}

}  // namespace

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  auto start = Clock::now();
  try {
    InstanceSpec spec = load_instance(options.path);
    BuiltInstance built = spec.build();
    ResolvedAdapter adapter = resolve_adapter(built, options.adapter);
    SolveOutcome outcome = solve_built(built, adapter, options.all_minimal);
    double ms = elapsed_ms(start);

    if (options.out_format == "json") {
      json report;
      report["status"] = "ok";
      report["adapter"] = adapter.name;
      report["value"] = outcome.value.str();
      report["sets"] = sets_to_json(outcome.sets, built.universe);
      report["oracle_calls"] = outcome.oracle_calls;
      if (outcome.distance_queries > 0) report["distance_queries"] = outcome.distance_queries;
      report["time_ms"] = ms;
      out << report.dump() << "\n";
    } else {
      out << "status: ok\n";
      out << "adapter: " << adapter.name << "\n";
      out << "value: " << outcome.value.str() << "\n";
      out << "sets:";
      for (const Subset& s : outcome.sets) out << " " << s.str(built.universe);
      out << "\n";
      out << "oracle_calls: " << outcome.oracle_calls << "\n";
      if (outcome.distance_queries > 0) {
        out << "distance_queries: " << outcome.distance_queries << "\n";
      }
      out << "time_ms: " << ms << "\n";
    }
    return kExitOk;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const TrivialFamilyError& e) {
    err << "trivial family: " << e.what() << "\n";
    return kExitTrivial;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

namespace {

struct VerifyComparison {
  bool match = true;
  std::string detail;
};

std::vector<Subset> sorted_sets(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::string describe_sets(const std::vector<Subset>& sets, const GroundSet& universe) {
  std::string out;
  for (const Subset& s : sets) {
    if (!out.empty()) out += " ";
    out += s.str(universe);
  }
  return out.empty() ? "(none)" : out;
}

VerifyComparison compare_against_brute(const BuiltInstance& built, const std::string& adapter) {
  VerifyComparison cmp;
  ResolvedAdapter resolved = resolve_adapter(built, adapter);

  BruteForceReport truth = brute_force(*built.function, *built.family);
  SolveOutcome one = solve_built(built, resolved, false);
  SolveOutcome all = solve_built(built, resolved, true);

  if (one.value != truth.min_value) {
    cmp.match = false;
    cmp.detail = "optimal value " + one.value.str() + " != brute-force " +
                 truth.min_value.str();
    return cmp;
  }
  const Subset& got = one.sets.front();
  bool minimal = std::find(truth.minimal_minimizers.begin(), truth.minimal_minimizers.end(),
                           got) != truth.minimal_minimizers.end();
  if (!minimal) {
    cmp.match = false;
    cmp.detail = "returned set " + got.str(built.universe) + " is not a minimal minimizer";
    return cmp;
  }
  if (sorted_sets(all.sets) != sorted_sets(truth.minimal_minimizers)) {
    cmp.match = false;
    cmp.detail = "minimal family mismatch: solver " +
                 describe_sets(sorted_sets(all.sets), built.universe) + " vs brute-force " +
                 describe_sets(sorted_sets(truth.minimal_minimizers), built.universe);
    return cmp;
  }
  return cmp;
}

VerifyComparison compare_expected(const BuiltInstance& built, const ExpectedSpec& expected) {
  VerifyComparison cmp;
  BruteForceReport truth = brute_force(*built.function, *built.family);
  if (expected.value.has_value() && *expected.value != truth.min_value) {
    cmp.match = false;
    cmp.detail = "expected value " + expected.value->str() + " != brute-force " +
                 truth.min_value.str();
    return cmp;
  }
  if (expected.sets.has_value()) {
    std::vector<Subset> sets;
    for (const auto& labels : *expected.sets) {
      Subset s = Subset::empty(built.universe.size());
      for (const auto& label : labels) {
        auto idx = built.universe.index_of(label);
        if (!idx.has_value()) {
          cmp.match = false;
          cmp.detail = "expected set mentions unknown element '" + label + "'";
          return cmp;
        }
        s.set(*idx);
      }
      sets.push_back(s);
    }
    if (sorted_sets(sets) != sorted_sets(truth.minimal_minimizers)) {
      cmp.match = false;
      cmp.detail = "expected minimal family " + describe_sets(sorted_sets(sets), built.universe) +
                   " != brute-force " +
                   describe_sets(sorted_sets(truth.minimal_minimizers), built.universe);
      return cmp;
    }
  }
  return cmp;
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (!options.path.empty()) {
      InstanceSpec spec = load_instance(options.path);
      if (spec.n > 20) {
        err << "verify: instance has " << spec.n
            << " elements; brute force supports at most 20\n";
        return kExitCap;
      }
      BuiltInstance built = spec.build();
      VerifyComparison cmp = compare_against_brute(built, "auto");
      if (cmp.match && spec.expected.has_value()) {
        cmp = compare_expected(built, *spec.expected);
      }
      if (cmp.match) {
        out << options.path << ": MATCH\n";
        return kExitOk;
      }
      out << options.path << ": MISMATCH (" << cmp.detail << ")\n";
      return kExitParse;
    }

    // Random campaign over all function/family class combinations.
    const FunctionClass functions[] = {FunctionClass::GraphCut, FunctionClass::HypergraphCut,
                                       FunctionClass::CutPlusModular};
    const FamilyClass families[] = {FamilyClass::Cardinality, FamilyClass::Knapsack,
                                    FamilyClass::PartitionMatroid, FamilyClass::ForbiddenSubsets,
                                    FamilyClass::Intersection};
    int mismatches = 0;
    for (int i = 0; i < options.samples; ++i) {
      int n = 2 + static_cast<int>((options.seed + i) % 8);
      RandomInstance inst = random_instance(options.seed + i, n, functions[i % 3],
                                            families[(i / 3) % 5]);
      BuiltInstance built{inst.universe, inst.function, inst.family, nullptr,
                          inst.function_class == FunctionClass::CutPlusModular};
      VerifyComparison cmp = compare_against_brute(built, "auto");
      if (cmp.match) {
        out << "sample " << i << " (n=" << n << "): MATCH\n";
      } else {
        out << "sample " << i << " (n=" << n << "): MISMATCH (" << cmp.detail << ")\n";
        ++mismatches;
      }
    }
    out << "verified " << (options.samples - mismatches) << "/" << options.samples
        << ": " << (mismatches == 0 ? "MATCH" : "MISMATCH") << "\n";
    return mismatches == 0 ? kExitOk : kExitParse;
  } catch (const EnumerationCapExceeded& e) {
    err << "verify: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.sizes.empty()) {
      err << "bench: no sizes given\n";
      return kExitParse;
    }
    for (int n : options.sizes) {
      if (n < 2) {
        err << "bench: sizes must be >= 2\n";
        return kExitParse;
      }
    }
    out << "n,algorithm,mean_calls,max_calls,max_calls_over_n3,mean_ms\n";
    for (int n : options.sizes) {
      struct Agg {
        double total_calls = 0;
        std::uint64_t max_calls = 0;
        double total_ms = 0;
      };
      Agg one, all;
      for (int trial = 0; trial < options.trials; ++trial) {
        std::uint64_t seed = options.seed * 1000003 + static_cast<std::uint64_t>(n) * 101 + trial;
        WeightedGraph graph = random_weighted_graph(seed, n, 3 * n, true);
        GroundSet universe(n);
        auto f = graph_cut(graph, universe);
        CardinalityFamily family(universe, std::max(1, n / 2));

        auto t0 = Clock::now();
        Solution sol = find_optimal(*f, family);
        one.total_ms += elapsed_ms(t0);
        one.total_calls += static_cast<double>(sol.oracle_calls);
        one.max_calls = std::max(one.max_calls, sol.oracle_calls);

        auto t1 = Clock::now();
        SolutionFamily fam = find_minimals(*f, family);
        all.total_ms += elapsed_ms(t1);
        all.total_calls += static_cast<double>(fam.oracle_calls);
        all.max_calls = std::max(all.max_calls, fam.oracle_calls);
      }
      double n3 = static_cast<double>(n) * n * n;
      auto row = [&](const char* name, const Agg& agg) {
        out << n << "," << name << "," << agg.total_calls / options.trials << ","
            << agg.max_calls << "," << static_cast<double>(agg.max_calls) / n3 << ","
            << agg.total_ms / options.trials << "\n";
      };
      row("find_optimal", one);
      row("find_minimals", all);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto slash = options.klass.find('/');
    if (slash == std::string::npos) {
      err << "gen: --class must look like <function>/<family>, e.g. graph_cut/cardinality\n";
      return kExitParse;
    }
    std::string function_name = options.klass.substr(0, slash);
    std::string family_name = options.klass.substr(slash + 1);

    FunctionClass function_class;
    if (function_name == "graph_cut") {
      function_class = FunctionClass::GraphCut;
    } else if (function_name == "hypergraph_cut") {
      function_class = FunctionClass::HypergraphCut;
    } else if (function_name == "cut_modular") {
      function_class = FunctionClass::CutPlusModular;
    } else {
      err << "gen: unknown function class '" << function_name << "'\n";
      return kExitParse;
    }
    FamilyClass family_class;
    if (family_name == "cardinality") {
      family_class = FamilyClass::Cardinality;
    } else if (family_name == "knapsack") {
      family_class = FamilyClass::Knapsack;
    } else if (family_name == "partition_matroid") {
      family_class = FamilyClass::PartitionMatroid;
    } else if (family_name == "forbidden") {
      family_class = FamilyClass::ForbiddenSubsets;
    } else if (family_name == "intersection") {
      family_class = FamilyClass::Intersection;
    } else {
      err << "gen: unknown family class '" << family_name << "'\n";
      return kExitParse;
    }

    RandomInstance inst = random_instance(options.seed, options.n, function_class, family_class);
    std::string text = serialize_instance(to_instance_spec(inst));
    if (options.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(options.out_path);
      if (!file) {
        err << "gen: cannot write " << options.out_path << "\n";
        return kExitParse;
      }
      file << text;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace hermin
