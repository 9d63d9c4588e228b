#include "cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "patterncount/algebra.hpp"
#include "patterncount/counting.hpp"
#include "patterncount/dispatch.hpp"
#include "patterncount/errors.hpp"
#include "patterncount/gen3214.hpp"
#include "patterncount/io.hpp"
#include "patterncount/random.hpp"

namespace patterncount::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitParse = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitOverflow = 4;

using Inapplicable = NotApplicable;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::OverflowDetected: return kExitOverflow;
    case ErrorCode::TooLarge:
    case ErrorCode::TooLargeForCanonicalization:
    case ErrorCode::NotTwinTree:
    case ErrorCode::NotWestTree:
    case ErrorCode::BudgetExceeded: return kExitInapplicable;
    default: return kExitParse;
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string resolve_algorithm(const TreeSpec& spec, std::ostream& err) {
  std::string a = patterncount::resolve_algorithm(spec);
  if (a == "naive") err << "warning: no fast path for this tree; falling back to naive search\n";
  return a;
}

int cmd_count(const std::string& perm_path, const std::string& tree_path, std::string algorithm,
              std::optional<std::size_t> block_size, bool as_json, bool bigint, std::ostream& out,
              std::ostream& err) {
  const Permutation p = load_permutation(perm_path);
  const TreeSpec spec = load_tree_spec(tree_path);
  if (algorithm == "auto") algorithm = resolve_algorithm(spec, err);
  const auto t0 = std::chrono::steady_clock::now();
  const std::string count = count_spec(p, spec, algorithm, block_size, bigint);
  const double ms = ms_since(t0);
  if (as_json) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << ms;
    out << "{\"count\": " << count << ", \"algorithm\": \"" << algorithm << "\", \"n\": " << p.size()
        << ", \"elapsed_ms\": " << os.str() << "}\n";
  } else {
    out << count << "\n";
  }
  return kExitOk;
}

int cmd_pattern_vector(const std::string& tree_path, std::ostream& out) {
  const TreeSpec spec = load_tree_spec(tree_path);
  if (spec.dp.size() > kMaxPatternVectorSize) {
    throw Inapplicable("pattern vectors are limited to " + std::to_string(kMaxPatternVectorSize) + " nodes");
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [perm, c] : pattern_vector(spec.dp)) j[perm.to_string()] = c.get_num().get_si();
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_rank(int max_level, bool include_new, std::ostream& out) {
  if (max_level < 1 || max_level > 5) throw Inapplicable("--max-level must be in 1..5");
  if (include_new && max_level < 5) throw Inapplicable("--include-new needs --max-level 5");
  auto family = twin_tree_family(max_level);
  if (include_new) {
    for (const auto& a : new_direction_arbos()) {
      family.push_back(a.dp());
      family.push_back(a.dp().anti());
    }
  }
  const RankResult r = rank_of_family(family, max_level);
  nlohmann::ordered_json j;
  j["dim_span"] = r.dim_span;
  j["dim_top"] = r.dim_top;
  j["dim_top_intersection"] = r.dim_top_intersection;
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& tree_path, std::ostream& out) {
  const TreeSpec spec = load_tree_spec(tree_path, false);
  const DPClass c = classify(spec.dp);
  nlohmann::ordered_json j;
  j["type"] = to_string(spec.type);
  j["n"] = spec.dp.size();
  j["twin"] = c.twin;
  j["tree"] = c.tree;
  j["twin_tree"] = c.twin_tree;
  j["permutation"] = c.permutation;
  if (spec.anchors) {
    const ArboReport r = check_arbo(spec.dp, *spec.anchors);
    nlohmann::ordered_json a;
    a["valid"] = r.ok();
    a["violation"] = to_string(r.violation);
    if (!r.ok()) a["detail"] = r.detail;
    j["arbo"] = a;
  } else {
    j["arbo"] = nullptr;
  }
  out << j.dump() << "\n";
  return kExitOk;
}

struct Suite {
  std::string name;
  std::function<std::string(Rng&, int&)> run;  // returns failure detail or empty
};

std::vector<Suite> selftest_suites() {
  return {
      {"corner_tree_vs_morphism_search",
       [](Rng& rng, int& cases) -> std::string {
         for (; cases < 150; ++cases) {
           CornerTree ct = random_corner_tree(1 + static_cast<int>(rng() % 5), rng);
           Permutation p = random_permutation(rng() % 11, rng);
           auto fast = count_corner_tree<Int128>(p, ct);
           auto slow = naive_morphism_count(corner_tree_to_dp(ct), p);
           if (fast != Int128(static_cast<long long>(slow))) return "mismatch on " + p.to_string();
         }
         return {};
       }},
      {"stream_vs_general",
       [](Rng& rng, int& cases) -> std::string {
         for (; cases < 100; ++cases) {
           CornerTree ct = random_corner_tree(1 + static_cast<int>(rng() % 5), rng, true);
           Permutation p = random_permutation(rng() % 60, rng);
           if (count_all_west<Int128>(p, ct) != count_corner_tree<Int128>(p, ct)) return "mismatch on " + p.to_string();
         }
         return {};
       }},
      {"gen3214_vs_pattern_vector",
       [](Rng& rng, int& cases) -> std::string {
         for (; cases < 40; ++cases) {
           ArboNE a = random_arbo(4 + static_cast<int>(rng() % 3), rng);
           Permutation p = random_permutation(1 + rng() % 20, rng);
           std::size_t m = 1 + rng() % p.size();
           auto fast = count_gen_3214<Int128>(p, a, m);
           mpq_class slow = pair_with_occurrences(pattern_vector(a.dp()), p);
           if (fast.to_mpz() != slow) return "mismatch on " + p.to_string();
         }
         return {};
       }},
      {"master_identity",
       [](Rng& rng, int& cases) -> std::string {
         for (; cases < 40; ++cases) {
           DoublePoset d = random_double_poset(1 + static_cast<int>(rng() % 4), 0.4, rng);
           Permutation p = random_permutation(rng() % 9, rng);
           mpq_class lhs(mpz_class(std::to_string(naive_morphism_count(d, p))));
           if (lhs != pair_with_occurrences(pattern_vector(d), p)) return "mismatch on " + p.to_string();
         }
         return {};
       }},
      {"factorization",
       [](Rng& rng, int& cases) -> std::string {
         for (; cases < 30; ++cases) {
           DoublePoset a = random_double_poset(1 + static_cast<int>(rng() % 3), 0.5, rng);
           DoublePoset b = random_double_poset(1 + static_cast<int>(rng() % 3), 0.5, rng);
           auto r = check_factorization(a, b);
           if (!r.pass) return r.counterexample;
         }
         return {};
       }},
  };
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  bool ok = true;
  for (const auto& s : selftest_suites()) {
    Rng rng(seed);
    int cases = 0;
    std::string detail;
    try {
      detail = s.run(rng, cases);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (detail.empty()) {
      out << "PASS " << s.name << " (" << cases << " cases)\n";
    } else {
      ok = false;
      out << "FAIL " << s.name << ": " << detail << "\n";
    }
  }
  return ok ? kExitOk : kExitSelftest;
}

CornerTree default_bench_tree() {
  // root with an NW child carrying an SW leaf, plus an SW leaf at the root
  return CornerTree(4, 0, {{0, 1, CornerLabel::NW}, {1, 2, CornerLabel::SW}, {0, 3, CornerLabel::SW}});
}

int cmd_bench(const std::string& algorithm, std::size_t n, int steps, std::uint64_t seed,
              const std::string& tree_path, std::optional<std::size_t> block_size, std::ostream& out) {
  std::optional<TreeSpec> spec;
  if (!tree_path.empty()) spec = load_tree_spec(tree_path);
  if (algorithm != "stream" && algorithm != "general" && algorithm != "block" && algorithm != "naive") {
    throw Inapplicable("unknown algorithm '" + algorithm + "'");
  }
  out << "n,algorithm,elapsed_ms\n";
  Rng rng(seed);
  for (int s = 0; s < steps; ++s, n *= 2) {
    const Permutation p = random_permutation(n, rng);
    const auto t0 = std::chrono::steady_clock::now();
    if (algorithm == "block") {
      const ArboNE a = spec && spec->arbo ? *spec->arbo : new_direction_arbos()[0];
      (void)count_gen_3214<Int128>(p, a, block_size);
    } else if (algorithm == "naive") {
      (void)naive_morphism_count(spec ? spec->dp : corner_tree_to_dp(default_bench_tree()), p);
    } else {
      std::optional<CornerTree> ct = default_bench_tree();
      if (spec) ct = algorithm == "stream" ? as_west_tree(*spec) : as_corner_tree(*spec);
      if (!ct) throw Inapplicable("tree file does not fit the algorithm");
      if (algorithm == "stream") (void)count_all_west<Int128>(p, *ct);
      else (void)count_corner_tree<Int128>(p, *ct);
    }
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << ms_since(t0);
    out << n << "," << algorithm << "," << os.str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact permutation pattern counting"};
  app.require_subcommand(1);

  std::string perm_path, tree_path, algorithm = "auto";
  std::optional<std::size_t> block_size;
  bool as_json = false, bigint = false;
  auto* count = app.add_subcommand("count", "Count occurrences of a tree in a permutation");
  count->add_option("--perm", perm_path, "Permutation file")->required();
  count->add_option("--tree", tree_path, "Tree file (JSON)")->required();
  count->add_option("--algorithm", algorithm, "auto|general|stream|block|naive")
      ->check(CLI::IsMember({"auto", "general", "stream", "block", "naive"}));
  count->add_option("--block-size", block_size, "Block size for the block algorithm")->check(CLI::PositiveNumber);
  count->add_flag("--json", as_json, "Print a JSON record");
  count->add_flag("--bigint", bigint, "Use arbitrary-precision counters");

  auto* pv = app.add_subcommand("pattern-vector", "Print the pattern vector of a tree");
  pv->add_option("--tree", tree_path, "Tree file (JSON)")->required();

  int max_level = 5;
  bool include_new = false;
  auto* rank = app.add_subcommand("rank", "Dimension of the span of twin-tree pattern vectors");
  rank->add_option("--max-level", max_level, "Top level K");
  rank->add_flag("--include-new", include_new, "Add the six level-5 arbo directions");

  auto* validate = app.add_subcommand("validate", "Classify a tree file");
  validate->add_option("--tree", tree_path, "Tree file (JSON)")->required();

  std::uint64_t seed = 7;
  auto* selftest = app.add_subcommand("selftest", "Run oracle-equivalence suites");
  selftest->add_option("--seed", seed, "PRNG seed");

  std::string bench_algorithm = "stream";
  std::size_t bench_n = 100000;
  int steps = 1;
  auto* bench = app.add_subcommand("bench", "Time an algorithm on random permutations (CSV)");
  bench->add_option("--algorithm", bench_algorithm, "stream|general|block|naive");
  bench->add_option("--n", bench_n, "Smallest permutation length")->check(CLI::PositiveNumber);
  bench->add_option("--steps", steps, "Number of doubling steps")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "PRNG seed");
  bench->add_option("--tree", tree_path, "Tree file (JSON)");
  bench->add_option("--block-size", block_size, "Block size for the block algorithm")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*count) return cmd_count(perm_path, tree_path, algorithm, block_size, as_json, bigint, out, err);
    if (*pv) return cmd_pattern_vector(tree_path, out);
    if (*rank) return cmd_rank(max_level, include_new, out);
    if (*validate) return cmd_validate(tree_path, out);
    if (*selftest) return cmd_selftest(seed, out);
    if (*bench) return cmd_bench(bench_algorithm, bench_n, steps, seed, tree_path, block_size, out);
  } catch (const Inapplicable& e) {
    err << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitParse;
}

}  // namespace patterncount::cli
