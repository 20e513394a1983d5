// pfsemi: compute numerical semigroups from prescribed pseudo-Frobenius
// numbers, plus the forced-integer, irreducible and oracle utilities.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfsemi/enumerate.hpp"
#include "pfsemi/forced.hpp"
#include "pfsemi/irreducible.hpp"
#include "pfsemi/json_io.hpp"
#include "pfsemi/oracle.hpp"
#include "pfsemi/random_search.hpp"

namespace {

using namespace pfsemi;

std::vector<int> parse_int_list(const std::vector<std::string>& raw) {
  std::vector<int> values;
  for (const auto& chunk : raw) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      values.push_back(std::stoi(item));
    }
  }
  return values;
}

// Accepts comma-separated and repeated-flag forms; duplicates are removed
// with a warning.
PFTarget parse_pf(const std::vector<std::string>& raw) {
  std::vector<int> values = parse_int_list(raw);
  std::sort(values.begin(), values.end());
  auto dup = std::unique(values.begin(), values.end());
  if (dup != values.end()) {
    std::cerr << "warning: duplicate pseudo-Frobenius entries removed\n";
    values.erase(dup, values.end());
  }
  return PFTarget::from_sorted(std::move(values));
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

void print_semigroup(const NumSemigroup& s) {
  std::cout << "<" << join(s.minimal_generators()) << ">"
            << "  gaps [" << join(s.gaps()) << "]\n";
}

// One row per decade of [0, frob+1]: G forced gap, E forced element,
// '.' free.
void print_ascii(const ForcedState& st) {
  for (int row = 0; row <= st.frob + 1; row += 10) {
    std::cout << "[" << row << "-" << std::min(row + 9, st.frob + 1) << "]";
    for (int v = row; v <= std::min(row + 9, st.frob + 1); ++v) {
      char mark = '.';
      if (v <= st.frob && st.gap[v]) mark = 'G';
      if (st.elem[v]) mark = 'E';
      std::cout << ' ' << mark;
    }
    std::cout << "\n";
  }
}

int run_enumerate(const PFTarget& pf, bool as_json, bool show_stats,
                  const std::string& method, int threads,
                  double time_budget) {
  EnumerationResult result;
  if (method == "irreducible") {
    result = enumerate_via_irreducibles(pf);
  } else {
    EnumerateOptions opts;
    opts.threads = threads;
    opts.time_budget_seconds = time_budget;
    result = semigroups_with_pseudo_frobenius(pf, opts);
  }
  if (as_json) {
    std::cout << to_json(pf.pf, result).dump(2) << "\n";
  } else {
    std::cout << "count: " << result.semigroups.size() << "\n";
    for (const auto& s : result.semigroups) print_semigroup(s);
    if (show_stats) {
      std::cout << "nodes: " << result.stats.nodes
                << "  fail_prunes: " << result.stats.fail_prunes
                << "  leaves: " << result.stats.leaves
                << "  wall_seconds: " << result.stats.wall_seconds << "\n";
    }
  }
  return result.aborted ? 3 : 0;
}

int run_forced(const PFTarget& pf, bool as_json, bool quick, bool saturate,
               bool ascii) {
  ForcedOutcome outcome =
      quick ? forced_integers_quick(pf) : forced_integers(pf, saturate);
  if (as_json) {
    std::cout << to_json(outcome).dump(2) << "\n";
    return 0;
  }
  if (outcome.failed()) {
    std::cout << "fail: no numerical semigroup has this pseudo-Frobenius set\n"
              << "witness: " << outcome.witness().value << " ("
              << outcome.witness().rule << ")\n";
    return 0;
  }
  const ForcedState& st = outcome.state();
  std::cout << "forced gaps:     [" << join(st.forced_gaps()) << "]\n";
  std::cout << "forced elements: [" << join(st.forced_elements()) << "]\n";
  std::cout << "free:            [" << join(st.free_integers()) << "]\n";
  if (ascii) print_ascii(st);
  return 0;
}

int run_random(const PFTarget& pf, bool as_json, int max_attempts,
               std::optional<std::uint64_t> seed) {
  RandomConfig cfg;
  cfg.max_attempts = max_attempts;
  cfg.seed = seed;
  RandomResult result = random_semigroup(pf, cfg);
  switch (result.status) {
    case RandomResult::Status::Found:
      if (as_json) {
        nlohmann::json j = to_json(*result.semigroup);
        j["attempts"] = result.attempts_used;
        std::cout << j.dump(2) << "\n";
      } else {
        print_semigroup(*result.semigroup);
        std::cout << "attempts: " << result.attempts_used << "\n";
      }
      return 0;
    case RandomResult::Status::DefinitelyEmpty:
      if (as_json)
        std::cout << nlohmann::json{{"status", "empty"}}.dump(2) << "\n";
      else
        std::cout << "empty: no semigroup has this pseudo-Frobenius set\n";
      return 0;
    case RandomResult::Status::AttemptsExhausted:
    default:
      std::cerr << "no witness found; increase --max-attempts\n";
      return 2;
  }
}

int run_irreducibles(int frobenius, const std::vector<std::string>& containing,
                     bool as_json) {
  std::vector<int> required = parse_int_list(containing);
  std::vector<NumSemigroup> list =
      required.empty() ? irreducibles_with_frobenius(frobenius)
                       : irreducibles_containing(frobenius, required);
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : list) arr.push_back(to_json(s));
    std::cout << nlohmann::json{{"frobenius", frobenius},
                                {"count", list.size()},
                                {"semigroups", std::move(arr)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "count: " << list.size() << "\n";
    for (const auto& s : list) print_semigroup(s);
  }
  return 0;
}

int run_oracle(int frobenius, bool group_by_pf,
               std::optional<std::string> cache_dir, int bound, bool as_json) {
  if (!cache_dir) {
    if (const char* env = std::getenv("PFSEMI_CACHE_DIR")) cache_dir = env;
  }
  OracleIndex index = build_index(frobenius, bound, cache_dir);
  if (as_json) {
    std::cout << to_json(index, group_by_pf).dump(2) << "\n";
    return 0;
  }
  std::cout << "semigroups with Frobenius number " << frobenius << ": "
            << index.total << "\n";
  if (group_by_pf) {
    for (const auto& [pf, list] : index.groups)
      std::cout << "PF [" << join(pf) << "]: " << list.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups with prescribed pseudo-Frobenius numbers"};
  app.require_subcommand(1);

  std::vector<std::string> pf_raw;
  bool as_json = false, show_stats = false, quick = false, saturate = false,
       ascii = false, group_by_pf = false;
  std::string method = "tree";
  int threads = 1, max_attempts = 100, frobenius = 0,
      bound = pfsemi::kDefaultOracleBound;
  double time_budget = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir;

  auto* enumerate = app.add_subcommand("enumerate",
                                       "compute all semigroups with the "
                                       "given pseudo-Frobenius set");
  enumerate->add_option("--pf", pf_raw, "pseudo-Frobenius numbers")
      ->required();
  enumerate->add_flag("--json", as_json);
  enumerate->add_flag("--stats", show_stats);
  enumerate->add_option("--method", method)
      ->check(CLI::IsMember({"tree", "irreducible"}));
  enumerate->add_option("--threads", threads)->check(CLI::PositiveNumber);
  enumerate->add_option("--time-budget", time_budget,
                        "seconds; partial output and exit code 3 on abort");

  auto* forced = app.add_subcommand("forced",
                                    "compute the integers forced by the "
                                    "given pseudo-Frobenius set");
  forced->add_option("--pf", pf_raw)->required();
  forced->add_flag("--json", as_json);
  forced->add_flag("--quick", quick, "skip the non-admissibility round");
  forced->add_flag("--saturate", saturate,
                   "iterate non-admissibility to a fixpoint (extension)");
  forced->add_flag("--ascii", ascii, "interval rendering of the state");

  auto* random = app.add_subcommand("random",
                                    "search for a single semigroup with the "
                                    "given pseudo-Frobenius set");
  random->add_option("--pf", pf_raw)->required();
  random->add_flag("--json", as_json);
  random->add_option("--max-attempts", max_attempts)
      ->check(CLI::PositiveNumber);
  random->add_option("--seed", seed);

  auto* irreducibles = app.add_subcommand(
      "irreducibles", "irreducible semigroups with a given Frobenius number");
  irreducibles->add_option("--frobenius", frobenius)
      ->required()
      ->check(CLI::PositiveNumber);
  std::vector<std::string> containing;
  irreducibles->add_option("--containing", containing,
                           "restrict to semigroups containing these integers");
  irreducibles->add_flag("--json", as_json);

  auto* oracle = app.add_subcommand(
      "oracle", "brute-force enumeration by Frobenius number");
  oracle->add_option("--frobenius", frobenius)
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--group-by-pf", group_by_pf);
  oracle->add_option("--cache-dir", cache_dir,
                     "defaults to $PFSEMI_CACHE_DIR when set");
  oracle->add_option("--bound", bound)->check(CLI::PositiveNumber);
  oracle->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate)
      return run_enumerate(parse_pf(pf_raw), as_json, show_stats, method,
                           threads, time_budget);
    if (*forced) return run_forced(parse_pf(pf_raw), as_json, quick, saturate,
                                   ascii);
    if (*random) return run_random(parse_pf(pf_raw), as_json, max_attempts,
                                   seed);
    if (*irreducibles) return run_irreducibles(frobenius, containing, as_json);
    if (*oracle)
      return run_oracle(frobenius, group_by_pf, cache_dir, bound, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
