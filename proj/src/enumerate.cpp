#include "pfsemi/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <optional>

#include "pfsemi/irreducible.hpp"

namespace pfsemi {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  std::atomic<bool>* expired = nullptr;

  bool hit() const {
    if (!at) return false;
    if (expired->load(std::memory_order_relaxed)) return true;
    if (Clock::now() >= *at) {
      expired->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

void try_emit(const std::vector<int>& gap_set, const PFTarget& pf,
              const SemigroupSink& sink) {
  if (!NumSemigroup::represents_gaps(gap_set)) return;
  NumSemigroup s = NumSemigroup::from_gaps(gap_set);
  if (s.pseudo_frobenius() == pf.pf) sink(s);
}

void explore_impl(const ForcedState& state, const PFTarget& pf,
                  const SemigroupSink& sink, SearchStats& stats,
                  const Deadline& deadline) {
  ++stats.nodes;
  std::vector<int> free = state.free_integers();
  ForcedState acc = state;
  std::size_t i = 0;
  while (free.size() - i > 1) {
    if (deadline.hit()) return;
    const int v = free[i];
    ForcedState with_elem = acc;
    with_elem.elem[v] = 1;
    ForcedOutcome left = simple_forced_integers(std::move(with_elem), pf);
    if (!left.failed()) {
      explore_impl(left.state(), pf, sink, stats, deadline);
    } else {
      ForcedState with_gap = acc;
      with_gap.gap[v] = 1;
      ForcedOutcome right = simple_forced_integers(std::move(with_gap), pf);
      if (right.failed()) {
        // v can be neither an element nor a gap here: dead node, and the
        // remaining free integers need not be visited.
        ++stats.fail_prunes;
        return;
      }
    }
    acc.gap[v] = 1;
    ++i;
  }
  ending_condition(acc, pf, sink, stats);
}

}  // namespace

void ending_condition(const ForcedState& state, const PFTarget& pf,
                      const SemigroupSink& sink, SearchStats& stats) {
  ++stats.leaves;
  const std::vector<int> free = state.free_integers();
  std::vector<int> gap_set = state.forced_gaps();
  if (free.empty()) {
    try_emit(gap_set, pf, sink);
    return;
  }
  if (free.size() == 1) {
    try_emit(gap_set, pf, sink);  // the free integer as element
    gap_set.insert(
        std::lower_bound(gap_set.begin(), gap_set.end(), free.front()),
        free.front());
    try_emit(gap_set, pf, sink);  // the free integer as gap
  }
}

void explore(const ForcedState& state, const PFTarget& pf,
             const SemigroupSink& sink, SearchStats& stats) {
  std::atomic<bool> expired{false};
  Deadline none;
  none.expired = &expired;
  explore_impl(state, pf, sink, stats, none);
}

EnumerationResult semigroups_with_pseudo_frobenius(
    const PFTarget& pf, const EnumerateOptions& opts) {
  const auto start = Clock::now();
  EnumerationResult result;
  auto finish = [&]() -> EnumerationResult& {
    canonical_sort(result.semigroups);
    result.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };

  // Type 1 / pseudo-symmetric targets are exactly the irreducibles with the
  // matching Frobenius number. A symmetric semigroup has odd Frobenius
  // number, so PF = {f} with f even has no solution.
  const bool type1 = pf.type() == 1;
  const bool psym = pf.type() == 2 && 2 * pf.pf[0] == pf.pf[1];
  if (type1 || psym) {
    if (type1 && pf.frob() % 2 == 0) return finish();
    for (auto& s : irreducibles_with_frobenius(pf.frob()))
      if (s.pseudo_frobenius() == pf.pf)
        result.semigroups.push_back(std::move(s));
    return finish();
  }

  if (!check_naive_condition(pf)) return finish();
  ForcedOutcome root = forced_integers(pf);
  if (root.failed()) return finish();

  std::atomic<bool> expired{false};
  Deadline deadline;
  deadline.expired = &expired;
  if (opts.time_budget_seconds > 0)
    deadline.at = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(
                                  opts.time_budget_seconds));

  if (opts.threads <= 1) {
    SemigroupSink sink = [&](const NumSemigroup& s) {
      result.semigroups.push_back(s);
    };
    explore_impl(root.state(), pf, sink, result.stats, deadline);
    result.aborted = expired.load();
    return finish();
  }

  // Parallel mode: replay the first tree level sequentially to collect the
  // independent element-branch subtrees, then explore them concurrently.
  // The final canonical sort makes the output schedule independent.
  std::vector<ForcedState> tasks;
  ForcedState acc = root.state();
  std::vector<int> free = acc.free_integers();
  std::size_t i = 0;
  bool stopped = false;
  ++result.stats.nodes;
  while (free.size() - i > 1) {
    const int v = free[i];
    ForcedState with_elem = acc;
    with_elem.elem[v] = 1;
    ForcedOutcome left = simple_forced_integers(std::move(with_elem), pf);
    if (!left.failed()) {
      tasks.push_back(left.state());
    } else {
      ForcedState with_gap = acc;
      with_gap.gap[v] = 1;
      ForcedOutcome right = simple_forced_integers(std::move(with_gap), pf);
      if (right.failed()) {
        ++result.stats.fail_prunes;
        stopped = true;
        break;
      }
    }
    acc.gap[v] = 1;
    ++i;
  }

  std::vector<std::vector<NumSemigroup>> found(tasks.size());
  std::vector<SearchStats> stats(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      SemigroupSink sink = [&found, t](const NumSemigroup& s) {
        found[t].push_back(s);
      };
      explore_impl(tasks[t], pf, sink, stats[t], deadline);
    }
  };
  std::vector<std::future<void>> pool;
  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(opts.threads),
                            std::max<std::size_t>(tasks.size(), 1)));
  for (int w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  if (!stopped) {
    SemigroupSink sink = [&](const NumSemigroup& s) {
      result.semigroups.push_back(s);
    };
    ending_condition(acc, pf, sink, result.stats);
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    for (auto& s : found[t]) result.semigroups.push_back(std::move(s));
    result.stats.nodes += stats[t].nodes;
    result.stats.fail_prunes += stats[t].fail_prunes;
    result.stats.leaves += stats[t].leaves;
  }
  result.aborted = expired.load();
  return finish();
}

}  // namespace pfsemi
