#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pfsemi/forced.hpp"
#include "pfsemi/semigroup.hpp"

namespace pfsemi {

struct SearchStats {
  std::uint64_t nodes = 0;        // explore calls
  std::uint64_t fail_prunes = 0;  // double-fail STOPs
  std::uint64_t leaves = 0;       // ending-condition evaluations
  double wall_seconds = 0.0;
};

struct EnumerationResult {
  std::vector<NumSemigroup> semigroups;  // canonically sorted, duplicate free
  SearchStats stats;
  bool aborted = false;  // time budget hit; semigroups is partial
};

struct EnumerateOptions {
  int threads = 1;                   // > 1 fans out the first tree level
  double time_budget_seconds = 0.0;  // 0 = unlimited
};

using SemigroupSink = std::function<void(const NumSemigroup&)>;

/// Leaf handling: with zero free integers the forced gaps are the candidate
/// gap set; with one free integer v both completions (v element / v gap) are
/// candidates. Each candidate that is a genuine gap set and whose semigroup
/// has pseudo-Frobenius set exactly pf is emitted.
void ending_condition(const ForcedState& state, const PFTarget& pf,
                      const SemigroupSink& sink, SearchStats& stats);

/// Depth-first backtracking over free integers: branch on the least free v as
/// element (recurse on the propagated state) or as gap; when both directions
/// are contradictory the whole node is dead and exploration of it stops.
/// Emits exactly the semigroups S in S(pf) with state.gap subset of G(S) and
/// state.elem subset of SE(S).
void explore(const ForcedState& state, const PFTarget& pf,
             const SemigroupSink& sink, SearchStats& stats);

/// Computes S(pf): irreducible shortcut for type 1 / pseudo-symmetric
/// targets, the naive necessary condition, forced integers, then tree
/// exploration.
EnumerationResult semigroups_with_pseudo_frobenius(
    const PFTarget& pf, const EnumerateOptions& opts = {});

}  // namespace pfsemi
