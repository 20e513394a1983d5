#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfsemi/semigroup.hpp"

namespace pfsemi {

/// A validated candidate pseudo-Frobenius set {g_1 < ... < g_n}.
struct PFTarget {
  std::vector<int> pf;  // strictly increasing, all >= 1

  /// Throws std::invalid_argument on empty, unsorted, duplicated or
  /// non-positive input.
  static PFTarget from_sorted(std::vector<int> values);

  int frob() const { return pf.back(); }
  int type() const { return static_cast<int>(pf.size()); }
  bool contains(int v) const;
};

/// Disjoint pair of forced gaps and forced elements over [0, frob+1].
/// gap[v] for v in [1..frob]; elem[v] for v in [0..frob+1]. An integer in
/// [1..frob] carrying neither mark is "free".
struct ForcedState {
  int frob = 0;
  std::vector<char> gap;   // size frob+2
  std::vector<char> elem;  // size frob+2

  explicit ForcedState(int frobenius)
      : frob(frobenius), gap(frobenius + 2, 0), elem(frobenius + 2, 0) {}

  std::vector<int> forced_gaps() const;
  std::vector<int> forced_elements() const;
  std::vector<int> free_integers() const;

  /// No free integers and 0, frob+1 are forced elements: the state fully
  /// determines a membership profile on [0..frob+1].
  bool complete() const;
};

struct FailWitness {
  int value = 0;     // the offending integer
  std::string rule;  // which rule it conflicted with
};

/// Either a consistent ForcedState or a proof that none exists (in which case
/// S(PF) is empty under the input's assumptions).
class ForcedOutcome {
 public:
  static ForcedOutcome ok(ForcedState state) {
    ForcedOutcome r;
    r.state_ = std::move(state);
    return r;
  }
  static ForcedOutcome fail(int value, std::string rule) {
    ForcedOutcome r;
    r.witness_ = FailWitness{value, std::move(rule)};
    return r;
  }

  bool failed() const { return witness_.has_value(); }
  const ForcedState& state() const { return *state_; }
  const FailWitness& witness() const { return *witness_; }

 private:
  ForcedOutcome() = default;
  std::optional<ForcedState> state_;
  std::optional<FailWitness> witness_;
};

/// Necessary condition g_1 >= g_n - g_{n-1} for S(PF) to be non-empty.
/// Requires type >= 2.
bool check_naive_condition(const PFTarget& pf);

/// Starting forced gaps: divisor closure of [1..type] u PF u the positive
/// differences g_i - c with c a small element of closure({g_1..g_{i-1}}, g_i),
/// followed by the exclusion check (a non-PF forced gap x with every f - x
/// non-positive or a forced gap contradicts x being a gap). Fail means
/// S(PF) is empty. The returned state carries gaps only.
ForcedOutcome starting_forced_gaps(const PFTarget& pf);

/// Adds divisors of all positive differences g - e (g forced gap, e forced
/// element) to the gap side; Fail when one of them is already a forced
/// element.
ForcedOutcome further_forced_gaps(const ForcedState& state);

/// Adds big forced elements (frob - i for i below the least non-gap, outside
/// PF) and elements forced by exclusion, then closes the element side under
/// truncated addition so it is the small-element set of a numerical
/// semigroup. Fail when a new element is already a forced gap.
ForcedOutcome further_forced_elements(const ForcedState& state,
                                      const PFTarget& pf);

/// Alternates further_forced_gaps / further_forced_elements to a fixpoint.
/// Monotone: the output contains the input on both sides.
ForcedOutcome simple_forced_integers(ForcedState start, const PFTarget& pf);
ForcedOutcome simple_forced_integers(const std::vector<int>& fg,
                                     const std::vector<int>& fe,
                                     const PFTarget& pf);

/// Probes each free integer v in ascending order: if assuming v an element
/// makes simple_forced_integers fail, v cannot be an element of any semigroup
/// in S(PF). Successful probes mark their whole element set admissible.
/// Returns [1..frob] minus the admissible integers; a superset of the forced
/// gaps of `state`.
std::vector<int> non_admissible(const ForcedState& state, const PFTarget& pf);

/// Full forced-integer computation ("normal version"): type-1 shortcut,
/// simple_forced_integers from the starting forced gaps, then one
/// non-admissibility round unless the state is already complete.
/// With saturate = true the non-admissibility round is iterated to a fixpoint
/// (extension; the single round is the reference behavior).
ForcedOutcome forced_integers(const PFTarget& pf, bool saturate = false);

/// "Quick version": simple_forced_integers(starting_forced_gaps(pf), {}).
ForcedOutcome forced_integers_quick(const PFTarget& pf);

}  // namespace pfsemi
