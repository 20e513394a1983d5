#include "pfsemi/random_search.hpp"

#include <random>

namespace pfsemi {

namespace {

// One irreducible with Frobenius f: <2, f+2> for f odd (symmetric),
// {0} u [f/2+1 ..) minus {f} for f even (pseudo-symmetric).
NumSemigroup an_irreducible(int f) {
  if (f % 2 == 1) return NumSemigroup::from_generators({2, f + 2});
  std::vector<int> gap_set;
  for (int v = 1; v <= f / 2; ++v) gap_set.push_back(v);
  gap_set.push_back(f);
  return NumSemigroup::from_gaps(gap_set);
}

// Builds the semigroup of a complete state and checks PF exactness.
bool finish_state(const ForcedState& st, const PFTarget& pf,
                  RandomResult& result) {
  std::vector<int> gap_set = st.forced_gaps();
  if (!NumSemigroup::represents_gaps(gap_set)) return false;
  NumSemigroup s = NumSemigroup::from_gaps(gap_set);
  if (s.pseudo_frobenius() != pf.pf) return false;
  result.status = RandomResult::Status::Found;
  result.semigroup = std::move(s);
  return true;
}

}  // namespace

RandomResult random_semigroup(const PFTarget& pf, const RandomConfig& cfg) {
  RandomResult result;
  const int frob = pf.frob();

  const bool type1 = pf.type() == 1;
  const bool psym = pf.type() == 2 && 2 * pf.pf[0] == pf.pf[1];
  if (type1 || psym) {
    if (type1 && frob % 2 == 0) {
      result.status = RandomResult::Status::DefinitelyEmpty;
      return result;
    }
    NumSemigroup s = an_irreducible(frob);
    if (s.pseudo_frobenius() == pf.pf) {
      result.status = RandomResult::Status::Found;
      result.semigroup = std::move(s);
      result.attempts_used = 1;
    }
    return result;
  }

  if (!check_naive_condition(pf)) {
    result.status = RandomResult::Status::DefinitelyEmpty;
    return result;
  }
  ForcedOutcome root = forced_integers(pf);
  if (root.failed()) {
    result.status = RandomResult::Status::DefinitelyEmpty;
    return result;
  }

  std::mt19937_64 rng(cfg.seed ? *cfg.seed : std::random_device{}());
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    result.attempts_used = attempt;
    ForcedState current = root.state();
    for (;;) {
      const std::vector<int> free = current.free_integers();
      if (free.empty()) {
        if (current.complete() && finish_state(current, pf, result))
          return result;
        break;  // spent attempt
      }
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      const int v = free[pick(rng)];

      ForcedState as_gap = current;
      as_gap.gap[v] = 1;
      ForcedOutcome with_gap = simple_forced_integers(std::move(as_gap), pf);
      if (!with_gap.failed()) {
        current = with_gap.state();
        if (current.complete()) {
          if (finish_state(current, pf, result)) return result;
          break;
        }
        continue;
      }

      ForcedState as_elem = current;
      as_elem.elem[v] = 1;
      ForcedOutcome with_elem = simple_forced_integers(std::move(as_elem), pf);
      if (!with_elem.failed()) {
        current = with_elem.state();
        if (current.complete()) {
          if (finish_state(current, pf, result)) return result;
          break;
        }
        continue;
      }
      break;  // dead end, restart
    }
  }
  result.status = RandomResult::Status::AttemptsExhausted;
  result.semigroup.reset();
  return result;
}

}  // namespace pfsemi
