#include "pfsemi/forced.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace pfsemi {

namespace {

std::vector<int> marked(const std::vector<char>& mask, int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

// Marks every divisor of every already-marked value.
void close_under_divisors(std::vector<char>& mask, int hi) {
  std::vector<int> values = marked(mask, 1, hi);
  for (int v : values) {
    for (int d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        mask[d] = 1;
        mask[v / d] = 1;
      }
    }
  }
}

}  // namespace

PFTarget PFTarget::from_sorted(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("PFTarget: empty set");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1)
      throw std::invalid_argument("PFTarget: entries must be positive");
    if (i > 0 && values[i] <= values[i - 1])
      throw std::invalid_argument("PFTarget: entries must strictly increase");
  }
  return PFTarget{std::move(values)};
}

bool PFTarget::contains(int v) const {
  return std::binary_search(pf.begin(), pf.end(), v);
}

std::vector<int> ForcedState::forced_gaps() const {
  std::vector<int> out;
  for (int v = 1; v <= frob; ++v)
    if (gap[v]) out.push_back(v);
  return out;
}

std::vector<int> ForcedState::forced_elements() const {
  std::vector<int> out;
  for (int v = 0; v <= frob + 1; ++v)
    if (elem[v]) out.push_back(v);
  return out;
}

std::vector<int> ForcedState::free_integers() const {
  std::vector<int> out;
  for (int v = 1; v <= frob; ++v)
    if (!gap[v] && !elem[v]) out.push_back(v);
  return out;
}

bool ForcedState::complete() const {
  if (!elem[0] || !elem[frob + 1]) return false;
  for (int v = 1; v <= frob; ++v)
    if (!gap[v] && !elem[v]) return false;
  return true;
}

bool check_naive_condition(const PFTarget& pf) {
  const int n = pf.type();
  return pf.pf[0] >= pf.pf[n - 1] - pf.pf[n - 2];
}

ForcedOutcome starting_forced_gaps(const PFTarget& pf) {
  const int frob = pf.frob();
  const int n = pf.type();
  ForcedState st(frob);
  for (int v = 1; v <= n; ++v) st.gap[v] = 1;  // m(S) >= t(S)+1
  for (int g : pf.pf) st.gap[g] = 1;
  // Differences g_i - c with c in the closure of the preceding targets.
  for (int i = 1; i < n; ++i) {
    std::vector<int> prefix(pf.pf.begin(), pf.pf.begin() + i);
    NumSemigroup c = NumSemigroup::closure(prefix, pf.pf[i]);
    for (int e : c.small_elements()) {
      int d = pf.pf[i] - e;
      if (d > 0) st.gap[d] = 1;
    }
  }
  close_under_divisors(st.gap, frob);
  // Exclusion: a gap x must have f - x in S for some pseudo-Frobenius f.
  for (int x = 1; x <= frob; ++x) {
    if (!st.gap[x] || pf.contains(x)) continue;
    bool possible = false;
    for (int f : pf.pf) {
      int d = f - x;
      if (d > 0 && !st.gap[d]) {
        possible = true;
        break;
      }
    }
    if (!possible)
      return ForcedOutcome::fail(
          x, "forced gap has no pseudo-Frobenius difference left in S");
  }
  return ForcedOutcome::ok(std::move(st));
}

ForcedOutcome further_forced_gaps(const ForcedState& state) {
  const int frob = state.frob;
  std::vector<char> fresh(frob + 2, 0);
  const std::vector<int> elems = state.forced_elements();
  for (int g = 1; g <= frob; ++g) {
    if (!state.gap[g]) continue;
    for (int e : elems) {
      if (e >= g) break;
      fresh[g - e] = 1;
    }
  }
  close_under_divisors(fresh, frob);
  ForcedState out = state;
  for (int v = 1; v <= frob; ++v) {
    if (!fresh[v]) continue;
    if (state.elem[v])
      return ForcedOutcome::fail(v, "forced gap is already a forced element");
    out.gap[v] = 1;
  }
  return ForcedOutcome::ok(std::move(out));
}

ForcedOutcome further_forced_elements(const ForcedState& state,
                                      const PFTarget& pf) {
  const int frob = state.frob;
  ForcedState out = state;
  std::vector<char> add(frob + 2, 0);

  // Big elements: below the least non-gap m, frob - i is either an element
  // or pseudo-Frobenius.
  int m = 1;
  while (m <= frob && state.gap[m]) ++m;
  for (int i = 1; i < m; ++i) {
    int v = frob - i;
    if (v < 0) break;
    if (!pf.contains(v)) add[v] = 1;
  }

  // Exclusion, direct: a gap x with exactly one viable difference f - x
  // forces that difference to be an element. A difference of 0 is already
  // an element. A gap outside PF with no viable difference would be a
  // pseudo-Frobenius number of every completion: contradiction.
  for (int x = 1; x <= frob; ++x) {
    if (!state.gap[x]) continue;
    int viable = 0, value = -1;
    for (int f : pf.pf) {
      int d = f - x;
      if (d >= 0 && !state.gap[d]) {
        ++viable;
        value = d;
      }
    }
    if (viable == 0)
      return ForcedOutcome::fail(
          x, "forced gap has no pseudo-Frobenius difference left in S");
    if (viable == 1 && value > 0) add[value] = 1;
  }

  // Exclusion, reverse: if every positive f - x is a forced gap, x cannot be
  // a gap.
  for (int x = 1; x <= frob - 1; ++x) {
    if (state.gap[x] || state.elem[x] || add[x]) continue;
    bool all_gaps = true;
    for (int f : pf.pf) {
      int d = f - x;
      if (d > 0 && !state.gap[d]) {
        all_gaps = false;
        break;
      }
    }
    if (all_gaps) add[x] = 1;
  }

  for (int v = 0; v <= frob + 1; ++v)
    if (add[v]) out.elem[v] = 1;

  // Close the element side under truncated addition, so it stays the
  // small-element set of a numerical semigroup.
  std::vector<int> positives;
  for (int v = 1; v <= frob + 1; ++v)
    if (out.elem[v]) positives.push_back(v);
  if (!positives.empty()) {
    NumSemigroup c = NumSemigroup::closure(positives, frob);
    for (int v = 0; v <= frob + 1; ++v)
      if (c.contains(v)) out.elem[v] = 1;
  }

  for (int v = 1; v <= frob; ++v)
    if (out.elem[v] && state.gap[v])
      return ForcedOutcome::fail(v,
                                 "forced element is already a forced gap");
  return ForcedOutcome::ok(std::move(out));
}

ForcedOutcome simple_forced_integers(ForcedState start, const PFTarget& pf) {
  for (;;) {
    bool changed = false;
    ForcedOutcome g = further_forced_gaps(start);
    if (g.failed()) return g;
    if (g.state().gap != start.gap) changed = true;
    start = g.state();

    ForcedOutcome e = further_forced_elements(start, pf);
    if (e.failed()) return e;
    if (e.state().elem != start.elem) changed = true;
    start = e.state();

    if (!changed) return ForcedOutcome::ok(std::move(start));
  }
}

ForcedOutcome simple_forced_integers(const std::vector<int>& fg,
                                     const std::vector<int>& fe,
                                     const PFTarget& pf) {
  ForcedState st(pf.frob());
  for (int v : fg) st.gap[v] = 1;
  for (int v : fe) st.elem[v] = 1;
  return simple_forced_integers(std::move(st), pf);
}

std::vector<int> non_admissible(const ForcedState& state, const PFTarget& pf) {
  const int frob = state.frob;
  std::vector<char> admissible(frob + 1, 0);
  for (int v = 1; v <= frob; ++v)
    if (state.elem[v]) admissible[v] = 1;

  std::list<int> totest;
  for (int v : state.free_integers()) totest.push_back(v);
  while (!totest.empty()) {
    const int v = totest.front();
    ForcedState probe = state;
    probe.elem[v] = 1;
    ForcedOutcome r = simple_forced_integers(std::move(probe), pf);
    if (!r.failed()) {
      for (int w = 1; w <= frob; ++w)
        if (r.state().elem[w]) admissible[w] = 1;
      totest.remove_if([&](int w) { return admissible[w]; });
    } else {
      totest.pop_front();
    }
  }

  std::vector<int> out;
  for (int v = 1; v <= frob; ++v)
    if (!admissible[v]) out.push_back(v);
  return out;
}

ForcedOutcome forced_integers(const PFTarget& pf, bool saturate) {
  const int frob = pf.frob();
  if (pf.type() == 1) {
    ForcedState st(frob);
    for (int d = 1; d <= frob; ++d)
      if (frob % d == 0) st.gap[d] = 1;
    st.elem[0] = 1;
    st.elem[frob + 1] = 1;
    return ForcedOutcome::ok(std::move(st));
  }
  ForcedOutcome sfg = starting_forced_gaps(pf);
  if (sfg.failed()) return sfg;
  ForcedOutcome fints = simple_forced_integers(sfg.state(), pf);
  for (;;) {
    if (fints.failed()) return fints;
    if (fints.state().complete()) return fints;
    const std::vector<int> nad = non_admissible(fints.state(), pf);
    ForcedState next = fints.state();
    bool grew = false;
    for (int v : nad) {
      if (!next.gap[v]) {
        next.gap[v] = 1;
        grew = true;
      }
    }
    ForcedOutcome rerun = simple_forced_integers(std::move(next), pf);
    if (!saturate || !grew) return rerun;
    fints = std::move(rerun);
  }
}

ForcedOutcome forced_integers_quick(const PFTarget& pf) {
  ForcedOutcome sfg = starting_forced_gaps(pf);
  if (sfg.failed()) return sfg;
  return simple_forced_integers(sfg.state(), pf);
}

}  // namespace pfsemi
