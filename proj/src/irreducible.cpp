#include "pfsemi/irreducible.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace pfsemi {

namespace {

enum : char { kUnknown = 0, kIn = 1, kOut = 2 };

// Assign status[v] = val and propagate: members close under addition, gaps
// close under the mirror rule x in S <=> f - x not in S, and a member w below
// a gap v forces v - w to be a gap. Returns false on contradiction.
bool assign(std::vector<char>& st, int f, int v, char val) {
  if (v < 1 || v > f + 1) return true;
  if (st[v] == val) return true;
  if (st[v] != kUnknown) return false;
  st[v] = val;
  // The mirror rule x in S <=> f - x not in S exempts f/2 (even f), which
  // mirrors onto itself and is always a gap.
  if (val == kIn) {
    if (v <= f - 1 && f - v != v && !assign(st, f, f - v, kOut)) return false;
    for (int w = 1; w + v <= f + 1; ++w)
      if (st[w] == kIn && !assign(st, f, v + w, kIn)) return false;
  } else {
    if (v <= f - 1 && f - v != v && !assign(st, f, f - v, kIn)) return false;
    for (int w = 1; w < v; ++w)
      if (st[w] == kIn && !assign(st, f, v - w, kOut)) return false;
  }
  return true;
}

void dfs(std::vector<char> st, int f, int x,
         std::vector<NumSemigroup>& out) {
  const int last = (f - 1) / 2;
  while (x <= last && st[x] != kUnknown) ++x;
  if (x > last) {
    std::vector<int> gap_set;
    for (int v = 1; v <= f; ++v)
      if (st[v] == kOut) gap_set.push_back(v);
    if (!NumSemigroup::represents_gaps(gap_set)) return;
    NumSemigroup s = NumSemigroup::from_gaps(gap_set);
    if (s.frobenius() == f && s.is_irreducible()) out.push_back(std::move(s));
    return;
  }
  {
    std::vector<char> branch = st;
    if (assign(branch, f, x, kIn)) dfs(std::move(branch), f, x + 1, out);
  }
  if (assign(st, f, x, kOut)) dfs(std::move(st), f, x + 1, out);
}

}  // namespace

std::vector<NumSemigroup> irreducibles_with_frobenius(int f) {
  if (f < 1)
    throw std::invalid_argument("irreducibles_with_frobenius: f must be >= 1");
  std::vector<NumSemigroup> out;
  std::vector<char> st(f + 2, kUnknown);
  st[f] = kOut;
  st[f + 1] = kIn;
  bool viable = true;
  if (f % 2 == 0) viable = assign(st, f, f / 2, kOut);
  if (viable) dfs(std::move(st), f, 1, out);
  canonical_sort(out);
  return out;
}

std::vector<NumSemigroup> irreducibles_containing(
    int f, const std::vector<int>& required) {
  std::vector<NumSemigroup> out;
  for (auto& s : irreducibles_with_frobenius(f)) {
    bool ok = true;
    for (int r : required)
      if (!s.contains(r)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

EnumerationResult enumerate_via_irreducibles(const PFTarget& pf) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult result;
  auto finish = [&]() -> EnumerationResult& {
    canonical_sort(result.semigroups);
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  };

  const int frob = pf.frob();
  const int n = pf.type();
  if (n >= 2 && !check_naive_condition(pf)) return finish();
  ForcedOutcome root = forced_integers(pf);
  if (root.failed()) return finish();
  const ForcedState& forced = root.state();

  // Every S in S(pf) sits below an irreducible with the same Frobenius
  // number that contains its pseudo-Frobenius numbers in (frob/2, frob);
  // forced elements are contained in every S, hence in every such cover.
  std::vector<int> required = forced.forced_elements();
  for (int g : pf.pf)
    if (2 * g > frob && g < frob) required.push_back(g);

  std::vector<NumSemigroup> worklist = irreducibles_containing(frob, required);
  std::set<std::vector<int>> visited;
  for (const auto& s : worklist) visited.insert(s.gaps());

  while (!worklist.empty()) {
    ++result.stats.nodes;
    NumSemigroup s = std::move(worklist.back());
    worklist.pop_back();
    if (s.pseudo_frobenius() == pf.pf) result.semigroups.push_back(s);
    for (int x : s.minimal_generators()) {
      if (x >= frob || forced.elem[x]) continue;
      std::vector<int> child_gaps = s.gaps();
      child_gaps.insert(
          std::lower_bound(child_gaps.begin(), child_gaps.end(), x), x);
      // Removing a minimal generator below frob keeps the semigroup property
      // and the Frobenius number.
      NumSemigroup child = NumSemigroup::from_gaps(child_gaps);
      bool has_difference = false;  // chain condition on the removed x
      for (int g : pf.pf)
        if (child.contains(g - x)) {
          has_difference = true;
          break;
        }
      if (!has_difference) continue;
      bool pf_ok = true;  // chain condition on the child's extra PFs
      for (int fp : child.pseudo_frobenius()) {
        if (fp == frob) continue;
        bool covered = false;
        for (int j = 0; j < n - 1; ++j)
          if (child.contains(pf.pf[j] - fp)) {
            covered = true;
            break;
          }
        if (!covered) {
          pf_ok = false;
          break;
        }
      }
      if (!pf_ok) continue;
      if (visited.insert(child_gaps).second)
        worklist.push_back(std::move(child));
    }
  }
  return finish();
}

}  // namespace pfsemi
