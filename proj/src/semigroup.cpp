#include "pfsemi/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pfsemi {

namespace {

// Membership profile of the submonoid generated by gens, on [0, window).
std::vector<bool> generated_profile(const std::vector<int>& gens, int window) {
  std::vector<bool> member(window, false);
  member[0] = true;
  for (int x = 1; x < window; ++x) {
    for (int g : gens) {
      if (g <= x && member[x - g]) {
        member[x] = true;
        break;
      }
    }
  }
  return member;
}

}  // namespace

NumSemigroup NumSemigroup::from_generators(const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("from_generators: empty input");
  for (int g : gens)
    if (g <= 0)
      throw std::invalid_argument("from_generators: non-positive generator");
  int d = 0;
  for (int g : gens) d = std::gcd(d, g);
  if (d != 1) throw std::invalid_argument("from_generators: gcd is not 1");

  const int m = *std::min_element(gens.begin(), gens.end());
  const int mx = *std::max_element(gens.begin(), gens.end());
  // Grow the window until it ends in m consecutive members; past that run
  // every integer is a member.
  int window = 2 * mx + 2;
  for (;;) {
    std::vector<bool> member = generated_profile(gens, window);
    bool tail_ok = true;
    for (int x = window - m; x < window; ++x)
      if (!member[x]) {
        tail_ok = false;
        break;
      }
    if (tail_ok) {
      int frob = -1;
      for (int x = window - 1; x >= 0; --x)
        if (!member[x]) {
          frob = x;
          break;
        }
      member.resize(frob + 2);
      if (frob >= 0) member[frob + 1] = true;  // window end
      return NumSemigroup(frob, std::move(member));
    }
    window *= 2;
  }
}

NumSemigroup NumSemigroup::closure(const std::vector<int>& elts, int frob) {
  std::vector<int> gens;
  for (int e : elts)
    if (e > 0) gens.push_back(e);
  if (gens.empty())
    throw std::invalid_argument("closure: no positive element");
  const int m = *std::min_element(gens.begin(), gens.end());
  for (int v = frob + 1; v <= frob + m; ++v) gens.push_back(v);
  return from_generators(gens);
}

bool NumSemigroup::represents_gaps(const std::vector<int>& X) {
  if (X.empty()) return true;
  int mx = 0;
  for (int x : X) {
    if (x <= 0) return false;
    mx = std::max(mx, x);
  }
  std::vector<bool> member(mx + 1, true);
  for (int x : X) member[x] = false;
  // Complement closed under addition; sums beyond mx are members anyway.
  for (int a = 1; a <= mx; ++a) {
    if (!member[a]) continue;
    for (int b = a; a + b <= mx; ++b)
      if (member[b] && !member[a + b]) return false;
  }
  return true;
}

NumSemigroup NumSemigroup::from_gaps(const std::vector<int>& X) {
  if (!represents_gaps(X))
    throw std::invalid_argument("from_gaps: not the gap set of a semigroup");
  if (X.empty()) return naturals();
  const int frob = *std::max_element(X.begin(), X.end());
  std::vector<bool> member(frob + 2, true);
  for (int x : X) member[x] = false;
  return NumSemigroup(frob, std::move(member));
}

NumSemigroup NumSemigroup::naturals() {
  return NumSemigroup(-1, std::vector<bool>{true});
}

std::vector<int> NumSemigroup::gaps() const {
  std::vector<int> out;
  for (int x = 1; x <= frob_; ++x)
    if (!member_[x]) out.push_back(x);
  return out;
}

int NumSemigroup::genus() const {
  int g = 0;
  for (int x = 1; x <= frob_; ++x)
    if (!member_[x]) ++g;
  return g;
}

std::vector<int> NumSemigroup::small_elements() const {
  std::vector<int> out;
  for (int x = 0; x <= frob_ + 1; ++x)
    if (member_[x]) out.push_back(x);
  return out;
}

std::vector<int> NumSemigroup::pseudo_frobenius() const {
  std::vector<int> out;
  if (frob_ < 0) return out;
  for (int x = 1; x <= frob_; ++x) {
    if (member_[x]) continue;
    bool ok = true;
    // x + s > frob is a member automatically, so nonzero s <= frob - x
    // suffice.
    for (int s = 1; s <= frob_ - x; ++s) {
      if (member_[s] && !member_[x + s]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> NumSemigroup::minimal_generators() const {
  if (frob_ < 0) return {1};
  const int m = multiplicity();
  std::vector<int> out;
  // Minimal generators lie in [m, frob+m]: anything larger splits off m.
  for (int x = m; x <= frob_ + m; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int a = m; a <= x - m; ++a) {
      if (contains(a) && contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

int NumSemigroup::multiplicity() const {
  for (int x = 1; x <= frob_ + 1; ++x)
    if (member_[x]) return x;
  return frob_ + 1 > 0 ? frob_ + 1 : 1;
}

bool NumSemigroup::is_irreducible() const {
  if (frob_ < 1) return false;
  const std::vector<int> pf = pseudo_frobenius();
  if (pf == std::vector<int>{frob_}) return true;
  return frob_ % 2 == 0 && pf == std::vector<int>{frob_ / 2, frob_};
}

void canonical_sort(std::vector<NumSemigroup>& list) {
  std::vector<std::pair<std::vector<int>, NumSemigroup>> keyed;
  keyed.reserve(list.size());
  for (auto& s : list) keyed.emplace_back(s.gaps(), std::move(s));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) {
                            return a.first == b.first;
                          }),
              keyed.end());
  list.clear();
  for (auto& [key, s] : keyed) list.push_back(std::move(s));
}

}  // namespace pfsemi
