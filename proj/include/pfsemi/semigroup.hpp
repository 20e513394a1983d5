#pragma once

#include <compare>
#include <vector>

namespace pfsemi {

/// A numerical semigroup: a cofinite submonoid of (N,+), represented by its
/// membership profile on the window [0, F+2). Every integer greater than the
/// Frobenius number F is implicitly a member. F = -1 encodes S = N.
///
/// Values are immutable after construction and safe to share between threads.
class NumSemigroup {
 public:
  /// Smallest numerical semigroup containing `gens`.
  /// Throws std::invalid_argument if gens is empty, contains a non-positive
  /// integer, or gcd(gens) != 1.
  static NumSemigroup from_generators(const std::vector<int>& gens);

  /// Least numerical semigroup containing the positive members of `elts` and
  /// every integer greater than `frob`. Equivalent to generating by
  /// positive(elts) together with the run [frob+1 .. frob+min(positive(elts))].
  /// Throws std::invalid_argument when elts has no positive member.
  static NumSemigroup closure(const std::vector<int>& elts, int frob);

  /// True iff X is the gap set of some numerical semigroup, i.e. the
  /// complement of X in N contains 0 and is closed under addition.
  static bool represents_gaps(const std::vector<int>& X);

  /// The unique semigroup with gap set X. Throws std::invalid_argument when
  /// represents_gaps(X) is false.
  static NumSemigroup from_gaps(const std::vector<int>& X);

  /// S = N (frobenius -1, no gaps).
  static NumSemigroup naturals();

  int frobenius() const { return frob_; }
  bool contains(long long x) const {
    if (x < 0) return false;
    if (x > frob_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  /// Positive integers not in S, ascending.
  std::vector<int> gaps() const;
  int genus() const;

  /// Members of S not exceeding F(S)+1, ascending. {0} for S = N.
  std::vector<int> small_elements() const;

  /// Gaps x with x + s in S for every nonzero s in S; empty for S = N.
  /// max(PF(S)) = F(S) whenever S != N.
  std::vector<int> pseudo_frobenius() const;

  /// The unique minimal generating set.
  std::vector<int> minimal_generators() const;

  int multiplicity() const;
  int type_of() const { return static_cast<int>(pseudo_frobenius().size()); }

  /// PF(S) = {F} (symmetric) or {F/2, F} (pseudo-symmetric).
  bool is_irreducible() const;

  bool operator==(const NumSemigroup& o) const {
    return frob_ == o.frob_ && member_ == o.member_;
  }

 private:
  NumSemigroup(int frob, std::vector<bool> member)
      : frob_(frob), member_(std::move(member)) {}

  int frob_;                  // -1 for N
  std::vector<bool> member_;  // size frob_+2, member_[0] = true
};

/// Canonical order: lexicographic on sorted gap lists. Deterministic output
/// order across runs and parallel schedules.
void canonical_sort(std::vector<NumSemigroup>& list);

}  // namespace pfsemi
