#pragma once

#include <vector>

#include "pfsemi/enumerate.hpp"
#include "pfsemi/forced.hpp"
#include "pfsemi/semigroup.hpp"

namespace pfsemi {

/// All irreducible numerical semigroups with Frobenius number f, canonically
/// sorted. f odd gives the symmetric ones, f even the pseudo-symmetric ones.
std::vector<NumSemigroup> irreducibles_with_frobenius(int f);

/// The sublist of irreducibles_with_frobenius(f) containing every member of
/// `required`.
std::vector<NumSemigroup> irreducibles_containing(
    int f, const std::vector<int>& required);

/// Enumerates S(pf) by descending from irreducible semigroups with Frobenius
/// frob: seeds are the irreducibles containing the forced elements (and the
/// pseudo-Frobenius candidates in (frob/2, frob)); children remove one
/// minimal generator at a time subject to the chain conditions. Independent
/// of the tree method; used for cross-validation.
EnumerationResult enumerate_via_irreducibles(const PFTarget& pf);

}  // namespace pfsemi
