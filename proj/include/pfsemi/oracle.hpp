#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfsemi/semigroup.hpp"

namespace pfsemi {

inline constexpr int kDefaultOracleBound = 29;

/// Exhaustive ground truth at one Frobenius number: all semigroups grouped by
/// their pseudo-Frobenius set.
struct OracleIndex {
  int frobenius = 0;
  std::map<std::vector<int>, std::vector<NumSemigroup>> groups;
  std::size_t total = 0;
};

/// Every numerical semigroup with Frobenius number f, duplicate free,
/// canonically sorted. Throws std::invalid_argument when f < 1 or f > bound.
std::vector<NumSemigroup> all_semigroups_with_frobenius(
    int f, int bound = kDefaultOracleBound);

/// Groups all_semigroups_with_frobenius(f) by pseudo-Frobenius set. When
/// cache_dir is given, reads/writes oracle-f<f>.json there.
OracleIndex build_index(int f, int bound = kDefaultOracleBound,
                        const std::optional<std::string>& cache_dir = {});

/// The semigroups whose pseudo-Frobenius set is exactly pf, or empty.
std::vector<NumSemigroup> oracle_spf(const OracleIndex& index,
                                     const std::vector<int>& pf);

}  // namespace pfsemi
