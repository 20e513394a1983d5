#pragma once

#include <cstdint>
#include <optional>

#include "pfsemi/forced.hpp"
#include "pfsemi/semigroup.hpp"

namespace pfsemi {

struct RandomConfig {
  int max_attempts = 100;
  std::optional<std::uint64_t> seed;  // absent = entropy-seeded
};

struct RandomResult {
  enum class Status {
    Found,              // semigroup holds a witness with PF(S) = pf
    DefinitelyEmpty,    // S(pf) = {} is proven
    AttemptsExhausted,  // no conclusion
  };
  Status status = Status::AttemptsExhausted;
  std::optional<NumSemigroup> semigroup;
  int attempts_used = 0;
};

/// Randomized single-witness search: random walks over the free integers of
/// the forced-integer root, committing each successful propagation, restarted
/// on dead ends. Any returned semigroup is verified to satisfy
/// pseudo_frobenius(S) = pf. Reproducible under a fixed seed.
RandomResult random_semigroup(const PFTarget& pf, const RandomConfig& cfg = {});

}  // namespace pfsemi
