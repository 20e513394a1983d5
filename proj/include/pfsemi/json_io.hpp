#pragma once

#include <json.hpp>

#include "pfsemi/enumerate.hpp"
#include "pfsemi/forced.hpp"
#include "pfsemi/oracle.hpp"
#include "pfsemi/semigroup.hpp"

namespace pfsemi {

// Wire schemas used by the CLI and the oracle cache. Field names are fixed.

nlohmann::json to_json(const NumSemigroup& s);
nlohmann::json to_json(const ForcedOutcome& outcome);
nlohmann::json to_json(const std::vector<int>& pf, const EnumerationResult& r);
nlohmann::json to_json(const OracleIndex& index, bool group_by_pf);

/// Oracle cache file payload: {"frobenius": f, "semigroups": [[gaps...]...]}.
nlohmann::json oracle_cache_payload(int frobenius,
                                    const std::vector<NumSemigroup>& list);
std::vector<NumSemigroup> oracle_cache_parse(const nlohmann::json& j,
                                             int expected_frobenius);

}  // namespace pfsemi
