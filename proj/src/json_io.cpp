#include "pfsemi/json_io.hpp"

#include <stdexcept>

namespace pfsemi {

using nlohmann::json;

json to_json(const NumSemigroup& s) {
  return json{{"frobenius", s.frobenius()},
              {"gaps", s.gaps()},
              {"min_generators", s.minimal_generators()},
              {"pseudo_frobenius", s.pseudo_frobenius()},
              {"type", s.type_of()},
              {"multiplicity", s.multiplicity()}};
}

json to_json(const ForcedOutcome& outcome) {
  if (outcome.failed()) {
    return json{{"status", "fail"},
                {"forced_gaps", json::array()},
                {"forced_elements", json::array()},
                {"free", json::array()},
                {"fail_witness",
                 json{{"value", outcome.witness().value},
                      {"rule", outcome.witness().rule}}}};
  }
  const ForcedState& st = outcome.state();
  return json{{"status", "ok"},
              {"forced_gaps", st.forced_gaps()},
              {"forced_elements", st.forced_elements()},
              {"free", st.free_integers()}};
}

json to_json(const std::vector<int>& pf, const EnumerationResult& r) {
  json semigroups = json::array();
  for (const auto& s : r.semigroups) semigroups.push_back(to_json(s));
  json out{{"pf", pf},
           {"count", r.semigroups.size()},
           {"semigroups", std::move(semigroups)},
           {"stats",
            json{{"nodes", r.stats.nodes},
                 {"fail_prunes", r.stats.fail_prunes},
                 {"leaves", r.stats.leaves},
                 {"wall_seconds", r.stats.wall_seconds}}}};
  if (r.aborted) out["aborted"] = true;
  return out;
}

json to_json(const OracleIndex& index, bool group_by_pf) {
  json out{{"frobenius", index.frobenius}, {"total", index.total}};
  if (group_by_pf) {
    json groups = json::array();
    for (const auto& [pf, list] : index.groups) {
      json entry{{"pf", pf}, {"count", list.size()}};
      json semigroups = json::array();
      for (const auto& s : list) semigroups.push_back(to_json(s));
      entry["semigroups"] = std::move(semigroups);
      groups.push_back(std::move(entry));
    }
    out["groups"] = std::move(groups);
  }
  return out;
}

json oracle_cache_payload(int frobenius,
                          const std::vector<NumSemigroup>& list) {
  json semigroups = json::array();
  for (const auto& s : list) semigroups.push_back(s.gaps());
  return json{{"frobenius", frobenius}, {"semigroups", std::move(semigroups)}};
}

std::vector<NumSemigroup> oracle_cache_parse(const json& j,
                                             int expected_frobenius) {
  if (!j.contains("frobenius") || j["frobenius"].get<int>() != expected_frobenius)
    throw std::runtime_error("oracle cache: frobenius mismatch");
  std::vector<NumSemigroup> out;
  for (const auto& gaps : j.at("semigroups"))
    out.push_back(NumSemigroup::from_gaps(gaps.get<std::vector<int>>()));
  return out;
}

}  // namespace pfsemi
