#include "pfsemi/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "pfsemi/json_io.hpp"

namespace pfsemi {

namespace {

void dfs(int f, int x, std::vector<char>& member,
         std::vector<NumSemigroup>& out) {
  if (x == f) {
    // f must not be a sum of two members.
    for (int a = 1; 2 * a <= f; ++a)
      if (member[a] && member[f - a]) return;
    std::vector<int> gap_set;
    for (int v = 1; v < f; ++v)
      if (!member[v]) gap_set.push_back(v);
    gap_set.push_back(f);
    if (!NumSemigroup::represents_gaps(gap_set)) return;
    out.push_back(NumSemigroup::from_gaps(gap_set));
    return;
  }
  // x is forced into S when it is a sum of two smaller members.
  bool forced = false;
  for (int a = 1; 2 * a <= x; ++a)
    if (member[a] && member[x - a]) {
      forced = true;
      break;
    }
  member[x] = 1;
  dfs(f, x + 1, member, out);
  member[x] = 0;
  if (!forced) dfs(f, x + 1, member, out);
}

std::filesystem::path cache_file(const std::string& dir, int f) {
  return std::filesystem::path(dir) / ("oracle-f" + std::to_string(f) +
                                       ".json");
}

}  // namespace

std::vector<NumSemigroup> all_semigroups_with_frobenius(int f, int bound) {
  if (f < 1 || f > bound)
    throw std::invalid_argument(
        "all_semigroups_with_frobenius: f outside [1, bound]");
  std::vector<NumSemigroup> out;
  std::vector<char> member(f, 0);
  dfs(f, 1, member, out);
  canonical_sort(out);
  return out;
}

OracleIndex build_index(int f, int bound,
                        const std::optional<std::string>& cache_dir) {
  std::vector<NumSemigroup> list;
  bool loaded = false;
  if (cache_dir) {
    const auto path = cache_file(*cache_dir, f);
    std::ifstream in(path);
    if (in) {
      nlohmann::json j;
      in >> j;
      list = oracle_cache_parse(j, f);
      loaded = true;
    }
  }
  if (!loaded) {
    list = all_semigroups_with_frobenius(f, bound);
    if (cache_dir) {
      std::filesystem::create_directories(*cache_dir);
      std::ofstream outf(cache_file(*cache_dir, f));
      outf << oracle_cache_payload(f, list) << "\n";
    }
  }
  OracleIndex index;
  index.frobenius = f;
  index.total = list.size();
  for (auto& s : list) index.groups[s.pseudo_frobenius()].push_back(std::move(s));
  return index;
}

std::vector<NumSemigroup> oracle_spf(const OracleIndex& index,
                                     const std::vector<int>& pf) {
  auto it = index.groups.find(pf);
  if (it == index.groups.end()) return {};
  return it->second;
}

}  // namespace pfsemi
