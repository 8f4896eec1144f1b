#include "consent/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

namespace {

bool member_of(const std::vector<TowerId>& sorted_set, TowerId t) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), t);
}

void check_pair(const TowerPool& pool, TowerId x, TowerId y) {
  const TowerNode& nx = pool.node(x);
  const TowerNode& ny = pool.node(y);
  if (nx.depth != ny.depth)
    throw std::invalid_argument("forbids: mismatched depths " + std::to_string(nx.depth) + " vs " +
                                std::to_string(ny.depth));
  if (nx.depth < 1) throw std::invalid_argument("forbids: requires depth >= 1");
}

} // namespace

bool forbids(const TowerPool& pool, TowerId x, TowerId y) {
  check_pair(pool, x, y);
  const TowerNode& nx = pool.node(x);
  const TowerNode& ny = pool.node(y);
  const int top = nx.depth - 1;
  return member_of(nx.level_sets[static_cast<std::size_t>(top)][static_cast<std::size_t>(ny.owner)],
                   pool.project(y, top));
}

bool forbids_all_levels(const TowerPool& pool, TowerId x, TowerId y) {
  check_pair(pool, x, y);
  const TowerNode& nx = pool.node(x);
  const TowerNode& ny = pool.node(y);
  for (int m = 0; m < nx.depth; ++m)
    if (!member_of(nx.level_sets[static_cast<std::size_t>(m)][static_cast<std::size_t>(ny.owner)],
                   pool.project(y, m)))
      return false;
  return true;
}

TowerSet forbidden_set(const TowerPool& pool, TowerId x, AgentId target,
                       const TowerSet& universe, Exec exec) {
  if (universe.owner != target)
    throw std::invalid_argument("forbidden_set: universe owner does not match target");
  if (universe.depth != pool.node(x).depth)
    throw std::invalid_argument("forbidden_set: universe depth does not match tower depth");

  const std::int64_t n = static_cast<std::int64_t>(universe.members.size());
  std::vector<char> in(universe.members.size(), 0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      in[static_cast<std::size_t>(i)] = forbids(pool, x, universe.members[static_cast<std::size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      in[static_cast<std::size_t>(i)] = forbids(pool, x, universe.members[static_cast<std::size_t>(i)]);
  }

  TowerSet out;
  out.owner = target;
  out.depth = universe.depth;
  for (std::size_t i = 0; i < universe.members.size(); ++i)
    if (in[i]) out.members.push_back(universe.members[i]);
  return out;
}

TowerId forbid_constructor(TowerPool& pool, BaseId base, TowerId carrier, AgentId target,
                           const TowerSet& r, int result_depth) {
  if (r.owner != target) throw std::invalid_argument("forbid_constructor: set owner must be the target");
  const int depth = result_depth < 0 ? r.depth + 1 : result_depth;
  if (depth < 1) throw std::invalid_argument("forbid_constructor: result depth must be >= 1");
  if (r.depth < depth - 1)
    throw std::invalid_argument("forbid_constructor: set members too shallow for result depth");
  const TowerNode& cn = pool.node(carrier);
  if (cn.depth < depth)
    throw std::invalid_argument("forbid_constructor: carrier too shallow for result depth");

  const int n_agents = pool.space().agent_count();
  std::vector<std::vector<std::vector<TowerId>>> levels(
      static_cast<std::size_t>(depth),
      std::vector<std::vector<TowerId>>(static_cast<std::size_t>(n_agents)));
  for (int m = 0; m < depth; ++m) {
    for (AgentId b = 0; b < n_agents; ++b) {
      if (b == target) {
        auto& set = levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
        for (TowerId t : r.members) set.push_back(pool.project(t, m));
      } else {
        levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)] =
            cn.level_sets[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
      }
    }
  }
  return pool.intern(cn.owner, base, std::move(levels));
}

} // namespace consent
