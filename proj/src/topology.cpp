#include "consent/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

TowerSet closure(const TowerPool& pool, const TowerSet& r, int obs_depth,
                 const TowerSet& universe, Exec exec) {
  if (r.owner != universe.owner)
    throw std::invalid_argument("closure: set and universe owners differ");
  if (obs_depth < 0 || obs_depth > universe.depth || (!r.members.empty() && obs_depth > r.depth))
    throw std::out_of_range("closure: observation depth " + std::to_string(obs_depth) +
                            " out of range");

  // Per-observation-level witness tables from R, sorted for binary search.
  std::vector<std::vector<TowerId>> witness(static_cast<std::size_t>(obs_depth) + 1);
  for (int m = 0; m <= obs_depth; ++m) {
    auto& w = witness[static_cast<std::size_t>(m)];
    for (TowerId t : r.members) w.push_back(pool.project(t, m));
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
  }

  const std::int64_t n = static_cast<std::int64_t>(universe.members.size());
  std::vector<char> in(universe.members.size(), 0);
  bool mismatch = false;

  auto body = [&](std::int64_t i, bool& bad) {
    TowerId y = universe.members[static_cast<std::size_t>(i)];
    const auto& top = witness[static_cast<std::size_t>(obs_depth)];
    bool single = std::binary_search(top.begin(), top.end(), pool.project(y, obs_depth));
    bool literal = true;
    for (int m = 0; m <= obs_depth && literal; ++m) {
      const auto& w = witness[static_cast<std::size_t>(m)];
      literal = std::binary_search(w.begin(), w.end(), pool.project(y, m));
    }
    if (single != literal) bad = true;
    in[static_cast<std::size_t>(i)] = single;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(|| : mismatch)
    for (std::int64_t i = 0; i < n; ++i) body(i, mismatch);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i, mismatch);
  }
  if (mismatch)
    throw std::logic_error("closure: single-witness and all-levels forms disagree");

  TowerSet out;
  out.owner = universe.owner;
  out.depth = universe.depth;
  for (std::size_t i = 0; i < universe.members.size(); ++i)
    if (in[i]) out.members.push_back(universe.members[i]);
  return out;
}

bool is_closed(const TowerPool& pool, const TowerSet& r, int obs_depth,
               const TowerSet& universe, Exec exec) {
  for (TowerId t : r.members)
    if (!universe.contains(t))
      throw std::invalid_argument("is_closed: set is not a subset of the universe");
  return closure(pool, r, obs_depth, universe, exec).members == r.members;
}

} // namespace consent
