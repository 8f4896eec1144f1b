#include "consent/enumerate.hpp"

#include <algorithm>
#include <map>

namespace consent {

namespace {

Cardinality saturating_shift(const Cardinality& c) {
  // 2^c with saturation.
  if (c.saturated || c.value >= 63) return {0, true};
  return {1ULL << c.value, false};
}

Cardinality saturating_mul(const Cardinality& a, const Cardinality& b) {
  if (a.saturated || b.saturated) return {0, true};
  if (b.value != 0 && a.value > ~0ULL / b.value) return {0, true};
  return {a.value * b.value, false};
}

} // namespace

Cardinality predicted_tower_count(const BaseSpace& space, AgentId owner, int depth) {
  if (depth == 0)
    return {static_cast<unsigned long long>(space.base_count(owner)), false};
  Cardinality c{static_cast<unsigned long long>(space.base_count(owner)), false};
  for (AgentId b = 0; b < space.agent_count(); ++b)
    c = saturating_mul(c, saturating_shift(predicted_tower_count(space, b, depth - 1)));
  return c;
}

namespace {

class Enumerator {
public:
  Enumerator(TowerPool& pool, unsigned long long budget) : pool_(pool), budget_(budget) {}

  TowerSet run(AgentId owner, int depth) {
    // Guard every level the recursion will materialize, not just the top.
    for (int d = 0; d <= depth; ++d) {
      for (AgentId b = 0; b < pool_.space().agent_count(); ++b) {
        if (d == depth && b != owner) continue;
        Cardinality c = predicted_tower_count(pool_.space(), b, d);
        if (c.exceeds(budget_))
          throw BudgetError("enumeration of depth-" + std::to_string(d) + " towers of agent " +
                                pool_.space().agents[static_cast<std::size_t>(b)] +
                                " exceeds budget " + std::to_string(budget_) +
                                " (predicted " + c.str() + ")",
                            c.value, c.saturated);
      }
    }
    return enumerate(owner, depth);
  }

private:
  TowerSet enumerate(AgentId owner, int depth) {
    auto key = std::make_pair(owner, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    TowerSet out;
    out.owner = owner;
    out.depth = depth;
    if (depth == 0) {
      for (BaseId b = 0; b < pool_.space().base_count(owner); ++b)
        out.members.push_back(pool_.intern_base(owner, b));
    } else {
      const int n_agents = pool_.space().agent_count();
      std::vector<TowerSet> lower;
      lower.reserve(static_cast<std::size_t>(n_agents));
      for (AgentId b = 0; b < n_agents; ++b) lower.push_back(enumerate(b, depth - 1));

      // Odometer over per-agent subset masks, last agent fastest; together
      // with ascending bases this fixes the canonical construction order.
      std::vector<unsigned long long> mask(static_cast<std::size_t>(n_agents), 0);
      for (BaseId base = 0; base < pool_.space().base_count(owner); ++base) {
        std::fill(mask.begin(), mask.end(), 0ULL);
        while (true) {
          std::vector<std::vector<TowerId>> top(static_cast<std::size_t>(n_agents));
          for (AgentId b = 0; b < n_agents; ++b)
            for (std::size_t i = 0; i < lower[static_cast<std::size_t>(b)].members.size(); ++i)
              if (mask[static_cast<std::size_t>(b)] & (1ULL << i))
                top[static_cast<std::size_t>(b)].push_back(lower[static_cast<std::size_t>(b)].members[i]);
          out.members.push_back(pool_.intern_from_top(owner, base, top, depth));

          int pos = n_agents - 1;
          while (pos >= 0) {
            mask[static_cast<std::size_t>(pos)] += 1;
            if (mask[static_cast<std::size_t>(pos)] <
                (1ULL << lower[static_cast<std::size_t>(pos)].members.size()))
              break;
            mask[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
    std::sort(out.members.begin(), out.members.end());

    Cardinality c = predicted_tower_count(pool_.space(), owner, depth);
    if (!c.saturated && c.value != out.members.size())
      throw std::logic_error("enumeration count disagrees with the recurrence prediction");

    memo_.emplace(key, out);
    return out;
  }

  TowerPool& pool_;
  unsigned long long budget_;
  std::map<std::pair<AgentId, int>, TowerSet> memo_;
};

} // namespace

TowerSet enumerate_towers(TowerPool& pool, AgentId owner, int depth, unsigned long long budget) {
  if (owner < 0 || owner >= pool.space().agent_count())
    throw std::invalid_argument("enumerate_towers: bad owner");
  if (depth < 0) throw std::invalid_argument("enumerate_towers: negative depth");
  return Enumerator(pool, budget).run(owner, depth);
}

} // namespace consent
