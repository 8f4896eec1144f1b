#include "consent/economy.hpp"

#include <stdexcept>

namespace consent {

void validate_profile(const EconomySpec& spec, const TowerPool& pool, const Profile& profile) {
  if (static_cast<int>(profile.choices.size()) != spec.agent_count)
    throw std::invalid_argument("profile: wrong number of choices");
  for (AgentId a = 0; a < spec.agent_count; ++a) {
    const TowerNode& n = pool.node(profile.choices[static_cast<std::size_t>(a)]);
    if (n.owner != a) throw std::invalid_argument("profile: choice " + std::to_string(a) +
                                                  " is not owned by that agent");
    if (n.depth != spec.depth)
      throw std::invalid_argument("profile: choice of agent " + std::to_string(a) +
                                  " has depth " + std::to_string(n.depth) + ", expected " +
                                  std::to_string(spec.depth));
  }
}

std::optional<RightsWitness> rights_violation(const EconomySpec& spec, const TowerPool& pool,
                                              const Profile& profile, AgentId alpha) {
  if (!spec.rights) throw std::logic_error("rights_violation: no rights structure configured");
  const TowerNode& n = pool.node(profile.choices[static_cast<std::size_t>(alpha)]);
  if (n.depth < 1) return std::nullopt; // nothing forbidden at depth 0
  const auto& top = n.level_sets[static_cast<std::size_t>(n.depth - 1)];
  for (AgentId beta = 0; beta < spec.agent_count; ++beta)
    for (TowerId y : top[static_cast<std::size_t>(beta)])
      if (!spec.rights->allows(pool, alpha, beta, y)) return RightsWitness{beta, y};
  return std::nullopt;
}

std::optional<AgentId> aggression_witness(const EconomySpec& spec, const TowerPool& pool,
                                          const Profile& profile, AgentId alpha) {
  if (spec.depth < 1) throw std::logic_error("aggression_witness: requires depth >= 1");
  for (AgentId beta = 0; beta < spec.agent_count; ++beta) {
    if (beta == alpha && !spec.self_aggression) continue;
    if (forbids(pool, profile.choices[static_cast<std::size_t>(beta)],
                profile.choices[static_cast<std::size_t>(alpha)]))
      return beta;
  }
  return std::nullopt;
}

GovernmentVerdict government_filter(const EconomySpec& spec, const TowerPool& pool,
                                    const Profile& profile) {
  if (!spec.government) throw std::logic_error("government_filter: no government configured");
  const GovernmentConfig& gov = *spec.government;
  GovernmentVerdict v;
  v.punished.assign(static_cast<std::size_t>(spec.agent_count), 0);
  BaseId gov_base = pool.node(profile.choices[static_cast<std::size_t>(gov.gov)]).base;
  for (AgentId a = 0; a < spec.agent_count; ++a) {
    if (a == gov.gov) continue;
    bool flag = gov.punishes(gov_base, a);
    v.punished[static_cast<std::size_t>(a)] = flag;
    if (!flag &&
        gov.penal_code(pool, profile, a, profile.choices[static_cast<std::size_t>(a)])) {
      if (v.gov_legal) {
        v.gov_legal = false;
        v.illegal_witness = a;
      }
    }
  }
  return v;
}

std::function<bool(const TowerPool&, const Profile&, AgentId, TowerId)>
minarchy_penal_code(bool include_self) {
  return [include_self](const TowerPool& pool, const Profile& profile, AgentId a, TowerId y) {
    for (AgentId beta = 0; beta < static_cast<AgentId>(profile.choices.size()); ++beta) {
      if (beta == a && !include_self) continue;
      if (forbids(pool, profile.choices[static_cast<std::size_t>(beta)], y)) return true;
    }
    return false;
  };
}

ExtReal evaluate_utility(const EconomySpec& spec, const TowerPool& pool, const Profile& profile,
                         AgentId alpha) {
  validate_profile(spec, pool, profile);

  if (spec.rights && rights_violation(spec, pool, profile, alpha)) return ExtReal::neg_inf();
  if (spec.non_aggression && aggression_witness(spec, pool, profile, alpha))
    return ExtReal::neg_inf();
  if (spec.government) {
    GovernmentVerdict v = government_filter(spec, pool, profile);
    if (alpha == spec.government->gov) {
      if (!v.gov_legal) return ExtReal::neg_inf();
    } else if (v.punished[static_cast<std::size_t>(alpha)]) {
      return ExtReal::neg_inf();
    }
  }
  if (spec.infeasible && spec.infeasible(pool, profile, alpha)) return ExtReal::neg_inf();

  std::vector<BaseId> bases(static_cast<std::size_t>(spec.agent_count));
  for (AgentId a = 0; a < spec.agent_count; ++a)
    bases[static_cast<std::size_t>(a)] = pool.node(profile.choices[static_cast<std::size_t>(a)]).base;
  return spec.base_utility[static_cast<std::size_t>(alpha)](bases);
}

} // namespace consent
