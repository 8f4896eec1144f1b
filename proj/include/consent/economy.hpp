#ifndef CONSENT_ECONOMY_HPP
#define CONSENT_ECONOMY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "consent/extended_real.hpp"
#include "consent/relation.hpp"
#include "consent/tower.hpp"

namespace consent {

/// One tower per agent, all at the economy's depth.
struct Profile {
  std::vector<TowerId> choices;
};

/// Per ordered pair (of, over): which depth-(D-1) towers of `over` may be
/// forbidden by `of`. Predicates are intensional so the ambient space never
/// has to be materialized; pairs default to the empty right (may forbid
/// nothing).
class RightsStructure {
public:
  using Pred = std::function<bool(const TowerPool&, TowerId)>;

  explicit RightsStructure(int agent_count)
      : n_(agent_count),
        preds_(static_cast<std::size_t>(agent_count) * static_cast<std::size_t>(agent_count),
               [](const TowerPool&, TowerId) { return false; }) {}

  void set(AgentId of, AgentId over, Pred p) {
    preds_[static_cast<std::size_t>(of) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(over)] = std::move(p);
  }

  bool allows(const TowerPool& pool, AgentId of, AgentId over, TowerId y) const {
    return preds_[static_cast<std::size_t>(of) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(over)](pool, y);
  }

  static Pred allow_all() {
    return [](const TowerPool&, TowerId) { return true; };
  }
  static Pred allow_none() {
    return [](const TowerPool&, TowerId) { return false; };
  }

private:
  int n_;
  std::vector<Pred> preds_;
};

/// A designated agent with one punishment flag per other agent adjoined to
/// its base goods, and a penal code. The code is a function of the whole
/// profile; a constant function recovers the static list form.
struct GovernmentConfig {
  AgentId gov = -1;
  // y in S_a(profile)? y is a depth-D tower of agent a.
  std::function<bool(const TowerPool&, const Profile&, AgentId, TowerId)> penal_code;
  // Does this base label of the government carry the punishment flag for a?
  std::function<bool(BaseId, AgentId)> punishes;
};

struct EconomySpec {
  int agent_count = 0;
  int depth = 1;
  std::vector<std::function<ExtReal(const std::vector<BaseId>&)>> base_utility;
  std::optional<RightsStructure> rights;
  bool non_aggression = false;
  bool self_aggression = true; // does "exists beta" in the NAP include beta == alpha?
  std::optional<GovernmentConfig> government;
  // Optional extra infeasibility filter (the exchange budget constraint).
  std::function<bool(const TowerPool&, const Profile&, AgentId)> infeasible;
};

struct RightsWitness {
  AgentId over = -1;
  TowerId offending = kNoTower; // depth-(D-1) tower forbidden without the right
};

struct GovernmentVerdict {
  std::vector<char> punished; // per agent; the government's own entry stays 0
  bool gov_legal = true;
  AgentId illegal_witness = -1; // an agent in the penal code left unpunished
};

/// Throws std::invalid_argument unless the profile has one tower per agent,
/// each owned by that agent at the spec's depth.
void validate_profile(const EconomySpec& spec, const TowerPool& pool, const Profile& profile);

/// A tower forbidden by alpha's choice yet outside R_{alpha,beta}, or
/// nullopt. Requires a configured rights structure.
std::optional<RightsWitness> rights_violation(const EconomySpec& spec, const TowerPool& pool,
                                              const Profile& profile, AgentId alpha);

/// Some beta whose choice forbids alpha's, else nullopt.
std::optional<AgentId> aggression_witness(const EconomySpec& spec, const TowerPool& pool,
                                          const Profile& profile, AgentId alpha);

/// Punishment verdicts for every agent plus the government's own legality.
GovernmentVerdict government_filter(const EconomySpec& spec, const TowerPool& pool,
                                    const Profile& profile);

/// The minarchy penal code: S_a(profile) is the union over beta of the sets
/// forbidden by beta's choice, membership tested pointwise.
std::function<bool(const TowerPool&, const Profile&, AgentId, TowerId)>
minarchy_penal_code(bool include_self = true);

/// Filters in order (rights, non-aggression, government, infeasibility),
/// then the base utility. Each filter can only force -inf, so the order is
/// observationally irrelevant; tests pin that down.
ExtReal evaluate_utility(const EconomySpec& spec, const TowerPool& pool, const Profile& profile,
                         AgentId alpha);

} // namespace consent

#endif
