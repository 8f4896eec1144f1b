#ifndef CONSENT_SEARCH_HPP
#define CONSENT_SEARCH_HPP

#include <vector>

#include "consent/exchange.hpp"

namespace consent {

constexpr unsigned long long kDefaultProfileBudget = 1000000ULL;

struct BestResponse {
  std::vector<TowerId> argmax; // every tie, canonical order
  ExtReal value = ExtReal::neg_inf();
};

/// Argmax of alpha's utility over the family, holding the rest of the
/// profile fixed. All ties are returned.
BestResponse best_response(const EconomySpec& econ, const TowerPool& pool, const Profile& profile,
                           AgentId alpha, const TowerSet& family, Exec exec = Exec::Parallel);

struct EquilibriumReport {
  std::vector<Profile> equilibria;
  std::vector<std::vector<ExtReal>> utilities; // per equilibrium, per agent
  std::vector<std::size_t> family_sizes;
  unsigned long long profiles_scanned = 0;

  bool empty() const { return equilibria.empty(); }
};

/// Exact pure-strategy Nash enumeration over the product of the declared
/// families. Refuses with BudgetError when the product exceeds the budget.
EquilibriumReport nash_enumerate(const EconomySpec& econ, const TowerPool& pool,
                                 const std::vector<TowerSet>& families,
                                 unsigned long long budget = kDefaultProfileBudget,
                                 Exec exec = Exec::Parallel);

struct WalrasEquilibrium {
  std::size_t price_index = 0;                // into the spec's dictionary
  std::vector<std::vector<int>> allocation;   // [agent][good]
};

/// Competitive equilibria on the discrete grid: every agent's bundle
/// maximizes its utility within the exact budget p.x <= p.w, and markets
/// clear exactly. Scans the whole dictionary.
std::vector<WalrasEquilibrium> walrasian_oracle(const ExchangeSpec& spec,
                                                unsigned long long budget = kDefaultProfileBudget,
                                                Exec exec = Exec::Parallel);

struct ComparatorRow {
  std::size_t eq_index = 0;
  bool representable = false;
  std::string note;
  Profile candidate;            // meaningful when representable
  bool survives = false;
  AgentId deviator = -1;        // first agent with a profitable deviation
  TowerId deviation = kNoTower;
  ExtReal candidate_value = ExtReal::neg_inf();
  ExtReal deviation_value = ExtReal::neg_inf();
};

/// Maps each Walrasian equilibrium to a candidate consentified profile
/// (pricey family towers at the equilibrium price, takings decomposed from
/// the allocation: own endowment first, then others in agent order) and
/// records whether the candidate survives the best-response test.
std::vector<ComparatorRow> consentification_comparator(
    const ExchangeEconomy& xeco, const TowerPool& pool, const std::vector<TowerSet>& families,
    const std::vector<std::vector<TowerSet>>& price_sets,
    const std::vector<WalrasEquilibrium>& walras, Exec exec = Exec::Parallel);

} // namespace consent

#endif
