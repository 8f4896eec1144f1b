#ifndef CONSENT_ENUMERATE_HPP
#define CONSENT_ENUMERATE_HPP

#include <string>

#include "consent/errors.hpp"
#include "consent/tower.hpp"

namespace consent {

constexpr unsigned long long kDefaultEnumerationBudget = 1000000ULL;

/// Cardinality predicted by the recurrence |X^{n+1}_a| = |X^0_a| * prod_b 2^|X^n_b|.
/// Saturates once any exponent reaches 63 bits; saturated values compare
/// as larger than any budget.
struct Cardinality {
  unsigned long long value = 0;
  bool saturated = false;

  bool exceeds(unsigned long long budget) const { return saturated || value > budget; }
  std::string str() const { return saturated ? ">= 2^63" : std::to_string(value); }
};

Cardinality predicted_tower_count(const BaseSpace& space, AgentId owner, int depth);

/// All depth-`depth` towers of `owner`, in canonical order. Refuses with a
/// BudgetError (carrying the predicted cardinality) when the prediction for
/// the requested depth, or for any intermediate level it needs, exceeds the
/// budget.
TowerSet enumerate_towers(TowerPool& pool, AgentId owner, int depth,
                          unsigned long long budget = kDefaultEnumerationBudget);

} // namespace consent

#endif
