#ifndef CONSENT_FAMILY_HPP
#define CONSENT_FAMILY_HPP

#include <string>
#include <vector>

#include "consent/enumerate.hpp"
#include "consent/exchange.hpp"
#include "consent/tower.hpp"

namespace consent {

/// Structured tower literal: the base label plus, per counterparty name,
/// the top-level forbidden members one depth down. Lower levels are derived
/// by projection, so literals always denote consistent towers.
struct TowerLiteral {
  std::string base;
  std::vector<std::pair<std::string, std::vector<TowerLiteral>>> forbid;
};

/// One generator of a ChoiceFamily. A family is the deduplicated union of
/// its generators' outputs; generation is deterministic given the spec.
struct GeneratorSpec {
  enum class Kind { Exhaustive, Explicit, Forbid, ForbidAll, Price, NoForbid };

  Kind kind = Kind::NoForbid;
  std::vector<std::string> bases;     // optional base filter; empty = all bases
  std::vector<TowerLiteral> towers;   // Explicit
  std::string target;                 // Forbid: whose towers get forbidden
  std::vector<TowerLiteral> members;  // Forbid: the set R, one depth down
  std::vector<Rational> price;        // Price (depth-1, exchange mode only)
};

TowerId intern_literal(TowerPool& pool, AgentId owner, int depth, const TowerLiteral& lit);

/// Builds the family for one agent. `xeco` may be null outside exchange
/// mode; Price generators then fail. Every generated tower is validated.
TowerSet build_family(TowerPool& pool, AgentId owner, int depth,
                      const std::vector<GeneratorSpec>& specs, unsigned long long budget,
                      const ExchangeEconomy* xeco, PriceReading reading);

} // namespace consent

#endif
