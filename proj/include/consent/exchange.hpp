#ifndef CONSENT_EXCHANGE_HPP
#define CONSENT_EXCHANGE_HPP

#include <memory>
#include <string>
#include <vector>

#include "consent/economy.hpp"
#include "consent/rational.hpp"
#include "consent/verdict.hpp"

namespace consent {

using Bundle = std::vector<int>;

/// Discretized pure exchange economy: integer grid consumption boxes, one
/// cap per good per agent, integer endowments, linear base utilities, and a
/// finite dictionary of exact rational price vectors.
struct ExchangeSpec {
  std::vector<std::string> agents;
  int goods = 1;
  std::vector<std::vector<int>> caps;
  std::vector<std::vector<int>> endowments;
  std::vector<std::vector<Rational>> utility_weights;
  int depth = 1;
  std::vector<std::vector<Rational>> price_dictionary;

  /// Empty string when well formed, else the offending field path.
  std::string check() const;
};

/// An agent's base choice: what it takes from each agent's endowment,
/// every row inside the owner's consumption box.
struct Schedule {
  std::vector<Bundle> take; // [agent][good]
};

/// The consentified exchange economy: schedules as base choices, and the
/// three support conditions (rights, non-aggression, budget) wired into an
/// EconomySpec utility pipeline.
struct ExchangeEconomy {
  ExchangeSpec spec;
  BaseSpace space;
  std::shared_ptr<const std::vector<std::vector<Schedule>>> schedules; // [agent][BaseId]
  EconomySpec econ;

  const Schedule& schedule(AgentId a, BaseId b) const {
    return (*schedules)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

ExchangeEconomy build_consentified_exchange(const ExchangeSpec& spec);

/// How the two textual ambiguities in the price definition are read:
/// weak (>=, as printed) versus strict (>), and the unbound counterparty
/// as universal (all agents but beta) versus one designated agent.
struct PriceReading {
  bool strict = false;
  AgentId designated = -1; // -1: universal

  std::string str() const {
    std::string s = strict ? "strict" : "weak";
    s += designated < 0 ? "/universal" : "/designated";
    return s;
  }
};

/// Materialization of R_beta(p) within the declared universes: the towers
/// of beta that forbid every counterparty choice meeting the price
/// comparison. Quantifiers are bounded by the universes.
TowerSet price_set(const TowerPool& pool, const ExchangeEconomy& xeco,
                   const std::vector<Rational>& p, AgentId beta,
                   const std::vector<TowerSet>& universes, PriceReading reading,
                   Exec exec = Exec::Parallel);

/// price_set for every dictionary entry and agent; [price][agent].
std::vector<std::vector<TowerSet>> build_price_sets(const TowerPool& pool,
                                                    const ExchangeEconomy& xeco,
                                                    const std::vector<TowerSet>& universes,
                                                    PriceReading reading,
                                                    Exec exec = Exec::Parallel);

/// Indices of dictionary prices p such that, for every counterparty beta,
/// x's forbidden set equals the materialized R_beta(p). Empty result means
/// x is not pricey under this dictionary and universe.
std::vector<std::size_t> is_pricey(const TowerPool& pool, const ExchangeEconomy& xeco, TowerId x,
                                   const std::vector<TowerSet>& universes,
                                   const std::vector<std::vector<TowerSet>>& price_sets,
                                   Exec exec = Exec::Parallel);

struct PriceyCheck {
  Verdict verdict = Verdict::VacuousFail;
  ExtReal overall_max = ExtReal::neg_inf();
  ExtReal pricey_max = ExtReal::neg_inf();
  TowerId overall_argmax = kNoTower;
  TowerId pricey_argmax = kNoTower;
  std::size_t pricey_count = 0;
  std::string note;
};

/// The desk-scale test of the prices-are-good lemma: with all other
/// components pricey, compare alpha's best utility over the family with its
/// best over the pricey subfamily. PASS iff the pricey maximum is at least
/// the overall maximum; an empty pricey subfamily is a VACUOUS-FAIL (an
/// insufficient dictionary, not a lemma failure).
PriceyCheck check_prices_are_good(const ExchangeEconomy& xeco, const TowerPool& pool,
                                  const Profile& profile, AgentId alpha, const TowerSet& family,
                                  const std::vector<TowerSet>& universes,
                                  const std::vector<std::vector<TowerSet>>& price_sets,
                                  Exec exec = Exec::Parallel);

} // namespace consent

#endif
