#include "consent/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

BestResponse best_response(const EconomySpec& econ, const TowerPool& pool, const Profile& profile,
                           AgentId alpha, const TowerSet& family, Exec exec) {
  if (family.members.empty()) throw std::invalid_argument("best_response: empty family");
  if (family.owner != alpha) throw std::invalid_argument("best_response: family owner mismatch");

  const std::int64_t n = static_cast<std::int64_t>(family.members.size());
  std::vector<ExtReal> values(family.members.size());
  auto body = [&](std::int64_t i) {
    Profile trial = profile;
    trial.choices[static_cast<std::size_t>(alpha)] = family.members[static_cast<std::size_t>(i)];
    values[static_cast<std::size_t>(i)] = evaluate_utility(econ, pool, trial, alpha);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }

  BestResponse out;
  out.value = values[0];
  for (const ExtReal& v : values) out.value = max(out.value, v);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == out.value) out.argmax.push_back(family.members[i]);
  return out;
}

EquilibriumReport nash_enumerate(const EconomySpec& econ, const TowerPool& pool,
                                 const std::vector<TowerSet>& families, unsigned long long budget,
                                 Exec exec) {
  if (static_cast<int>(families.size()) != econ.agent_count)
    throw std::invalid_argument("nash_enumerate: one family per agent required");

  unsigned long long total = 1;
  bool saturated = false;
  for (const TowerSet& f : families) {
    if (f.members.empty()) throw std::invalid_argument("nash_enumerate: empty family");
    if (total > budget / f.members.size() + 1) saturated = true; // cheap overflow guard
    total *= f.members.size();
    if (saturated || total > budget)
      throw BudgetError("profile scan exceeds budget " + std::to_string(budget), total, saturated);
  }

  EquilibriumReport report;
  for (const TowerSet& f : families) report.family_sizes.push_back(f.members.size());
  report.profiles_scanned = total;

  auto decode = [&](unsigned long long flat) {
    Profile p;
    p.choices.resize(families.size());
    for (int a = econ.agent_count - 1; a >= 0; --a) {
      const auto& m = families[static_cast<std::size_t>(a)].members;
      p.choices[static_cast<std::size_t>(a)] = m[flat % m.size()];
      flat /= m.size();
    }
    return p;
  };

  auto is_equilibrium = [&](const Profile& p) {
    for (AgentId a = 0; a < econ.agent_count; ++a) {
      ExtReal own = evaluate_utility(econ, pool, p, a);
      for (TowerId alt : families[static_cast<std::size_t>(a)].members) {
        Profile trial = p;
        trial.choices[static_cast<std::size_t>(a)] = alt;
        if (evaluate_utility(econ, pool, trial, a) > own) return false;
      }
    }
    return true;
  };

  std::vector<char> flags(total, 0);
  const std::int64_t n = static_cast<std::int64_t>(total);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i)
      flags[static_cast<std::size_t>(i)] = is_equilibrium(decode(static_cast<unsigned long long>(i)));
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      flags[static_cast<std::size_t>(i)] = is_equilibrium(decode(static_cast<unsigned long long>(i)));
  }

  for (unsigned long long i = 0; i < total; ++i) {
    if (!flags[i]) continue;
    Profile p = decode(i);
    std::vector<ExtReal> us;
    for (AgentId a = 0; a < econ.agent_count; ++a) us.push_back(evaluate_utility(econ, pool, p, a));
    report.equilibria.push_back(std::move(p));
    report.utilities.push_back(std::move(us));
  }
  return report;
}

namespace {

std::vector<Bundle> box_bundles(const std::vector<int>& cap) {
  std::vector<Bundle> out;
  Bundle cur(cap.size(), 0);
  while (true) {
    out.push_back(cur);
    int pos = static_cast<int>(cap.size()) - 1;
    while (pos >= 0) {
      if (++cur[static_cast<std::size_t>(pos)] <= cap[static_cast<std::size_t>(pos)]) break;
      cur[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

} // namespace

std::vector<WalrasEquilibrium> walrasian_oracle(const ExchangeSpec& spec,
                                                unsigned long long budget, Exec exec) {
  std::string err = spec.check();
  if (!err.empty()) throw std::invalid_argument("walrasian_oracle: bad spec field " + err);

  const int n = static_cast<int>(spec.agents.size());
  std::vector<WalrasEquilibrium> out;

  Bundle supply(static_cast<std::size_t>(spec.goods), 0);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < spec.goods; ++i)
      supply[static_cast<std::size_t>(i)] += spec.endowments[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];

  for (std::size_t pi = 0; pi < spec.price_dictionary.size(); ++pi) {
    const std::vector<Rational>& p = spec.price_dictionary[pi];

    // Demand correspondence per agent: all budget-feasible argmax bundles.
    std::vector<std::vector<Bundle>> demand(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      Rational wealth = dot(p, spec.endowments[static_cast<std::size_t>(a)]);
      bool any = false;
      ExtReal best = ExtReal::neg_inf();
      for (const Bundle& x : box_bundles(spec.caps[static_cast<std::size_t>(a)])) {
        if (dot(p, x) > wealth) continue;
        ExtReal v(dot(spec.utility_weights[static_cast<std::size_t>(a)], x));
        if (!any || v > best) {
          best = v;
          demand[static_cast<std::size_t>(a)].clear();
          any = true;
        }
        if (v == best) demand[static_cast<std::size_t>(a)].push_back(x);
      }
    }

    unsigned long long total = 1;
    bool overflow = false;
    for (int a = 0; a < n; ++a) {
      if (demand[static_cast<std::size_t>(a)].empty()) { total = 0; break; }
      if (total > budget / demand[static_cast<std::size_t>(a)].size() + 1) overflow = true;
      total *= demand[static_cast<std::size_t>(a)].size();
      if (overflow || total > budget)
        throw BudgetError("walrasian allocation scan exceeds budget " + std::to_string(budget),
                          total, overflow);
    }

    auto decode = [&](unsigned long long flat) {
      std::vector<std::vector<int>> alloc(static_cast<std::size_t>(n));
      for (int a = n - 1; a >= 0; --a) {
        const auto& d = demand[static_cast<std::size_t>(a)];
        alloc[static_cast<std::size_t>(a)] = d[flat % d.size()];
        flat /= d.size();
      }
      return alloc;
    };

    std::vector<char> clears(total, 0);
    const std::int64_t m = static_cast<std::int64_t>(total);
    auto body = [&](std::int64_t i) {
      auto alloc = decode(static_cast<unsigned long long>(i));
      for (int g = 0; g < spec.goods; ++g) {
        int sum = 0;
        for (int a = 0; a < n; ++a) sum += alloc[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)];
        if (sum != supply[static_cast<std::size_t>(g)]) return false;
      }
      return true;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < m; ++i) clears[static_cast<std::size_t>(i)] = body(i);
    } else {
      for (std::int64_t i = 0; i < m; ++i) clears[static_cast<std::size_t>(i)] = body(i);
    }
    for (unsigned long long i = 0; i < total; ++i)
      if (clears[i]) out.push_back(WalrasEquilibrium{pi, decode(i)});
  }
  return out;
}

namespace {

// Decompose a clearing allocation into takings: own endowment first, then
// other agents in order. Exact clearing guarantees a full decomposition.
bool decompose(const ExchangeSpec& spec, const std::vector<std::vector<int>>& alloc,
               std::vector<Schedule>& out) {
  const int n = static_cast<int>(spec.agents.size());
  std::vector<std::vector<int>> rem = spec.endowments;
  out.assign(static_cast<std::size_t>(n),
             Schedule{std::vector<Bundle>(static_cast<std::size_t>(n),
                                          Bundle(static_cast<std::size_t>(spec.goods), 0))});
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < spec.goods; ++g) {
      int need = alloc[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)];
      int own = std::min(need, rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)]);
      out[static_cast<std::size_t>(a)].take[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)] = own;
      rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)] -= own;
      need -= own;
      for (int b = 0; b < n && need > 0; ++b) {
        if (b == a) continue;
        int t = std::min(need, rem[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)]);
        out[static_cast<std::size_t>(a)].take[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)] = t;
        rem[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)] -= t;
        need -= t;
      }
      if (need > 0) return false;
    }
  }
  return true;
}

BaseId find_schedule(const ExchangeEconomy& xeco, AgentId a, const Schedule& s) {
  const auto& table = (*xeco.schedules)[static_cast<std::size_t>(a)];
  for (std::size_t b = 0; b < table.size(); ++b)
    if (table[b].take == s.take) return static_cast<BaseId>(b);
  return -1;
}

} // namespace

std::vector<ComparatorRow> consentification_comparator(
    const ExchangeEconomy& xeco, const TowerPool& pool, const std::vector<TowerSet>& families,
    const std::vector<std::vector<TowerSet>>& price_sets,
    const std::vector<WalrasEquilibrium>& walras, Exec exec) {
  std::vector<ComparatorRow> rows;
  const int n = xeco.econ.agent_count;

  for (std::size_t ei = 0; ei < walras.size(); ++ei) {
    const WalrasEquilibrium& eq = walras[ei];
    ComparatorRow row;
    row.eq_index = ei;

    std::vector<Schedule> takings;
    if (!decompose(xeco.spec, eq.allocation, takings)) {
      row.note = "allocation not decomposable into takings";
      rows.push_back(std::move(row));
      continue;
    }

    Profile candidate;
    candidate.choices.resize(static_cast<std::size_t>(n), kNoTower);
    bool ok = true;
    for (AgentId a = 0; a < n && ok; ++a) {
      BaseId base = find_schedule(xeco, a, takings[static_cast<std::size_t>(a)]);
      if (base < 0) {
        row.note = "takings of " + xeco.spec.agents[static_cast<std::size_t>(a)] +
                   " are outside the consumption box";
        ok = false;
        break;
      }
      // Pricey family tower at the equilibrium price with these takings.
      TowerId pick = kNoTower;
      for (TowerId t : families[static_cast<std::size_t>(a)].members) {
        if (pool.node(t).base != base) continue;
        auto prices = is_pricey(pool, xeco, t, families, price_sets, exec);
        if (std::find(prices.begin(), prices.end(), eq.price_index) != prices.end()) {
          pick = t;
          break;
        }
      }
      if (pick == kNoTower) {
        row.note = "no pricey family tower at price " + std::to_string(eq.price_index) +
                   " with the takings of " + xeco.spec.agents[static_cast<std::size_t>(a)];
        ok = false;
        break;
      }
      candidate.choices[static_cast<std::size_t>(a)] = pick;
    }
    if (!ok) {
      rows.push_back(std::move(row));
      continue;
    }

    row.representable = true;
    row.candidate = candidate;
    row.survives = true;
    for (AgentId a = 0; a < n; ++a) {
      ExtReal own = evaluate_utility(xeco.econ, pool, candidate, a);
      BestResponse br =
          best_response(xeco.econ, pool, candidate, a, families[static_cast<std::size_t>(a)], exec);
      if (br.value > own) {
        row.survives = false;
        row.deviator = a;
        row.deviation = br.argmax.front();
        row.candidate_value = own;
        row.deviation_value = br.value;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace consent
