#include "consent/exchange.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

std::string ExchangeSpec::check() const {
  if (goods < 1) return "goods";
  if (agents.empty()) return "agents";
  auto dims = [&](const auto& per_agent, const std::string& name) -> std::string {
    if (per_agent.size() != agents.size()) return name;
    for (std::size_t a = 0; a < per_agent.size(); ++a)
      if (static_cast<int>(per_agent[a].size()) != goods)
        return name + "[" + std::to_string(a) + "]";
    return "";
  };
  std::string e;
  if (!(e = dims(caps, "caps")).empty()) return e;
  if (!(e = dims(endowments, "endowments")).empty()) return e;
  if (!(e = dims(utility_weights, "utility_weights")).empty()) return e;
  for (std::size_t a = 0; a < agents.size(); ++a)
    for (int i = 0; i < goods; ++i) {
      if (caps[a][static_cast<std::size_t>(i)] < 0)
        return "caps[" + std::to_string(a) + "][" + std::to_string(i) + "]";
      if (endowments[a][static_cast<std::size_t>(i)] < 0)
        return "endowments[" + std::to_string(a) + "][" + std::to_string(i) + "]";
    }
  for (std::size_t p = 0; p < price_dictionary.size(); ++p)
    if (static_cast<int>(price_dictionary[p].size()) != goods)
      return "price_dictionary[" + std::to_string(p) + "]";
  if (depth < 1) return "depth";
  return "";
}

namespace {

// Bundles in the box {0..cap_1} x ... x {0..cap_l}, lexicographic with the
// first good most significant.
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

std::string bundle_str(const Bundle& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s;
}

bool is_zero(const Bundle& b) {
  return std::all_of(b.begin(), b.end(), [](int v) { return v == 0; });
}

} // namespace

ExchangeEconomy build_consentified_exchange(const ExchangeSpec& spec) {
  std::string err = spec.check();
  if (!err.empty()) throw std::invalid_argument("exchange spec: bad " + err);

  ExchangeEconomy out;
  out.spec = spec;
  const int n = static_cast<int>(spec.agents.size());

  auto schedules = std::make_shared<std::vector<std::vector<Schedule>>>(
      static_cast<std::size_t>(n));
  out.space.agents = spec.agents;
  out.space.base_choices.resize(static_cast<std::size_t>(n));

  for (AgentId a = 0; a < n; ++a) {
    std::vector<Bundle> box = box_bundles(spec.caps[static_cast<std::size_t>(a)]);
    // Schedules A -> box, odometer with the last agent fastest.
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      Schedule s;
      s.take.reserve(static_cast<std::size_t>(n));
      std::string label;
      for (AgentId b = 0; b < n; ++b) {
        s.take.push_back(box[idx[static_cast<std::size_t>(b)]]);
        if (b) label += "|";
        label += spec.agents[static_cast<std::size_t>(b)] + "=" + bundle_str(s.take.back());
      }
      (*schedules)[static_cast<std::size_t>(a)].push_back(std::move(s));
      out.space.base_choices[static_cast<std::size_t>(a)].push_back(label);

      int pos = n - 1;
      while (pos >= 0) {
        if (++idx[static_cast<std::size_t>(pos)] < box.size()) break;
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  out.schedules = schedules;

  EconomySpec& econ = out.econ;
  econ.agent_count = n;
  econ.depth = spec.depth;

  // First support condition: the rights structure allows forbidding only
  // schedules that actually take from the right-holder.
  RightsStructure rights(n);
  for (AgentId alpha = 0; alpha < n; ++alpha)
    for (AgentId beta = 0; beta < n; ++beta)
      rights.set(alpha, beta, [schedules, beta, alpha](const TowerPool& pool, TowerId y) {
        BaseId yb = pool.node(pool.project(y, 0)).base;
        return !is_zero((*schedules)[static_cast<std::size_t>(beta)][static_cast<std::size_t>(yb)]
                            .take[static_cast<std::size_t>(alpha)]);
      });
  econ.rights = std::move(rights);

  // Second support condition.
  econ.non_aggression = true;

  // Third support condition: takings from alpha must fit its endowment.
  std::vector<std::vector<int>> endow = spec.endowments;
  int goods = spec.goods;
  econ.infeasible = [schedules, endow, goods](const TowerPool& pool, const Profile& profile,
                                              AgentId alpha) {
    for (int i = 0; i < goods; ++i) {
      long long total = 0;
      for (AgentId b = 0; b < static_cast<AgentId>(profile.choices.size()); ++b) {
        BaseId base = pool.node(profile.choices[static_cast<std::size_t>(b)]).base;
        total += (*schedules)[static_cast<std::size_t>(b)][static_cast<std::size_t>(base)]
                     .take[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(i)];
      }
      if (total > endow[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(i)]) return true;
    }
    return false;
  };

  // Base utility: the linear valuation of everything the agent takes.
  econ.base_utility.resize(static_cast<std::size_t>(n));
  for (AgentId a = 0; a < n; ++a) {
    std::vector<Rational> w = spec.utility_weights[static_cast<std::size_t>(a)];
    econ.base_utility[static_cast<std::size_t>(a)] =
        [schedules, w, a, goods](const std::vector<BaseId>& bases) {
          const Schedule& s =
              (*schedules)[static_cast<std::size_t>(a)][static_cast<std::size_t>(bases[static_cast<std::size_t>(a)])];
          Bundle total(static_cast<std::size_t>(goods), 0);
          for (const Bundle& t : s.take)
            for (int i = 0; i < goods; ++i) total[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i)];
          return ExtReal(dot(w, total));
        };
  }

  return out;
}

namespace {

bool price_cond(const Rational& lhs, const Rational& rhs, bool strict) {
  return strict ? lhs > rhs : lhs >= rhs;
}

// Agents whose choices the price condition quantifies over, for member beta.
std::vector<AgentId> quantified(const ExchangeEconomy& xeco, AgentId beta, PriceReading reading) {
  std::vector<AgentId> q;
  if (reading.designated >= 0) {
    if (reading.designated != beta) q.push_back(reading.designated);
  } else {
    for (AgentId a = 0; a < xeco.econ.agent_count; ++a)
      if (a != beta) q.push_back(a);
  }
  return q;
}

} // namespace

TowerSet price_set(const TowerPool& pool, const ExchangeEconomy& xeco,
                   const std::vector<Rational>& p, AgentId beta,
                   const std::vector<TowerSet>& universes, PriceReading reading, Exec exec) {
  const TowerSet& ub = universes[static_cast<std::size_t>(beta)];
  std::vector<AgentId> q = quantified(xeco, beta, reading);

  // p . (what x takes from beta), per counterparty universe member.
  std::vector<std::vector<Rational>> offer(q.size());
  for (std::size_t qi = 0; qi < q.size(); ++qi) {
    const TowerSet& ua = universes[static_cast<std::size_t>(q[qi])];
    offer[qi].reserve(ua.members.size());
    for (TowerId x : ua.members) {
      BaseId xb = pool.node(x).base;
      offer[qi].push_back(dot(p, xeco.schedule(q[qi], xb).take[static_cast<std::size_t>(beta)]));
    }
  }

  const std::int64_t n = static_cast<std::int64_t>(ub.members.size());
  std::vector<char> in(ub.members.size(), 0);

  auto body = [&](std::int64_t i) {
    TowerId y = ub.members[static_cast<std::size_t>(i)];
    BaseId yb = pool.node(y).base;
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      AgentId alpha = q[qi];
      Rational demand = dot(p, xeco.schedule(beta, yb).take[static_cast<std::size_t>(alpha)]);
      const TowerSet& ua = universes[static_cast<std::size_t>(alpha)];
      for (std::size_t xi = 0; xi < ua.members.size(); ++xi) {
        if (!price_cond(offer[qi][xi], demand, reading.strict)) continue;
        if (!forbids(pool, y, ua.members[xi])) return false;
      }
    }
    return true;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = body(i);
  }

  TowerSet out;
  out.owner = beta;
  out.depth = ub.depth;
  for (std::size_t i = 0; i < ub.members.size(); ++i)
    if (in[i]) out.members.push_back(ub.members[i]);
  return out;
}

std::vector<std::vector<TowerSet>> build_price_sets(const TowerPool& pool,
                                                    const ExchangeEconomy& xeco,
                                                    const std::vector<TowerSet>& universes,
                                                    PriceReading reading, Exec exec) {
  std::vector<std::vector<TowerSet>> out(xeco.spec.price_dictionary.size());
  for (std::size_t pi = 0; pi < xeco.spec.price_dictionary.size(); ++pi) {
    out[pi].reserve(static_cast<std::size_t>(xeco.econ.agent_count));
    for (AgentId b = 0; b < xeco.econ.agent_count; ++b)
      out[pi].push_back(
          price_set(pool, xeco, xeco.spec.price_dictionary[pi], b, universes, reading, exec));
  }
  return out;
}

std::vector<std::size_t> is_pricey(const TowerPool& pool, const ExchangeEconomy& xeco, TowerId x,
                                   const std::vector<TowerSet>& universes,
                                   const std::vector<std::vector<TowerSet>>& price_sets,
                                   Exec exec) {
  AgentId owner = pool.node(x).owner;
  std::vector<std::size_t> matches;
  std::vector<TowerSet> forb(static_cast<std::size_t>(xeco.econ.agent_count));
  for (AgentId b = 0; b < xeco.econ.agent_count; ++b)
    if (b != owner)
      forb[static_cast<std::size_t>(b)] =
          forbidden_set(pool, x, b, universes[static_cast<std::size_t>(b)], exec);
  for (std::size_t pi = 0; pi < price_sets.size(); ++pi) {
    bool all = true;
    for (AgentId b = 0; b < xeco.econ.agent_count && all; ++b) {
      if (b == owner) continue;
      all = forb[static_cast<std::size_t>(b)].members ==
            price_sets[pi][static_cast<std::size_t>(b)].members;
    }
    if (all) matches.push_back(pi);
  }
  return matches;
}

PriceyCheck check_prices_are_good(const ExchangeEconomy& xeco, const TowerPool& pool,
                                  const Profile& profile, AgentId alpha, const TowerSet& family,
                                  const std::vector<TowerSet>& universes,
                                  const std::vector<std::vector<TowerSet>>& price_sets,
                                  Exec exec) {
  if (family.members.empty())
    throw std::invalid_argument("check_prices_are_good: empty family");

  PriceyCheck out;
  std::vector<char> pricey(family.members.size(), 0);
  for (std::size_t i = 0; i < family.members.size(); ++i)
    pricey[i] = !is_pricey(pool, xeco, family.members[i], universes, price_sets, exec).empty();

  const std::int64_t n = static_cast<std::int64_t>(family.members.size());
  std::vector<ExtReal> values(family.members.size());
  auto body = [&](std::int64_t i) {
    Profile trial = profile;
    trial.choices[static_cast<std::size_t>(alpha)] = family.members[static_cast<std::size_t>(i)];
    values[static_cast<std::size_t>(i)] = evaluate_utility(xeco.econ, pool, trial, alpha);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }

  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (out.overall_argmax == kNoTower || values[i] > out.overall_max) {
      out.overall_max = values[i];
      out.overall_argmax = family.members[i];
    }
    if (pricey[i]) {
      ++out.pricey_count;
      if (out.pricey_argmax == kNoTower || values[i] > out.pricey_max) {
        out.pricey_max = values[i];
        out.pricey_argmax = family.members[i];
      }
    }
  }

  if (out.pricey_count == 0) {
    out.verdict = Verdict::VacuousFail;
    out.note = "no pricey choice in the family for this dictionary and universe";
  } else if (out.pricey_max >= out.overall_max) {
    out.verdict = Verdict::Pass;
  } else {
    out.verdict = Verdict::Fail;
    out.note = "a non-pricey choice strictly beats every pricey choice";
  }
  return out;
}

} // namespace consent
