#include "consent/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

TowerId intern_literal(TowerPool& pool, AgentId owner, int depth, const TowerLiteral& lit) {
  BaseId base = pool.space().base_index(owner, lit.base);
  if (base < 0)
    throw std::invalid_argument("unknown base choice '" + lit.base + "' for agent " +
                                pool.space().agents[static_cast<std::size_t>(owner)]);
  if (depth == 0) {
    if (!lit.forbid.empty())
      throw std::invalid_argument("depth-0 tower literal '" + lit.base + "' cannot forbid");
    return pool.intern_base(owner, base);
  }
  std::vector<std::vector<TowerId>> top(static_cast<std::size_t>(pool.space().agent_count()));
  for (const auto& [agent_name, members] : lit.forbid) {
    AgentId b = pool.space().agent_index(agent_name);
    if (b < 0) throw std::invalid_argument("unknown agent '" + agent_name + "' in tower literal");
    for (const TowerLiteral& m : members)
      top[static_cast<std::size_t>(b)].push_back(intern_literal(pool, b, depth - 1, m));
  }
  return pool.intern_from_top(owner, base, top, depth);
}

namespace {

std::vector<BaseId> base_filter(const TowerPool& pool, AgentId owner,
                                const std::vector<std::string>& names) {
  std::vector<BaseId> out;
  if (names.empty()) {
    for (BaseId b = 0; b < pool.space().base_count(owner); ++b) out.push_back(b);
    return out;
  }
  for (const std::string& n : names) {
    BaseId b = pool.space().base_index(owner, n);
    if (b < 0)
      throw std::invalid_argument("unknown base choice '" + n + "' in generator for agent " +
                                  pool.space().agents[static_cast<std::size_t>(owner)]);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void generate(TowerPool& pool, AgentId owner, int depth, const GeneratorSpec& g,
              unsigned long long budget, const ExchangeEconomy* xeco, PriceReading reading,
              std::vector<TowerId>& out) {
  const int n_agents = pool.space().agent_count();
  switch (g.kind) {
    case GeneratorSpec::Kind::Exhaustive: {
      TowerSet all = enumerate_towers(pool, owner, depth, budget);
      out.insert(out.end(), all.members.begin(), all.members.end());
      break;
    }
    case GeneratorSpec::Kind::Explicit: {
      for (const TowerLiteral& lit : g.towers) out.push_back(intern_literal(pool, owner, depth, lit));
      break;
    }
    case GeneratorSpec::Kind::NoForbid: {
      for (BaseId b : base_filter(pool, owner, g.bases))
        out.push_back(pool.intern_no_forbid(owner, b, depth));
      break;
    }
    case GeneratorSpec::Kind::ForbidAll: {
      // Forbids the full depth-(D-1) space of every counterparty; the self
      // coordinate stays empty.
      std::vector<std::vector<TowerId>> top(static_cast<std::size_t>(n_agents));
      for (AgentId b = 0; b < n_agents; ++b) {
        if (b == owner) continue;
        top[static_cast<std::size_t>(b)] = enumerate_towers(pool, b, depth - 1, budget).members;
      }
      for (BaseId b : base_filter(pool, owner, g.bases))
        out.push_back(pool.intern_from_top(owner, b, top, depth));
      break;
    }
    case GeneratorSpec::Kind::Forbid: {
      AgentId target = pool.space().agent_index(g.target);
      if (target < 0)
        throw std::invalid_argument("unknown target agent '" + g.target + "' in forbid generator");
      TowerSet r;
      r.owner = target;
      r.depth = depth - 1;
      for (const TowerLiteral& m : g.members)
        r.members.push_back(intern_literal(pool, target, depth - 1, m));
      std::sort(r.members.begin(), r.members.end());
      r.members.erase(std::unique(r.members.begin(), r.members.end()), r.members.end());
      for (BaseId b : base_filter(pool, owner, g.bases)) {
        TowerId carrier = pool.intern_no_forbid(owner, b, depth);
        out.push_back(forbid_constructor(pool, b, carrier, target, r, depth));
      }
      break;
    }
    case GeneratorSpec::Kind::Price: {
      if (!xeco) throw std::invalid_argument("price generator requires exchange mode");
      if (depth != 1) throw std::invalid_argument("price generator supports depth 1 only");
      if (static_cast<int>(g.price.size()) != xeco->spec.goods)
        throw std::invalid_argument("price generator: wrong price dimension");
      for (BaseId b : base_filter(pool, owner, g.bases)) {
        std::vector<std::vector<TowerId>> top(static_cast<std::size_t>(n_agents));
        for (AgentId beta = 0; beta < n_agents; ++beta) {
          if (beta == owner) continue;
          Rational demand =
              dot(g.price, xeco->schedule(owner, b).take[static_cast<std::size_t>(beta)]);
          for (BaseId yb = 0; yb < pool.space().base_count(beta); ++yb) {
            Rational offer =
                dot(g.price, xeco->schedule(beta, yb).take[static_cast<std::size_t>(owner)]);
            bool in = reading.strict ? offer > demand : offer >= demand;
            if (in) top[static_cast<std::size_t>(beta)].push_back(pool.intern_base(beta, yb));
          }
        }
        out.push_back(pool.intern_from_top(owner, b, top, 1));
      }
      break;
    }
  }
}

} // namespace

TowerSet build_family(TowerPool& pool, AgentId owner, int depth,
                      const std::vector<GeneratorSpec>& specs, unsigned long long budget,
                      const ExchangeEconomy* xeco, PriceReading reading) {
  if (specs.empty()) throw std::invalid_argument("family: no generators for agent " +
                                                 pool.space().agents[static_cast<std::size_t>(owner)]);
  std::vector<TowerId> members;
  for (const GeneratorSpec& g : specs) generate(pool, owner, depth, g, budget, xeco, reading, members);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  TowerSet out;
  out.owner = owner;
  out.depth = depth;
  out.members = std::move(members);
  for (TowerId t : out.members) {
    ValidationReport r = validate_tower(pool, t);
    if (!r.ok) throw std::logic_error("generated tower failed validation: " + r.message);
    const TowerNode& n = pool.node(t);
    if (n.owner != owner || n.depth != depth)
      throw std::logic_error("generated tower has wrong owner or depth");
  }
  return out;
}

} // namespace consent
