#include "consent/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace consent {

bool TowerSet::contains(TowerId t) const {
  return std::binary_search(members.begin(), members.end(), t);
}

TowerPool::TowerPool(const BaseSpace& space) : space_(&space) {
  std::string err = space.check();
  if (!err.empty()) throw std::invalid_argument("bad base space: " + err);
}

std::size_t TowerPool::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::int32_t v : k) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

TowerPool::Key TowerPool::make_key(
    AgentId owner, BaseId base,
    const std::vector<std::vector<std::vector<TowerId>>>& level_sets) const {
  Key k;
  k.push_back(owner);
  k.push_back(base);
  for (const auto& level : level_sets) {
    for (const auto& set : level) {
      k.push_back(-2); // set separator; ids are nonnegative
      for (TowerId t : set) k.push_back(t);
    }
    k.push_back(-3); // level separator
  }
  return k;
}

TowerId TowerPool::intern_base(AgentId owner, BaseId base) {
  return intern(owner, base, {});
}

TowerId TowerPool::intern(AgentId owner, BaseId base,
                          std::vector<std::vector<std::vector<TowerId>>> level_sets) {
  const int n_agents = space_->agent_count();
  if (owner < 0 || owner >= n_agents) throw std::invalid_argument("intern: bad owner");
  if (base < 0 || base >= space_->base_count(owner))
    throw std::invalid_argument("intern: bad base label");
  const int depth = static_cast<int>(level_sets.size());
  for (int m = 0; m < depth; ++m) {
    auto& level = level_sets[static_cast<std::size_t>(m)];
    if (static_cast<int>(level.size()) != n_agents)
      throw std::invalid_argument("intern: level " + std::to_string(m + 1) +
                                  " does not cover all agents");
    for (int b = 0; b < n_agents; ++b) {
      auto& set = level[static_cast<std::size_t>(b)];
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      for (TowerId t : set) {
        if (t < 0 || static_cast<std::size_t>(t) >= nodes_.size())
          throw std::invalid_argument("intern: unknown member id");
        const TowerNode& mn = nodes_[static_cast<std::size_t>(t)];
        if (mn.owner != b || mn.depth != m)
          throw std::invalid_argument("intern: member of level " + std::to_string(m + 1) +
                                      " for agent " + space_->agents[static_cast<std::size_t>(b)] +
                                      " has wrong owner or depth");
      }
    }
  }

  Key key = make_key(owner, base, level_sets);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;

  TowerNode node;
  node.owner = owner;
  node.depth = depth;
  node.base = base;
  node.level_sets = std::move(level_sets);
  node.proj.resize(static_cast<std::size_t>(depth) + 1, kNoTower);

  TowerId id = static_cast<TowerId>(nodes_.size());
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), id);

  // Projection chain: each prefix of the level list is itself a tower.
  // Interned bottom-up so project() is a table lookup afterwards.
  for (int m = 0; m < depth; ++m) {
    std::vector<std::vector<std::vector<TowerId>>> prefix(
        nodes_[static_cast<std::size_t>(id)].level_sets.begin(),
        nodes_[static_cast<std::size_t>(id)].level_sets.begin() + m);
    TowerId p = intern(owner, base, std::move(prefix));
    nodes_[static_cast<std::size_t>(id)].proj[static_cast<std::size_t>(m)] = p;
  }
  nodes_[static_cast<std::size_t>(id)].proj[static_cast<std::size_t>(depth)] = id;
  return id;
}

TowerId TowerPool::intern_from_top(AgentId owner, BaseId base,
                                   const std::vector<std::vector<TowerId>>& top,
                                   int depth) {
  if (depth < 1) throw std::invalid_argument("intern_from_top: depth must be >= 1");
  const int n_agents = space_->agent_count();
  if (static_cast<int>(top.size()) != n_agents)
    throw std::invalid_argument("intern_from_top: top level must cover all agents");
  std::vector<std::vector<std::vector<TowerId>>> levels(
      static_cast<std::size_t>(depth),
      std::vector<std::vector<TowerId>>(static_cast<std::size_t>(n_agents)));
  levels[static_cast<std::size_t>(depth - 1)] = top;
  for (int m = depth - 2; m >= 0; --m)
    for (int b = 0; b < n_agents; ++b) {
      auto& lower = levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
      for (TowerId t : levels[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(b)])
        lower.push_back(project(t, m));
    }
  return intern(owner, base, std::move(levels));
}

TowerId TowerPool::intern_no_forbid(AgentId owner, BaseId base, int depth) {
  const std::size_t n_agents = static_cast<std::size_t>(space_->agent_count());
  std::vector<std::vector<std::vector<TowerId>>> levels(
      static_cast<std::size_t>(depth), std::vector<std::vector<TowerId>>(n_agents));
  return intern(owner, base, std::move(levels));
}

TowerId TowerPool::project(TowerId t, int m) const {
  const TowerNode& n = node(t);
  if (m < 0 || m > n.depth)
    throw std::out_of_range("project: depth " + std::to_string(m) + " out of range for tower of depth " +
                            std::to_string(n.depth));
  return n.proj[static_cast<std::size_t>(m)];
}

std::string TowerPool::text(TowerId t) const {
  const TowerNode& n = node(t);
  std::string out = space_->base_label(n.owner, n.base);
  for (int m = 0; m < n.depth; ++m) {
    out += " @" + std::to_string(m + 1) + "(";
    for (int b = 0; b < space_->agent_count(); ++b) {
      if (b > 0) out += ",";
      out += space_->agents[static_cast<std::size_t>(b)] + ":{";
      std::vector<std::string> rendered;
      for (TowerId member : n.level_sets[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)])
        rendered.push_back(text(member));
      std::sort(rendered.begin(), rendered.end());
      for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (i > 0) out += ",";
        out += rendered[i];
      }
      out += "}";
    }
    out += ")";
  }
  return out;
}

namespace {

ValidationReport check_consistency(const TowerPool& pool, TowerId t, const std::string& where) {
  const TowerNode& n = pool.node(t);
  const int n_agents = pool.space().agent_count();
  for (int m = 1; m < n.depth; ++m) {
    for (int b = 0; b < n_agents; ++b) {
      std::vector<TowerId> projected;
      for (TowerId member : n.level_sets[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)])
        projected.push_back(pool.project(member, m - 1));
      std::sort(projected.begin(), projected.end());
      projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
      if (projected != n.level_sets[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(b)]) {
        ValidationReport r;
        r.ok = false;
        r.level = m; // written level of the lower set
        r.agent = b;
        r.path = where;
        r.message = "level " + std::to_string(m + 1) + " for agent " +
                    pool.space().agents[static_cast<std::size_t>(b)] +
                    " does not project onto level " + std::to_string(m);
        return r;
      }
    }
  }
  // Members must themselves be consistent towers.
  for (int m = 0; m < n.depth; ++m)
    for (int b = 0; b < n_agents; ++b) {
      const auto& set = n.level_sets[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
      for (std::size_t i = 0; i < set.size(); ++i) {
        std::string sub = where.empty() ? "" : where + " / ";
        sub += "member " + std::to_string(i) + " of level " + std::to_string(m + 1) + " for " +
               pool.space().agents[static_cast<std::size_t>(b)];
        ValidationReport r = check_consistency(pool, set[i], sub);
        if (!r.ok) return r;
      }
    }
  return ValidationReport{};
}

} // namespace

ValidationReport validate_tower(const TowerPool& pool, TowerId t) {
  return check_consistency(pool, t, "");
}

std::optional<int> separating_depth(const TowerPool& pool, TowerId x, TowerId y) {
  const TowerNode& nx = pool.node(x);
  const TowerNode& ny = pool.node(y);
  if (nx.owner != ny.owner || nx.depth != ny.depth)
    throw std::invalid_argument("separating_depth: towers must share owner and depth");
  if (x == y) return std::nullopt;
  for (int n = 0; n <= nx.depth; ++n)
    if (pool.project(x, n) != pool.project(y, n)) return n;
  throw std::logic_error("distinct towers with identical projection chains");
}

} // namespace consent
