#ifndef CONSENT_TOWER_HPP
#define CONSENT_TOWER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "consent/base_space.hpp"

namespace consent {

using TowerId = std::int32_t;
constexpr TowerId kNoTower = -1;

/// A finite truncation of a consentified choice. A depth-D tower of some
/// owner carries its base label and, for each written level n = 1..D and
/// each agent b, the set of depth-(n-1) towers of b it forbids at that
/// level. level_sets is indexed by member depth m = n-1, so
/// level_sets[m][b] holds ids of towers of agent b at depth m.
///
/// A tower is *consistent* when each level is the elementwise projection
/// of the level above it; intern() does not enforce this (tests construct
/// broken towers on purpose), validate_tower() checks it.
struct TowerNode {
  AgentId owner = 0;
  int depth = 0;
  BaseId base = 0;
  std::vector<std::vector<std::vector<TowerId>>> level_sets;
  // proj[m] = id of the depth-m truncation, m = 0..depth; proj[depth] is
  // the node itself. Precomputed so projection never touches the pool.
  std::vector<TowerId> proj;
};

/// Finite set of towers sharing one owner and depth, members sorted by id.
struct TowerSet {
  AgentId owner = 0;
  int depth = 0;
  std::vector<TowerId> members;

  std::size_t size() const { return members.size(); }
  bool contains(TowerId t) const;
};

struct ValidationReport {
  bool ok = true;
  int level = 0;      // written level n of the lower set in the first mismatch
  AgentId agent = 0;  // counterparty of the first mismatch
  std::string path;   // human-readable location, e.g. "member 3 of level 2 for B"
  std::string message;
};

/// Interning pool: every structurally distinct tower gets one id, so
/// equality is id equality and sets of towers are sorted id vectors.
/// Construction is serial; all kernels read the pool concurrently.
class TowerPool {
public:
  explicit TowerPool(const BaseSpace& space);

  const BaseSpace& space() const { return *space_; }

  /// Depth-0 tower (a bare base label).
  TowerId intern_base(AgentId owner, BaseId base);

  /// General intern. Shape is checked (member owners/depths per slot, sets
  /// sorted and deduplicated internally); consistency is not.
  TowerId intern(AgentId owner, BaseId base,
                 std::vector<std::vector<std::vector<TowerId>>> level_sets);

  /// Builds the depth-`depth` tower whose written top level is `top` (one
  /// set per agent, members at depth-1) and whose lower levels are the
  /// elementwise projections of `top`. Consistent by construction.
  TowerId intern_from_top(AgentId owner, BaseId base,
                          const std::vector<std::vector<TowerId>>& top,
                          int depth);

  /// All-empty-levels tower of the given depth.
  TowerId intern_no_forbid(AgentId owner, BaseId base, int depth);

  const TowerNode& node(TowerId t) const { return nodes_[static_cast<std::size_t>(t)]; }

  /// Depth-m truncation; O(1) via the precomputed chain.
  TowerId project(TowerId t, int m) const;

  std::size_t size() const { return nodes_.size(); }

  /// Canonical text, stable across pool construction orders: members of
  /// level sets are rendered recursively and sorted lexicographically.
  std::string text(TowerId t) const;

private:
  using Key = std::vector<std::int32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  Key make_key(AgentId owner, BaseId base,
               const std::vector<std::vector<std::vector<TowerId>>>& level_sets) const;

  const BaseSpace* space_;
  std::vector<TowerNode> nodes_;
  std::unordered_map<Key, TowerId, KeyHash> index_;
};

/// Checks the projection-consistency invariant of t and, recursively, of
/// every tower appearing in its level sets. Never throws; the report names
/// the first violated level/counterparty in canonical order.
ValidationReport validate_tower(const TowerPool& pool, TowerId t);

/// Smallest n with project(x,n) != project(y,n), or nullopt when x == y.
/// Both towers must share owner and depth.
std::optional<int> separating_depth(const TowerPool& pool, TowerId x, TowerId y);

} // namespace consent

#endif
