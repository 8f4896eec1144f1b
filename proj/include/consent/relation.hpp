#ifndef CONSENT_RELATION_HPP
#define CONSENT_RELATION_HPP

#include "consent/omp_support.hpp"
#include "consent/tower.hpp"

namespace consent {

/// x forbids y: every level of y lies in the corresponding forbidden set of
/// x. For consistent towers the whole condition collapses to the top level,
/// which is what this checks. Both towers must share depth D >= 1.
bool forbids(const TowerPool& pool, TowerId x, TowerId y);

/// The literal all-levels form of the relation; agrees with forbids() on
/// consistent towers and is kept as the oracle for that equivalence.
bool forbids_all_levels(const TowerPool& pool, TowerId x, TowerId y);

/// { y in universe | forbids(x, y) }. Universe members must be towers of
/// `target` at x's depth.
TowerSet forbidden_set(const TowerPool& pool, TowerId x, AgentId target,
                       const TowerSet& universe, Exec exec = Exec::Parallel);

/// The forbidding choice built from a set: the result's level-n set for
/// `target` is the elementwise depth-(n-1) projection of R; every other
/// coordinate is copied from the carrier. Result owner is the carrier's
/// owner and result depth defaults to R.depth + 1; any result depth d with
/// 1 <= d <= R.depth + 1 and carrier.depth >= d may be requested.
TowerId forbid_constructor(TowerPool& pool, BaseId base, TowerId carrier, AgentId target,
                           const TowerSet& r, int result_depth = -1);

} // namespace consent

#endif
