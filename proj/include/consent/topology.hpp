#ifndef CONSENT_TOPOLOGY_HPP
#define CONSENT_TOPOLOGY_HPP

#include "consent/omp_support.hpp"
#include "consent/tower.hpp"

namespace consent {

/// Closure of R within a finite universe at observation depth n:
/// { y in universe | exists y' in R with project(y', n) == project(y, n) }.
/// R's members and the universe's members may sit at different depths as
/// long as both are >= n. The literal for-all-m<=n form is computed
/// alongside and must agree (it does whenever projection chains are
/// coherent, which the pool guarantees).
TowerSet closure(const TowerPool& pool, const TowerSet& r, int obs_depth,
                 const TowerSet& universe, Exec exec = Exec::Parallel);

/// R is closed at obs_depth iff closure(R) == R. R must be a subset of the
/// universe.
bool is_closed(const TowerPool& pool, const TowerSet& r, int obs_depth,
               const TowerSet& universe, Exec exec = Exec::Parallel);

} // namespace consent

#endif
