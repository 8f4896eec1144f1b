#include "doctest.h"

#include <map>
#include <random>

#include "consent/enumerate.hpp"
#include "consent/relation.hpp"
#include "consent/topology.hpp"

using namespace consent;

namespace {

struct Fixture {
  BaseSpace space;
  TowerPool pool;
  TowerSet ua; // depth-1 towers of A, 32 of them
  TowerSet ub; // depth-1 towers of B

  Fixture() : space(make_space()), pool(space) {
    ua = enumerate_towers(pool, 0, 1);
    ub = enumerate_towers(pool, 1, 1);
  }

  static BaseSpace make_space() {
    BaseSpace s;
    s.agents = {"A", "B"};
    s.base_choices = {{"a0", "a1"}, {"b0", "b1"}};
    return s;
  }

  TowerSet subset(const TowerSet& u, unsigned mask) const {
    TowerSet r;
    r.owner = u.owner;
    r.depth = u.depth;
    for (std::size_t i = 0; i < u.members.size(); ++i)
      if (mask & (1u << i)) r.members.push_back(u.members[i]);
    return r;
  }
};

} // namespace

TEST_CASE("forbids: empty sets forbid nothing; membership is by base at depth 1") {
  Fixture f;
  TowerId nf = f.pool.intern_no_forbid(0, 0, 1);
  for (TowerId y : f.ub.members) CHECK(!forbids(f.pool, nf, y));

  // x with level-1 set {b0} for B forbids exactly the depth-1 towers of B based at b0.
  TowerId b0 = f.pool.intern_base(1, 0);
  TowerId x = f.pool.intern(0, 0, {{{}, {b0}}});
  int forbidden = 0;
  for (TowerId y : f.ub.members) {
    bool expect = f.pool.node(f.pool.project(y, 0)).base == 0;
    CHECK(forbids(f.pool, x, y) == expect);
    forbidden += expect;
  }
  CHECK(forbidden == 16);

  CHECK_THROWS_AS(forbids(f.pool, x, b0), std::invalid_argument);       // depth mismatch
  CHECK_THROWS_AS(forbids(f.pool, b0, b0), std::invalid_argument);      // depth 0
}

TEST_CASE("forbids: top-level and all-levels formulations agree") {
  Fixture f;
  // Exhaustively at depth 1.
  for (TowerId x : f.ua.members)
    for (TowerId y : f.ub.members)
      CHECK(forbids(f.pool, x, y) == forbids_all_levels(f.pool, x, y));

  // Sampled at depth 2 via forbidding constructions.
  std::mt19937_64 rng(7);
  std::vector<TowerId> d2a, d2b;
  for (int i = 0; i < 12; ++i) {
    unsigned mask = static_cast<unsigned>(rng()) & 0xFFFFFFFFu;
    TowerSet rb = f.subset(f.ub, mask);
    TowerId carrier = f.pool.intern_no_forbid(0, 0, 2);
    d2a.push_back(forbid_constructor(f.pool, 0, carrier, 1, rb));
    TowerSet ra = f.subset(f.ua, static_cast<unsigned>(rng()));
    TowerId carrier_b = f.pool.intern_no_forbid(1, 1, 2);
    d2b.push_back(forbid_constructor(f.pool, 1, carrier_b, 0, ra));
  }
  for (TowerId x : d2a)
    for (TowerId y : d2b)
      CHECK(forbids(f.pool, x, y) == forbids_all_levels(f.pool, x, y));
}

TEST_CASE("forbid_constructor: extremes and validity") {
  Fixture f;
  TowerId carrier = f.pool.intern_no_forbid(0, 0, 1);

  TowerSet empty;
  empty.owner = 1;
  empty.depth = 0;
  TowerId fe = forbid_constructor(f.pool, 0, carrier, 1, empty);
  CHECK(validate_tower(f.pool, fe).ok);
  for (TowerId y : f.ub.members) CHECK(!forbids(f.pool, fe, y));

  // R = the full depth-0 universe of B: the result forbids all of X^1_B.
  TowerSet full;
  full.owner = 1;
  full.depth = 0;
  for (BaseId b = 0; b < 2; ++b) full.members.push_back(f.pool.intern_base(1, b));
  TowerId fa = forbid_constructor(f.pool, 0, carrier, 1, full);
  CHECK(validate_tower(f.pool, fa).ok);
  for (TowerId y : f.ub.members) CHECK(forbids(f.pool, fa, y));

  // Depth-1 R with a deeper carrier: every member of R is forbidden.
  TowerSet r1 = f.subset(f.ub, 0b1010u);
  TowerId carrier2 = f.pool.intern_no_forbid(0, 1, 2);
  TowerId f2 = forbid_constructor(f.pool, 1, carrier2, 1, r1);
  CHECK(f.pool.node(f2).depth == 2);
  CHECK(f.pool.node(f2).base == 1);
  CHECK(validate_tower(f.pool, f2).ok);
  // Any depth-2 tower of B projecting onto a member of R is forbidden by f2.
  for (TowerId y : r1.members) {
    const TowerNode& ny = f.pool.node(y);
    std::vector<std::vector<TowerId>> top(2);
    for (AgentId b = 0; b < 2; ++b)
      for (TowerId m : ny.level_sets[0][static_cast<std::size_t>(b)])
        top[static_cast<std::size_t>(b)].push_back(
            f.pool.intern_no_forbid(b, f.pool.node(m).base, 1));
    TowerId y2 = f.pool.intern(1, ny.base, {ny.level_sets[0], top});
    REQUIRE(f.pool.project(y2, 1) == y);
    CHECK(forbids(f.pool, f2, y2));
  }

  CHECK_THROWS_AS(forbid_constructor(f.pool, 0, carrier, 1, r1), std::invalid_argument); // carrier too shallow
}

TEST_CASE("remark: the constructor is not an injection") {
  Fixture f;
  // Two singleton sets over distinct towers sharing a base have equal
  // projections, hence forbid-identical images at matching result depth.
  TowerId y1 = kNoTower, y2 = kNoTower;
  for (TowerId a : f.ub.members)
    for (TowerId b : f.ub.members)
      if (a != b && f.pool.project(a, 0) == f.pool.project(b, 0) && y1 == kNoTower) {
        y1 = a;
        y2 = b;
      }
  REQUIRE(y1 != kNoTower);

  TowerSet r1{1, 1, {y1}}, r2{1, 1, {y2}};
  if (r1.members[0] > r2.members[0]) std::swap(r1, r2);
  TowerId carrier = f.pool.intern_no_forbid(0, 0, 1);
  TowerId f1 = forbid_constructor(f.pool, 0, carrier, 1, r1, 1);
  TowerId f2 = forbid_constructor(f.pool, 0, carrier, 1, r2, 1);
  CHECK(f1 == f2); // images coincide although R != R'

  // And the image forbids towers outside R: y2 is forbidden by F(
  // {y1}) although it is not in {y1}.
  TowerSet fs = forbidden_set(f.pool, f1, 1, f.ub);
  CHECK(fs.contains(y1));
  CHECK(fs.contains(y2));
  CHECK(fs.size() > 1);
}

TEST_CASE("forbidden_set equals closure of the defining set") {
  Fixture f;
  TowerId carrier = f.pool.intern_no_forbid(0, 0, 1);

  // Exhaustive over all subsets of a capped ground set of depth-1 towers,
  // with the construction at matching result depth 1.
  const unsigned n = 10;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    TowerSet r = f.subset(f.ub, mask);
    TowerId img = forbid_constructor(f.pool, 0, carrier, 1, r, 1);
    TowerSet via_forbids = forbidden_set(f.pool, img, 1, f.ub, Exec::Serial);
    TowerSet via_closure = closure(f.pool, r, 0, f.ub, Exec::Serial);
    CHECK(via_forbids.members == via_closure.members);
  }

  // The canonical-depth form: subsets of the depth-0 universe, result depth 1.
  TowerSet u0 = enumerate_towers(f.pool, 1, 0);
  for (unsigned mask = 0; mask < (1u << u0.members.size()); ++mask) {
    TowerSet r = f.subset(u0, mask);
    TowerId img = forbid_constructor(f.pool, 0, carrier, 1, r);
    TowerSet via_forbids = forbidden_set(f.pool, img, 1, f.ub);
    TowerSet via_closure = closure(f.pool, r, 0, f.ub);
    CHECK(via_forbids.members == via_closure.members);
  }
}

TEST_CASE("forbidden sets are closed at the top observation depth") {
  Fixture f;
  for (TowerId x : f.ua.members) {
    TowerSet fs = forbidden_set(f.pool, x, 1, f.ub);
    CHECK(is_closed(f.pool, fs, 0, f.ub));
  }
}

TEST_CASE("closure: kuratowski axioms on random sets, serial == parallel") {
  Fixture f;
  std::mt19937_64 rng(42);
  auto random_subset = [&](const TowerSet& u) {
    return f.subset(u, static_cast<unsigned>(rng() & 0xFFFFFFFFull));
  };

  TowerSet empty{1, 1, {}};
  for (int obs = 0; obs <= 1; ++obs) {
    CHECK(closure(f.pool, empty, obs, f.ub).members.empty());
    CHECK(closure(f.pool, f.ub, obs, f.ub).members == f.ub.members);
  }

  for (int trial = 0; trial < 300; ++trial) {
    TowerSet a = random_subset(f.ub);
    TowerSet b = random_subset(f.ub);
    for (int obs = 0; obs <= 1; ++obs) {
      TowerSet ca = closure(f.pool, a, obs, f.ub, Exec::Serial);
      CHECK(ca.members == closure(f.pool, a, obs, f.ub, Exec::Parallel).members);

      // extensive
      for (TowerId t : a.members) CHECK(ca.contains(t));
      // idempotent
      CHECK(closure(f.pool, ca, obs, f.ub, Exec::Serial).members == ca.members);
      // additive
      TowerSet ab{1, 1, {}};
      std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                     std::back_inserter(ab.members));
      TowerSet cb = closure(f.pool, b, obs, f.ub, Exec::Serial);
      TowerSet expect{1, 1, {}};
      std::set_union(ca.members.begin(), ca.members.end(), cb.members.begin(), cb.members.end(),
                     std::back_inserter(expect.members));
      CHECK(closure(f.pool, ab, obs, f.ub, Exec::Serial).members == expect.members);
    }
  }
}

TEST_CASE("closure oracle: base-a singleton closes to all base-a towers") {
  Fixture f;
  TowerId b0 = f.pool.intern_base(1, 0);
  TowerId one = f.pool.intern(1, 0, {{{}, {b0}}});
  TowerSet r{1, 1, {one}};
  TowerSet cl = closure(f.pool, r, 0, f.ub);
  CHECK(cl.members.size() == 16);
  for (TowerId y : cl.members) CHECK(f.pool.node(f.pool.project(y, 0)).base == 0);
}

TEST_CASE("is_closed basics") {
  Fixture f;
  TowerSet empty{1, 1, {}};
  CHECK(is_closed(f.pool, empty, 0, f.ub));
  CHECK(is_closed(f.pool, empty, 1, f.ub));
  CHECK(is_closed(f.pool, f.ub, 0, f.ub));
  CHECK(is_closed(f.pool, f.ub, 1, f.ub));

  // A singleton is closed at the member depth but not below (its base
  // sibling gets pulled in).
  TowerSet one{1, 1, {f.ub.members[0]}};
  CHECK(is_closed(f.pool, one, 1, f.ub));
  CHECK(!is_closed(f.pool, one, 0, f.ub));

  TowerSet stray{1, 1, {f.pool.intern_base(1, 0)}};
  CHECK_THROWS_AS(is_closed(f.pool, stray, 0, f.ub), std::invalid_argument);
}
