#include "doctest.h"

#include <set>

#include "consent/enumerate.hpp"
#include "consent/tower.hpp"

using namespace consent;

namespace {

BaseSpace two_by_two() {
  BaseSpace s;
  s.agents = {"A", "B"};
  s.base_choices = {{"a0", "a1"}, {"b0", "b1"}};
  return s;
}

} // namespace

TEST_CASE("base space well-formedness") {
  BaseSpace s = two_by_two();
  CHECK(s.check().empty());
  s.agents.push_back("A");
  s.base_choices.push_back({"x"});
  CHECK(!s.check().empty());

  BaseSpace empty_set;
  empty_set.agents = {"A"};
  empty_set.base_choices = {{}};
  CHECK(!empty_set.check().empty());
}

TEST_CASE("interning dedups and sorts level sets") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);
  TowerId a0 = pool.intern_base(0, 0);
  TowerId a1 = pool.intern_base(0, 1);
  CHECK(a0 != a1);
  CHECK(pool.intern_base(0, 0) == a0);

  TowerId b0 = pool.intern_base(1, 0);
  TowerId x = pool.intern(0, 0, {{{a1, a0}, {b0}}});
  TowerId y = pool.intern(0, 0, {{{a0, a1, a1}, {b0}}});
  CHECK(x == y); // order and duplicates do not matter

  CHECK_THROWS_AS(pool.intern(0, 0, {{{b0}, {}}}), std::invalid_argument); // wrong slot
}

TEST_CASE("projection chain: identity, base case, functoriality") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);
  TowerId a0 = pool.intern_base(0, 0);
  TowerId b0 = pool.intern_base(1, 0);
  TowerId b1 = pool.intern_base(1, 1);

  TowerId d1 = pool.intern(0, 0, {{{a0}, {b0, b1}}});
  TowerId d1b = pool.intern(1, 0, {{{a0}, {}}});
  TowerId d2 = pool.intern_from_top(0, 0, {{d1}, {d1b}}, 2);

  CHECK(pool.project(d2, 2) == d2);
  CHECK(pool.project(d2, 0) == a0);
  // project(t, k) == project(project(t, m), k) for k <= m <= depth
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= m; ++k)
      CHECK(pool.project(d2, k) == pool.project(pool.project(d2, m), k));
  // idempotence
  CHECK(pool.project(pool.project(d2, 1), 1) == pool.project(d2, 1));
  CHECK_THROWS_AS(pool.project(d2, 3), std::out_of_range);
  CHECK_THROWS_AS(pool.project(d2, -1), std::out_of_range);

  // Depth-1 truncation equals the tower rebuilt from the level-1 data alone.
  const TowerNode& n2 = pool.node(d2);
  auto level1 = n2.level_sets[0];
  TowerId rebuilt = pool.intern(0, 0, {level1});
  CHECK(pool.project(d2, 1) == rebuilt);
}

TEST_CASE("validate_tower reports the first violated level") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);
  TowerId a0 = pool.intern_base(0, 0);

  // Depth 0: nothing to violate.
  CHECK(validate_tower(pool, a0).ok);

  TowerId b0 = pool.intern_base(1, 0);
  TowerId b1 = pool.intern_base(1, 1);
  TowerId yb0 = pool.intern(1, 0, {{{}, {}}});
  TowerId yb1 = pool.intern(1, 1, {{{}, {}}});

  // Level-2 set for B projects onto {b0, b1}, but level 1 says {b0}: broken.
  TowerId bad = pool.intern(0, 0, {{{}, {b0}}, {{}, {yb0, yb1}}});
  ValidationReport r = validate_tower(pool, bad);
  CHECK(!r.ok);
  CHECK(r.level == 1);
  CHECK(r.agent == 1);

  // Same data with a matching level 1 is fine.
  TowerId good = pool.intern(0, 0, {{{}, {b0, b1}}, {{}, {yb0, yb1}}});
  CHECK(validate_tower(pool, good).ok);

  // A consistent tower holding an inconsistent member is reported too.
  TowerId bad_member = pool.intern(1, 0, {{{a0}, {}}, {{}, {}}});
  REQUIRE(!validate_tower(pool, bad_member).ok);
  TowerId w = pool.intern_from_top(0, 0, {{}, {bad_member}}, 3);
  CHECK(!validate_tower(pool, w).ok);
}

TEST_CASE("enumeration counts match the recurrence") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);

  // |X^1_a| = 2 * 2^2 * 2^2 = 32, computed independently of the enumerator.
  unsigned long long expected = 2ULL * (1ULL << 2) * (1ULL << 2);
  Cardinality c = predicted_tower_count(s, 0, 1);
  CHECK(!c.saturated);
  CHECK(c.value == expected);

  TowerSet u = enumerate_towers(pool, 0, 1);
  CHECK(u.members.size() == 32);
  std::set<TowerId> distinct(u.members.begin(), u.members.end());
  CHECK(distinct.size() == 32);

  for (TowerId t : u.members) {
    CHECK(validate_tower(pool, t).ok);
    CHECK(pool.node(t).owner == 0);
    CHECK(pool.node(t).depth == 1);
  }

  // Depth 0 is just the base labels.
  TowerSet base = enumerate_towers(pool, 1, 0);
  CHECK(base.members.size() == 2);
}

TEST_CASE("single-agent space: the self coordinate is still there") {
  BaseSpace s;
  s.agents = {"A"};
  s.base_choices = {{"only"}};
  TowerPool pool(s);
  TowerSet u = enumerate_towers(pool, 0, 1);
  CHECK(u.members.size() == 2); // forbidden set is {} or {only}
}

TEST_CASE("enumeration refuses over budget with a prediction") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);
  CHECK_THROWS_AS(enumerate_towers(pool, 0, 1, 31), BudgetError);
  try {
    enumerate_towers(pool, 0, 2); // 2 * 2^32 * 2^32 against the default budget
    FAIL("expected refusal");
  } catch (const BudgetError& e) {
    CHECK((e.saturated() || e.predicted() > kDefaultEnumerationBudget));
  }
  // Saturation path: counts beyond 2^63 are reported symbolically.
  Cardinality deep = predicted_tower_count(s, 0, 3);
  CHECK(deep.saturated);
  CHECK(deep.str() == ">= 2^63");
}

TEST_CASE("separating depth") {
  BaseSpace s = two_by_two();
  TowerPool pool(s);
  TowerSet u = enumerate_towers(pool, 0, 1);

  CHECK(!separating_depth(pool, u.members[0], u.members[0]).has_value());

  TowerId b0 = pool.intern_base(1, 0);
  TowerId x = pool.intern(0, 0, {{{}, {}}});
  TowerId y = pool.intern(0, 1, {{{}, {}}});
  TowerId z = pool.intern(0, 0, {{{}, {b0}}});
  CHECK(separating_depth(pool, x, y) == 0);  // different bases
  CHECK(separating_depth(pool, x, z) == 1);  // same base, different level-1 sets

  // Finite Hausdorff analog: every distinct pair separates at some level.
  for (std::size_t i = 0; i < u.members.size(); ++i)
    for (std::size_t j = i + 1; j < u.members.size(); ++j)
      CHECK(separating_depth(pool, u.members[i], u.members[j]).has_value());

  CHECK_THROWS_AS(separating_depth(pool, x, b0), std::invalid_argument);
}

TEST_CASE("canonical text is stable under construction order") {
  BaseSpace s = two_by_two();
  TowerPool p1(s);
  TowerPool p2(s);

  TowerId a0_1 = p1.intern_base(0, 0);
  TowerId a1_1 = p1.intern_base(0, 1);
  TowerId t1 = p1.intern(0, 0, {{{a0_1, a1_1}, {}}});

  // Reverse construction order in a fresh pool.
  TowerId a1_2 = p2.intern_base(0, 1);
  TowerId a0_2 = p2.intern_base(0, 0);
  TowerId t2 = p2.intern(0, 0, {{{a1_2, a0_2}, {}}});

  CHECK(p1.text(t1) == p2.text(t2));
  CHECK(p1.text(a0_1) == "a0");
  CHECK(p1.text(t1) == "a0 @1(A:{a0,a1},B:{})");
}
