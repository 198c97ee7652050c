#include <doctest.h>

#include "stone/profinite.hpp"
#include "support/oracles.hpp"

using namespace stone;

namespace {

std::vector<std::vector<std::size_t>> emptySets(const Tower& t) {
  return std::vector<std::vector<std::size_t>>(t.levels.size());
}

std::vector<std::vector<std::size_t>> fullSets(const Tower& t) {
  std::vector<std::vector<std::size_t>> out(t.levels.size());
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    for (std::size_t i = 0; i < t.levelSize(n); ++i) out[n].push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("cantor tower shape") {
  Tower t = cantorTower(2);
  validateTower(t);
  CHECK(t.depth() == 2);
  CHECK(t.levelSize(0) == 1);
  CHECK(t.levelSize(1) == 2);
  CHECK(t.levelSize(2) == 4);
  CHECK(t.levels[2] == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(t.transitions[1] == std::vector<std::size_t>{0, 0, 1, 1});

  Tower pt = cantorTower(0);
  CHECK(pt.depth() == 0);
  CHECK(pt.levelSize(0) == 1);

  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(towerFunctionAlgebra(cantorTower(3), n, PrimeField(2)).algebra.dim() ==
          (std::size_t{1} << n));
  }
}

TEST_CASE("tower function algebras and transitions") {
  PrimeField f2(2);
  Tower t = cantorTower(2);
  TowerAlgebraResult r = towerFunctionAlgebra(t, 1, f2);
  CHECK(r.algebra.dim() == 2);
  REQUIRE(r.transitionHom.has_value());
  CHECK(r.transitionHom->target().dim() == 4);
  // duplicating along fibers: indicator of "0" pulls back to {00, 01}
  CHECK(r.transitionHom->apply(Vec{1, 0}) == Vec{1, 1, 0, 0});
  CHECK(r.transitionHom->isInjective());  // surjective transitions dualize injectively

  // constant tower: identity transitions, constant chain
  Tower konst = branchingTower(3, 1);
  for (std::size_t n = 0; n < 3; ++n) {
    TowerAlgebraResult k = towerFunctionAlgebra(konst, n, f2);
    CHECK(k.algebra.dim() == 1);
    CHECK(k.transitionHom->matrix().isIdentity());
  }

  CHECK_THROWS_WITH_AS(towerFunctionAlgebra(t, 9, f2), doctest::Contains("LevelOutOfRange"),
                       StoneError);
  CHECK_FALSE(towerFunctionAlgebra(t, 2, f2).transitionHom.has_value());
}

TEST_CASE("transition hom chains compose like the transitions themselves") {
  PrimeField f3(3);
  Tower t = branchingTower(3, 3);
  AlgebraHom t01 = *towerFunctionAlgebra(t, 0, f3).transitionHom;
  AlgebraHom t12 = *towerFunctionAlgebra(t, 1, f3).transitionHom;
  AlgebraHom chain = t12.after(t01);
  // dual of the two-step truncation map directly
  FpMatrix direct(f3, t.levelSize(2), t.levelSize(0));
  for (std::size_t j = 0; j < t.levelSize(2); ++j) {
    direct.set(j, t.transitions[0][t.transitions[1][j]], 1);
  }
  CHECK(chain.matrix() == direct);
}

TEST_CASE("germ equality in the colimit") {
  PrimeField f2(2);
  Tower t = cantorTower(2);
  Vec u{1, 0};        // indicator of "0" at level 1
  Vec v{1, 1, 0, 0};  // indicator of {"00","01"} at level 2
  CHECK(colimitElementEq(t, f2, 1, u, 2, v));
  CHECK(colimitElementEq(t, f2, 1, u, 1, u));
  CHECK(colimitElementEq(t, f2, 0, Vec{1}, 2, Vec{1, 1, 1, 1}));  // constant 1
  CHECK_FALSE(colimitElementEq(t, f2, 1, u, 2, Vec{1, 0, 0, 0}));
  CHECK_THROWS_WITH_AS(colimitElementEq(t, f2, 1, u, 7, v),
                       doctest::Contains("LevelOutOfRange"), StoneError);
}

TEST_CASE("closed subtowers normalize and validate") {
  Tower t = cantorTower(2);
  // keep only the leaf "00": normalization fills in the images below
  ClosedSubtower sub = makeClosedSubtower(t, {{}, {}, {0}}, true);
  CHECK(sub.levelSets[0] == std::vector<std::size_t>{0});
  CHECK(sub.levelSets[1] == std::vector<std::size_t>{0});
  CHECK(sub.levelSets[2] == std::vector<std::size_t>{0});

  // un-normalized sets violating the image condition are rejected
  CHECK_THROWS_WITH_AS(makeClosedSubtower(t, {{0}, {0, 1}, {0}}, false),
                       doctest::Contains("InvalidSubtower"), StoneError);
}

TEST_CASE("complements swap closed and open") {
  Tower t = cantorTower(2);
  ClosedSubtower branch = makeClosedSubtower(t, {{}, {}, {0}}, true);  // the 00 leaf
  OpenCylinderFamily open = complementClosed(t, branch);
  CHECK(open.levelSets[0] == std::vector<std::size_t>{});
  CHECK(open.levelSets[1] == std::vector<std::size_t>{1});
  CHECK(open.levelSets[2] == std::vector<std::size_t>{1, 2, 3});

  // whole tower -> empty open family; empty subtower -> full open family
  CHECK(complementClosed(t, makeClosedSubtower(t, fullSets(t))).levelSets == emptySets(t));
  CHECK(complementClosed(t, makeClosedSubtower(t, emptySets(t))).levelSets == fullSets(t));

  // double complement is the identity on sample subtowers
  std::mt19937_64 rng(0x5EED40);
  for (int trial = 0; trial < 30; ++trial) {
    Tower tower = (trial % 2 == 0) ? cantorTower(3) : branchingTower(3, 3);
    std::vector<std::vector<std::size_t>> leaf(tower.levels.size());
    for (std::size_t i = 0; i < tower.levelSize(tower.depth()); ++i) {
      if (rng() % 2) leaf[tower.depth()].push_back(i);
    }
    ClosedSubtower sub = makeClosedSubtower(tower, leaf, true);
    ClosedSubtower back = complementOpen(tower, complementClosed(tower, sub));
    CHECK(back.levelSets == sub.levelSets);
  }

  // the 0-branch as the complement of cylinders over {1}
  Tower t3 = cantorTower(3);
  auto sets = emptySets(t3);
  sets[1] = {1};
  sets[2] = {2, 3};
  sets[3] = {4, 5, 6, 7};
  OpenCylinderFamily cyl = makeOpenCylinderFamily(t3, sets);
  ClosedSubtower zeroBranch = complementOpen(t3, cyl);
  CHECK(zeroBranch.levelSets[1] == std::vector<std::size_t>{0});
  CHECK(zeroBranch.levelSets[3] == std::vector<std::size_t>{0, 1, 2, 3});

  // empty open family -> full subtower
  CHECK(complementOpen(t3, makeOpenCylinderFamily(t3, emptySets(t3))).levelSets == fullSets(t3));
}

TEST_CASE("complementOpen can fail at finite depth") {
  Tower t = cantorTower(1);
  // open family covering all of level 1 but nothing at level 0: its closed
  // complement would need a level-0 point with no preimage
  auto sets = emptySets(t);
  sets[1] = {0, 1};
  OpenCylinderFamily fam = makeOpenCylinderFamily(t, sets);
  CHECK_THROWS_WITH_AS(complementOpen(t, fam), doctest::Contains("InvalidAtDepth"), StoneError);
}

TEST_CASE("clopen detection and the idempotent") {
  PrimeField f2(2);
  Tower t = cantorTower(3);

  auto sets = emptySets(t);
  sets[1] = {1};
  sets[2] = {2, 3};
  sets[3] = {4, 5, 6, 7};
  ClopenIdempotent ci = clopenToIdempotent(t, makeOpenCylinderFamily(t, sets), f2);
  CHECK(ci.level == 1);
  CHECK(ci.indicator == Vec{0, 1});

  ClopenIdempotent full = clopenToIdempotent(t, makeOpenCylinderFamily(t, fullSets(t)), f2);
  CHECK(full.level == 0);
  CHECK(full.indicator == Vec{1});

  // strictly growing family: new cylinder appears at each level
  auto growing = emptySets(t);
  growing[1] = {0};
  growing[2] = {0, 1, 2};
  growing[3] = {0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS_WITH_AS(clopenToIdempotent(t, makeOpenCylinderFamily(t, growing), f2),
                       doctest::Contains("NotClopenAtThisDepth"), StoneError);

  // the indicator is idempotent in the level algebra and pullbacks reproduce
  // every deeper slice
  FiniteAlgebra lvl = towerFunctionAlgebra(t, ci.level, f2).algebra;
  CHECK(lvl.multiply(ci.indicator, ci.indicator) == ci.indicator);
  for (std::size_t m = ci.level; m <= t.depth(); ++m) {
    CHECK(pullbackLevelSet(t, ci.level, sets[ci.level], m) == sets[m]);
  }
}

TEST_CASE("restriction to a closed subtower is a natural surjection") {
  PrimeField f2(2);
  Tower t = cantorTower(1);
  ClosedSubtower whole = makeClosedSubtower(t, fullSets(t));
  CHECK(closedToQuotientAlgebra(t, whole, 1, f2).matrix().isIdentity());

  ClosedSubtower zeroLeaf = makeClosedSubtower(t, {{}, {0}}, true);
  AlgebraHom q = closedToQuotientAlgebra(t, zeroLeaf, 1, f2);
  CHECK(q.source().dim() == 2);
  CHECK(q.target().dim() == 1);
  CHECK(q.isSurjective());
  CHECK(q.apply(Vec{1, 0}) == Vec{1});
  CHECK(q.apply(Vec{0, 1}) == Vec{0});

  // kernel of the restriction = principal ideal of 1 - chi_T
  Tower t2 = cantorTower(2);
  ClosedSubtower sub = makeClosedSubtower(t2, {{}, {}, {0, 3}}, true);
  for (std::size_t level = 0; level <= 2; ++level) {
    AlgebraHom ql = closedToQuotientAlgebra(t2, sub, level, f2);
    FiniteAlgebra amb = towerFunctionAlgebra(t2, level, f2).algebra;
    Vec chi(amb.dim(), 0);
    for (std::size_t idx : sub.levelSets[level]) chi[idx] = 1;
    QuotientResult ideal = quotientByIdeal(amb, {amb.sub(amb.one(), chi)});
    CHECK(ideal.algebra.dim() == ql.target().dim());
    // same kernel: both projections kill exactly the ideal span
    RowSpan kerQ(f2, amb.dim());
    for (const Vec& v : ql.matrix().kernelBasis()) kerQ.insert(v);
    RowSpan kerI(f2, amb.dim());
    for (const Vec& v : ideal.projection.matrix().kernelBasis()) kerI.insert(v);
    CHECK(kerQ.basis() == kerI.basis());
  }
}

TEST_CASE("tower maps validate and dualize with the expected variance") {
  PrimeField f2(2);
  Tower t = cantorTower(2);

  // identity tower map
  TowerMap id;
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    std::vector<std::size_t> lvl(t.levelSize(n));
    for (std::size_t i = 0; i < lvl.size(); ++i) lvl[i] = i;
    id.levelMaps.push_back(std::move(lvl));
  }
  validateTowerMap(t, t, id);

  // embed the constant tower as the all-zeros branch
  Tower konst = branchingTower(2, 1);
  TowerMap embed;
  embed.levelMaps = {{0}, {0}, {0}};
  validateTowerMap(konst, t, embed);
  for (std::size_t n = 0; n <= 2; ++n) {
    SetMap level{FiniteSetObj{konst.levels[n]}, FiniteSetObj{t.levels[n]},
                 embed.levelMaps[n]};
    // injective levelwise map dualizes to a surjective hom
    CHECK(isInjectiveMap(level));
    CHECK(dualizeSetMap(f2, level).isSurjective());
  }

  // broken square is rejected
  TowerMap broken = id;
  broken.levelMaps[2] = {2, 1, 0, 3};  // "00"->"10" across fibers, "0"->"0" upstairs
  CHECK_THROWS_WITH_AS(validateTowerMap(t, t, broken), doctest::Contains("square"), StoneError);
}

TEST_CASE("cantor level algebras are Boolean with full idempotent count") {
  PrimeField f2(2);
  for (std::size_t d = 0; d <= 3; ++d) {
    FiniteAlgebra lvl = towerFunctionAlgebra(cantorTower(d), d, f2).algebra;
    std::uint64_t count = 0;
    REQUIRE(lvl.elementCountWithin(4096, count));
    CHECK(enumerateIdempotents(lvl).size() == count);  // 2^(2^d), all of them
  }
}
