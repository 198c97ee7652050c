#include <doctest.h>

#include <algorithm>

#include "stone/spectrum.hpp"
#include "support/oracles.hpp"

using namespace stone;

namespace {

FiniteAlgebra makeF4() {
  PrimeField f2(2);
  return univariateQuotient(f2, FpPoly(f2, Vec{1, 1, 1}));
}

// primitive idempotents straight from the brute-force list: nonzero e whose
// only sub-idempotents are 0 and e
std::vector<Vec> primitivesByBruteForce(const FiniteAlgebra& a) {
  std::vector<Vec> all = enumerateIdempotents(a);
  std::vector<Vec> out;
  for (const Vec& e : all) {
    if (e == a.zero()) continue;
    bool primitive = true;
    for (const Vec& f : all) {
      if (f == a.zero() || f == e) continue;
      if (a.multiply(e, f) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("brute force idempotent enumeration") {
  PrimeField f2(2);
  CHECK(enumerateIdempotents(functionAlgebra(f2, 2)).size() == 4);
  CHECK(enumerateIdempotents(makeF4()).size() == 2);
  FiniteAlgebra dual = univariateQuotient(f2, FpPoly(f2, Vec{0, 0, 1}));
  auto idems = enumerateIdempotents(dual);
  REQUIRE(idems.size() == 2);
  CHECK(idems[0] == dual.zero());
  CHECK(idems[1] == dual.one());

  Caps tight;
  tight.elementCap = 2;
  CHECK_THROWS_WITH_AS(enumerateIdempotents(functionAlgebra(f2, 2), tight),
                       doctest::Contains("EnumerationCapExceeded"), StoneError);
}

TEST_CASE("splitByElement produces the fiber system") {
  PrimeField f3(3);
  PBooleanAlgebra b3(functionAlgebra(f3, 3));
  auto es = splitByElement(b3, Vec{0, 1, 2});
  REQUIRE(es.size() == 3);
  CHECK(es[0] == Vec{1, 0, 0});
  CHECK(es[1] == Vec{0, 1, 0});
  CHECK(es[2] == Vec{0, 0, 1});

  PrimeField f2(2);
  PBooleanAlgebra b2(functionAlgebra(f2, 2));
  auto es2 = splitByElement(b2, Vec{1, 0});
  REQUIRE(es2.size() == 2);
  CHECK(es2[1] == Vec{1, 0});  // e_1 = a in a Boolean ring
  CHECK(es2[0] == Vec{0, 1});

  auto es3 = splitByElement(b2, b2.algebra().zero());
  CHECK(es3[0] == b2.algebra().one());
  CHECK(es3[1] == b2.algebra().zero());
}

TEST_CASE("primitive idempotents by recursive splitting") {
  PrimeField f2(2);
  PBooleanAlgebra b3(functionAlgebra(f2, 3));
  auto prim = primitiveIdempotents(b3);
  REQUIRE(prim.size() == 3);
  CHECK(prim[0] == Vec{1, 0, 0});
  CHECK(prim[1] == Vec{0, 1, 0});
  CHECK(prim[2] == Vec{0, 0, 1});

  // pearl of F2[x]/(x^3+x) has two primitive idempotents
  FiniteAlgebra a = univariateQuotient(f2, FpPoly(f2, Vec{0, 1, 0, 1}));
  PearlResult pr = pearl(a);
  CHECK(primitiveIdempotents(PBooleanAlgebra(pr.pearlAlgebra)).size() == 2);

  FiniteAlgebra t44 = tensorAlgebra(makeF4(), makeF4()).algebra;
  PearlResult pr44 = pearl(t44);
  CHECK(primitiveIdempotents(PBooleanAlgebra(pr44.pearlAlgebra)).size() == 2);
}

TEST_CASE("fast primitives agree with the brute-force oracle") {
  std::mt19937_64 rng(0x5EED20);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int t = 0; t < 6; ++t) {
      FiniteAlgebra a = oracle::randomAlgebra(rng, p, 3);
      std::uint64_t total = 0;
      if (!a.elementCountWithin(4096, total)) continue;
      PiZeroResult pz = piZero(a);
      std::vector<Vec> fast = pz.components;
      std::vector<Vec> slow = primitivesByBruteForce(a);
      auto key = [&a](const Vec& v) { return a.indexOf(v); };
      std::sort(fast.begin(), fast.end(), [&](const Vec& x, const Vec& y) { return key(x) < key(y); });
      std::sort(slow.begin(), slow.end(), [&](const Vec& x, const Vec& y) { return key(x) < key(y); });
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("every idempotent is Frobenius fixed and lies in the pearl") {
  std::mt19937_64 rng(0x5EED21);
  for (unsigned p : {2u, 3u}) {
    FiniteAlgebra a = oracle::randomAlgebra(rng, p, 3);
    std::uint64_t total = 0;
    if (!a.elementCountWithin(4096, total)) continue;
    PearlResult pr = pearl(a);
    RowSpan span(a.field(), a.dim());
    for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
      span.insert(pr.inclusion.matrix().col(i));
    }
    for (const Vec& e : enumerateIdempotents(a)) {
      CHECK(a.power(e, p) == e);
      CHECK(span.contains(e));
    }
  }
}

TEST_CASE("piZero decomposition") {
  PrimeField f2(2);
  // x^3+x = x(x+1)^2: components of dims 1 and 2
  FiniteAlgebra a = univariateQuotient(f2, FpPoly(f2, Vec{0, 1, 0, 1}));
  PiZeroResult pz = piZero(a);
  REQUIRE(pz.components.size() == 2);
  std::vector<std::size_t> dims{pz.factors[0].dim(), pz.factors[1].dim()};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2});
  CHECK(pz.reconstruction.isBijective());

  // connected algebras have a single component
  for (const FiniteAlgebra& alg : {makeF4(), univariateQuotient(f2, FpPoly(f2, Vec{0, 0, 1}))}) {
    PiZeroResult one = piZero(alg);
    CHECK(one.components.size() == 1);
    CHECK(one.factors[0].dim() == alg.dim());
    CHECK(one.components[0] == alg.one());
  }

  // F_p^S: |S| components, all factors of dim 1
  PiZeroResult fs = piZero(functionAlgebra(PrimeField(3), 4));
  CHECK(fs.components.size() == 4);
  for (const FiniteAlgebra& f : fs.factors) CHECK(f.dim() == 1);

  // dims always add up
  std::mt19937_64 rng(0x5EED22);
  for (int t = 0; t < 6; ++t) {
    FiniteAlgebra r = oracle::randomAlgebra(rng, 2, 4);
    PiZeroResult rz = piZero(r);
    std::size_t sum = 0;
    for (const FiniteAlgebra& f : rz.factors) sum += f.dim();
    CHECK(sum == r.dim());
    CHECK(rz.components.size() == pearl(r).pearlAlgebra.dim());
  }
}

TEST_CASE("idempotent lattice") {
  PrimeField f2(2);
  FiniteAlgebra b = functionAlgebra(f2, 2);
  IdempotentLattice lat(b);

  CHECK(lat.join(Vec{1, 0}, Vec{0, 1}) == Vec{1, 1});
  CHECK(lat.meet(Vec{1, 0}, Vec{1, 1}) == Vec{1, 0});
  CHECK(lat.complement(lat.complement(Vec{1, 0})) == Vec{1, 0});
  CHECK(lat.leq(Vec{1, 0}, Vec{1, 1}));
  CHECK_FALSE(lat.leq(Vec{1, 1}, Vec{1, 0}));

  FiniteAlgebra f4 = makeF4();
  IdempotentLattice lat4(f4);
  CHECK_THROWS_WITH_AS(lat4.complement(Vec{0, 1}), doctest::Contains("NotIdempotent"),
                       StoneError);
}

TEST_CASE("lattice laws and the two-generator ideal identity") {
  std::mt19937_64 rng(0x5EED23);
  for (unsigned p : {2u, 3u}) {
    FiniteAlgebra a = oracle::randomAlgebra(rng, p, 3);
    std::uint64_t total = 0;
    if (!a.elementCountWithin(2048, total)) continue;
    std::vector<Vec> idems = enumerateIdempotents(a);
    IdempotentLattice lat(a);
    for (int t = 0; t < 15; ++t) {
      const Vec& e = idems[rng() % idems.size()];
      const Vec& f = idems[rng() % idems.size()];
      const Vec& g = idems[rng() % idems.size()];
      // distributivity and De Morgan
      CHECK(lat.meet(e, lat.join(f, g)) == lat.join(lat.meet(e, f), lat.meet(e, g)));
      CHECK(lat.complement(lat.join(e, f)) == lat.meet(lat.complement(e), lat.complement(f)));
      // join(e,f) generates the ideal (e,f): compare span closures
      QuotientResult qPair = quotientByIdeal(a, {e, f});
      QuotientResult qJoin = quotientByIdeal(a, {lat.join(e, f)});
      CHECK(qPair.algebra.dim() == qJoin.algebra.dim());
      CHECK(qPair.projection.matrix() == qJoin.projection.matrix());
    }
  }
}

TEST_CASE("factor counting through the pearl") {
  PrimeField f2(2), f3(3);
  // (x+1)^2 (x^2+x+1) = x^4+x^3+x+1
  CHECK(factorCountViaPearl(f2, FpPoly(f2, Vec{1, 1, 0, 1, 1})) == 2);
  CHECK(factorCountViaPearl(f2, FpPoly(f2, Vec{1, 1, 1})) == 1);
  CHECK(factorCountViaPearl(f3, FpPoly(f3, Vec{2, 0, 1})) == 2);
  CHECK_THROWS_WITH_AS(factorCountViaPearl(f3, FpPoly(f3, Vec{1, 0, 2})),
                       doctest::Contains("NotMonic"), StoneError);

  std::mt19937_64 rng(0x5EED24);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField field(p);
    for (int t = 0; t < 20; ++t) {
      FpPoly f = oracle::randomMonicPoly(rng, field, 1 + rng() % 6);
      CHECK(factorCountViaPearl(field, f) == oracle::distinctFactorCountByTrialDivision(f));
    }
  }
}

TEST_CASE("factorViaPearl splits squarefree polynomials") {
  PrimeField f2(2), f3(3);

  auto fs = factorViaPearl(f2, FpPoly(f2, Vec{0, 1, 1}));  // x^2+x = x(x+1)
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].toString() == "x");
  CHECK(fs[1].toString() == "x+1");

  auto irr = factorViaPearl(f2, FpPoly(f2, Vec{1, 1, 1}));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0] == FpPoly(f2, Vec{1, 1, 1}));

  auto roots = factorViaPearl(f3, FpPoly(f3, Vec{0, 2, 0, 1}));  // x^3 - x
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].toString() == "x");
  CHECK(roots[1].toString() == "x+1");
  CHECK(roots[2].toString() == "x+2");

  CHECK_THROWS_WITH_AS(factorViaPearl(f2, FpPoly(f2, Vec{1, 0, 1})),  // (x+1)^2
                       doctest::Contains("NotSquarefree"), StoneError);
  CHECK_THROWS_WITH_AS(factorViaPearl(f2, FpPoly(f2, Vec{1, 0, 0, 0, 1})),  // derivative 0
                       doctest::Contains("NotSquarefree"), StoneError);

  // random squarefree inputs: product of outputs = f, outputs irreducible
  std::mt19937_64 rng(0x5EED25);
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField field(p);
    int done = 0;
    while (done < 10) {
      FpPoly f = oracle::randomMonicPoly(rng, field, 2 + rng() % 5);
      if (f.derivative().isZero() || polyGcd(f, f.derivative()).degree() != 0) continue;
      ++done;
      auto factors = factorViaPearl(field, f);
      FpPoly prod = FpPoly::constant(field, 1);
      for (const FpPoly& g : factors) {
        CHECK(oracle::isIrreducibleByTrialDivision(g));
        prod = prod.mul(g);
      }
      CHECK(prod == f);
      CHECK(static_cast<int>(factors.size()) ==
            oracle::distinctFactorCountByTrialDivision(f));
    }
  }
}
