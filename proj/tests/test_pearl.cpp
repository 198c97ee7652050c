#include <doctest.h>

#include "stone/pearl.hpp"
#include "support/oracles.hpp"

using namespace stone;

namespace {

FiniteAlgebra makeF4() {
  PrimeField f2(2);
  return univariateQuotient(f2, FpPoly(f2, Vec{1, 1, 1}));
}

FiniteAlgebra dualNumbers() {
  PrimeField f2(2);
  return univariateQuotient(f2, FpPoly(f2, Vec{0, 0, 1}));  // x^2 = 0
}

// independent route: count Frobenius-fixed elements by scanning all of A
std::uint64_t fixedPointCountByScan(const FiniteAlgebra& a) {
  std::uint64_t count = 0, total = 0;
  REQUIRE(a.elementCountWithin(4096, total));
  for (std::uint64_t i = 0; i < total; ++i) {
    Vec v = a.elementAt(i);
    if (a.power(v, a.field().p()) == v) ++count;
  }
  return count;
}

std::uint64_t powU(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("pearl of a field extension is the base field") {
  PearlResult pr = pearl(makeF4());
  CHECK(pr.pearlAlgebra.dim() == 1);
  CHECK(pr.inclusion.matrix().col(0) == Vec{1, 0});  // basis {1}
  CHECK(fixedPointCountByScan(pr.ambient) == 2);     // only 0 and 1
}

TEST_CASE("pearl of a p-Boolean algebra is everything") {
  FiniteAlgebra b = functionAlgebra(PrimeField(2), 3);
  PearlResult pr = pearl(b);
  CHECK(pr.pearlAlgebra.dim() == 3);
  CHECK(pr.inclusion.matrix().isIdentity());
}

TEST_CASE("pearl of the dual numbers is the constants") {
  PearlResult pr = pearl(dualNumbers());
  CHECK(pr.pearlAlgebra.dim() == 1);
  CHECK(fixedPointCountByScan(pr.ambient) == 2);
}

TEST_CASE("pearl of F4 tensor F4 has dimension two") {
  FiniteAlgebra f4 = makeF4();
  FiniteAlgebra t = tensorAlgebra(f4, f4).algebra;
  PearlResult pr = pearl(t);
  CHECK(pr.pearlAlgebra.dim() == 2);
  CHECK(fixedPointCountByScan(t) == 4);
  // the pearl is p-Boolean and included injectively
  CHECK(isPBoolean(pr.pearlAlgebra).holds);
  CHECK(pr.inclusion.isInjective());
}

TEST_CASE("pearl basis elements are Frobenius fixed in the ambient algebra") {
  std::mt19937_64 rng(0x5EED10);
  for (unsigned p : {2u, 3u}) {
    for (int t = 0; t < 6; ++t) {
      FiniteAlgebra a = oracle::randomAlgebra(rng, p, 4);
      PearlResult pr = pearl(a);
      for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
        Vec v = pr.inclusion.matrix().col(i);
        CHECK(a.power(v, p) == v);
      }
      // pearl dim counts fixed points: |A°| = p^dim
      std::uint64_t total = 0;
      if (a.elementCountWithin(4096, total)) {
        CHECK(fixedPointCountByScan(a) == powU(p, pr.pearlAlgebra.dim()));
      }
    }
  }
}

TEST_CASE("isPBoolean verdicts") {
  PrimeField f3(3);
  CHECK(isPBoolean(univariateQuotient(f3, FpPoly(f3, Vec{2, 0, 1}))).holds);  // x^2 = 1
  PBooleanCheck c = isPBoolean(dualNumbers());
  CHECK_FALSE(c.holds);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == Vec{0, 1});  // x itself
  CHECK(isPBoolean(functionAlgebra(PrimeField(2), 0)).holds);  // zero ring, vacuous
}

TEST_CASE("stone quotient Q(A)") {
  PrimeField f2(2);
  StoneQuotientResult q1 = stoneQuotient(dualNumbers());
  CHECK(q1.algebra.algebra().dim() == 1);
  CHECK(q1.projection.isSurjective());

  FiniteAlgebra b = functionAlgebra(f2, 3);
  StoneQuotientResult q2 = stoneQuotient(b);
  CHECK(q2.algebra.algebra().dim() == 3);
  CHECK(q2.projection.matrix().isIdentity());

  StoneQuotientResult q3 = stoneQuotient(makeF4());
  CHECK(q3.algebra.algebra().isZeroRing());
}

TEST_CASE("stone quotient kills a^p - a for random full elements") {
  std::mt19937_64 rng(0x5EED11);
  for (unsigned p : {2u, 3u, 5u}) {
    FiniteAlgebra a = oracle::randomAlgebra(rng, p, 4);
    StoneQuotientResult q = stoneQuotient(a);
    for (int i = 0; i < 16; ++i) {
      Vec x = oracle::randomElement(rng, a);
      Vec diff = a.sub(a.power(x, p), x);
      CHECK(q.projection.apply(diff) == q.algebra.algebra().zero());
    }
  }
}

TEST_CASE("pearl universal property on hand-picked pairs") {
  PrimeField f2(2);
  PBooleanAlgebra b2(functionAlgebra(f2, 2));
  UniversalVerdict v1 = checkPearlUniversal(b2, dualNumbers());
  CHECK(v1.holds);
  CHECK(v1.homCountLeft == 2);
  CHECK(v1.homCountRight == 2);

  PBooleanAlgebra base(functionAlgebra(f2, 1));
  UniversalVerdict v2 = checkPearlUniversal(base, makeF4());
  CHECK(v2.holds);
  CHECK(v2.homCountLeft == 1);
  CHECK(v2.homCountRight == 1);

  FiniteAlgebra t44 = tensorAlgebra(makeF4(), makeF4()).algebra;
  UniversalVerdict v3 = checkPearlUniversal(b2, t44);
  CHECK(v3.holds);
  CHECK(v3.homCountLeft == 4);
  CHECK(v3.homCountRight == 4);
}

TEST_CASE("every hom from a p-Boolean algebra lands in the pearl") {
  std::mt19937_64 rng(0x5EED12);
  for (unsigned p : {2u, 3u}) {
    PrimeField field(p);
    for (int t = 0; t < 5; ++t) {
      FiniteAlgebra a = oracle::randomAlgebra(rng, p, 3);
      PearlResult pr = pearl(a);
      RowSpan pearlSpan(field, a.dim());
      for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
        pearlSpan.insert(pr.inclusion.matrix().col(i));
      }
      for (std::size_t m = 0; m <= 2; ++m) {
        FiniteAlgebra b = functionAlgebra(field, m);
        for (const AlgebraHom& h : enumerateHoms(b, a)) {
          for (std::size_t c = 0; c < b.dim(); ++c) {
            CHECK(pearlSpan.contains(h.matrix().col(c)));
          }
        }
      }
    }
  }
}

TEST_CASE("Q universal property on hand-picked pairs") {
  PrimeField f2(2);
  PBooleanAlgebra base(functionAlgebra(f2, 1));

  UniversalVerdict v1 = checkQUniversal(makeF4(), base);
  CHECK(v1.holds);
  CHECK(v1.homCountLeft == 0);  // Q(F4) = 0
  CHECK(v1.homCountRight == 0);

  UniversalVerdict v2 = checkQUniversal(dualNumbers(), base);
  CHECK(v2.holds);
  CHECK(v2.homCountLeft == 1);
  CHECK(v2.homCountRight == 1);

  FiniteAlgebra b3 = functionAlgebra(f2, 3);
  UniversalVerdict v3 = checkQUniversal(b3, base);
  CHECK(v3.holds);
  CHECK(v3.homCountLeft == 3);
}

TEST_CASE("pearl is an idempotent monad") {
  std::mt19937_64 rng(0x5EED13);
  for (unsigned p : {2u, 3u}) {
    for (int t = 0; t < 5; ++t) {
      FiniteAlgebra a = oracle::randomAlgebra(rng, p, 4);
      PearlResult pr = pearl(a);
      PearlResult again = pearl(pr.pearlAlgebra);
      CHECK(again.pearlAlgebra.dim() == pr.pearlAlgebra.dim());
      CHECK(again.inclusion.matrix().isIdentity());
    }
  }
}

TEST_CASE("Q is idempotent") {
  std::mt19937_64 rng(0x5EED14);
  for (unsigned p : {2u, 3u}) {
    FiniteAlgebra a = oracle::randomAlgebra(rng, p, 4);
    StoneQuotientResult q = stoneQuotient(a);
    StoneQuotientResult qq = stoneQuotient(q.algebra.algebra());
    CHECK(qq.algebra.algebra().dim() == q.algebra.algebra().dim());
    CHECK(qq.projection.matrix().isIdentity());
  }
}

TEST_CASE("pearl commutes with finite products") {
  std::mt19937_64 rng(0x5EED15);
  for (unsigned p : {2u, 3u}) {
    for (int t = 0; t < 4; ++t) {
      FiniteAlgebra a = oracle::randomAlgebra(rng, p, 3);
      FiniteAlgebra b = oracle::randomAlgebra(rng, p, 3);
      ProductResult prod = productAlgebra(a, b);
      CHECK(pearl(prod.algebra).pearlAlgebra.dim() ==
            pearl(a).pearlAlgebra.dim() + pearl(b).pearlAlgebra.dim());
    }
  }
}

TEST_CASE("pearl comparison map B°⊗B° -> (B⊗B)°") {
  PrimeField f2(2);
  FiniteAlgebra base = functionAlgebra(f2, 1);
  PBooleanAlgebra baseB(base);
  FiniteAlgebra f4 = makeF4();

  AlgebraHom toF4(base, f4, FpMatrix::fromColumns(f2, 2, {Vec{1, 0}}), true);
  ComparisonVerdict v1 = checkPearlComparison(baseB, toF4);
  CHECK(v1.sourceDim == 1);
  CHECK(v1.targetDim == 2);
  CHECK(v1.injective);
  CHECK_FALSE(v1.surjective);

  // A = B, f = id: isomorphism
  FiniteAlgebra s2 = functionAlgebra(f2, 2);
  ComparisonVerdict v2 = checkPearlComparison(PBooleanAlgebra(s2), AlgebraHom::identity(s2));
  CHECK(v2.injective);
  CHECK(v2.surjective);
  CHECK(v2.sourceDim == v2.targetDim);

  // A = F_2, B = F_2^2: both sides p-Boolean of dim 4
  AlgebraHom diag(base, s2, FpMatrix::fromColumns(f2, 2, {Vec{1, 1}}), true);
  ComparisonVerdict v3 = checkPearlComparison(baseB, diag);
  CHECK(v3.sourceDim == 4);
  CHECK(v3.targetDim == 4);
  CHECK(v3.injective);
  CHECK(v3.surjective);

  // non-injective input is rejected
  FiniteAlgebra s2b = functionAlgebra(f2, 2);
  AlgebraHom collapse(s2b, base, FpMatrix::fromRows(f2, 2, {Vec{1, 0}}), false);
  CHECK_THROWS_WITH_AS(checkPearlComparison(PBooleanAlgebra(s2b), collapse),
                       doctest::Contains("NotInjectiveInput"), StoneError);
}
