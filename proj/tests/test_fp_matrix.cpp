#include <doctest.h>

#include "stone/matrix.hpp"

using namespace stone;

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.inv(3) == 2);
  CHECK(f5.pow(2, 10) == 4);
  CHECK(f5.reduce(-7) == 3);

  CHECK_THROWS_AS(PrimeField(1), StoneError);
  CHECK_THROWS_AS(PrimeField(4), StoneError);
  CHECK_THROWS_AS(PrimeField(255), StoneError);
  CHECK(PrimeField(251).p() == 251);
  CHECK(PrimeField(2).p() == 2);
}

TEST_CASE("every nonzero element has an inverse") {
  for (unsigned p : {2u, 3u, 7u, 251u}) {
    PrimeField f(p);
    for (unsigned a = 1; a < p; ++a) {
      CHECK(f.mul(static_cast<Fel>(a), f.inv(static_cast<Fel>(a))) == 1);
    }
  }
}

TEST_CASE("rref, rank and kernel") {
  PrimeField f2(2);
  FpMatrix m(f2, 3, 3);
  // rows: 110 / 011 / 101 over F_2, rank 2
  m.set(0, 0, 1); m.set(0, 1, 1);
  m.set(1, 1, 1); m.set(1, 2, 1);
  m.set(2, 0, 1); m.set(2, 2, 1);
  CHECK(m.rank() == 2);

  auto kernel = m.kernelBasis();
  REQUIRE(kernel.size() == 1);
  CHECK(m.apply(kernel[0]) == Vec{0, 0, 0});
  CHECK(kernel[0] == Vec{1, 1, 1});
}

TEST_CASE("solve finds a particular solution or reports inconsistency") {
  PrimeField f3(3);
  FpMatrix m(f3, 2, 2);
  m.set(0, 0, 1); m.set(0, 1, 2);
  m.set(1, 0, 0); m.set(1, 1, 1);
  auto x = m.solve(Vec{1, 1});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == Vec{1, 1});

  FpMatrix singular(f3, 2, 2);
  singular.set(0, 0, 1); singular.set(0, 1, 1);
  singular.set(1, 0, 2); singular.set(1, 1, 2);
  CHECK_FALSE(singular.solve(Vec{1, 0}).has_value());
  auto y = singular.solve(Vec{1, 2});
  REQUIRE(y.has_value());
  CHECK(singular.apply(*y) == Vec{1, 2});
}

TEST_CASE("kronecker dims and entries") {
  PrimeField f3(3);
  FpMatrix a(f3, 2, 1);
  a.set(0, 0, 1); a.set(1, 0, 2);
  FpMatrix b(f3, 1, 2);
  b.set(0, 0, 2); b.set(0, 1, 1);
  FpMatrix k = a.kronecker(b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(0, 1) == 1);
  CHECK(k.at(1, 0) == 1);
  CHECK(k.at(1, 1) == 2);
}

TEST_CASE("row span canonical basis and coordinates") {
  PrimeField f2(2);
  RowSpan span(f2, 3);
  CHECK(span.insert(Vec{1, 1, 0}));
  CHECK(span.insert(Vec{0, 1, 1}));
  CHECK_FALSE(span.insert(Vec{1, 0, 1}));  // dependent
  CHECK(span.dim() == 2);
  // canonical rows regardless of insertion order
  RowSpan other(f2, 3);
  other.insert(Vec{1, 0, 1});
  other.insert(Vec{1, 1, 0});
  CHECK(span.basis() == other.basis());

  auto coords = span.coordinates(Vec{1, 0, 1});
  REQUIRE(coords.has_value());
  Vec rebuilt(3, 0);
  for (std::size_t i = 0; i < coords->size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      rebuilt[j] = f2.add(rebuilt[j], f2.mul((*coords)[i], span.basis()[i][j]));
    }
  }
  CHECK(rebuilt == Vec{1, 0, 1});
  CHECK_FALSE(span.coordinates(Vec{1, 0, 0}).has_value());
}
