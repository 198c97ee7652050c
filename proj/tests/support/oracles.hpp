#ifndef STONE_TESTS_ORACLES_HPP
#define STONE_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/poly.hpp"

// Test-side oracles. These stay independent of the library's pearl/splitting
// machinery: factor counts come from plain trial division, nothing else.
namespace stone::oracle {

inline std::vector<FpPoly> monicPolysOfDegree(PrimeField field, int deg) {
  std::vector<FpPoly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= field.p();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec coeffs(static_cast<std::size_t>(deg) + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < deg; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<Fel>(v % field.p());
      v /= field.p();
    }
    coeffs.back() = 1;
    out.emplace_back(field, coeffs);
  }
  return out;
}

inline bool isIrreducibleByTrialDivision(const FpPoly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int e = 1; e <= d / 2; ++e) {
    for (const FpPoly& g : monicPolysOfDegree(f.field(), e)) {
      if (f.mod(g).isZero()) return false;
    }
  }
  return true;
}

// distinct irreducible divisors, by sieve up to degree 5 and the remainder
// argument above (a leftover of degree <= 10 with no divisor of degree <= 5
// is itself irreducible)
inline int distinctFactorCountByTrialDivision(FpPoly f) {
  int count = 0;
  for (int e = 1; e <= 5 && f.degree() > 0; ++e) {
    for (const FpPoly& g : monicPolysOfDegree(f.field(), e)) {
      if (!isIrreducibleByTrialDivision(g)) continue;
      if (f.mod(g).isZero()) {
        ++count;
        while (f.mod(g).isZero()) f = f.divmod(g).quot;
      }
    }
  }
  if (f.degree() > 0) ++count;
  return count;
}

inline FpPoly randomMonicPoly(std::mt19937_64& rng, PrimeField field, std::size_t deg) {
  Vec coeffs(deg + 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    coeffs[i] = static_cast<Fel>(rng() % field.p());
  }
  coeffs[deg] = 1;
  return FpPoly(field, coeffs);
}

inline Vec randomElement(std::mt19937_64& rng, const FiniteAlgebra& a) {
  Vec v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v[i] = static_cast<Fel>(rng() % a.field().p());
  return v;
}

// small random corpus member: quotients, function algebras, and their
// products/tensors
inline FiniteAlgebra randomAlgebra(std::mt19937_64& rng, unsigned p, std::size_t maxDim) {
  PrimeField field(p);
  switch (rng() % 4) {
    case 0:
      return functionAlgebra(field, rng() % (maxDim + 1));
    case 1: {
      const std::size_t deg = 1 + rng() % maxDim;
      return univariateQuotient(field, randomMonicPoly(rng, field, deg));
    }
    case 2: {
      const std::size_t half = maxDim / 2;
      FiniteAlgebra a = randomAlgebra(rng, p, half > 0 ? half : 1);
      FiniteAlgebra b = randomAlgebra(rng, p, half > 0 ? half : 1);
      return productAlgebra(a, b).algebra;
    }
    default: {
      const int d1 = 1 + static_cast<int>(rng() % 2);
      const int d2 = 1 + static_cast<int>(rng() % 2);
      FiniteAlgebra a = univariateQuotient(field, randomMonicPoly(rng, field, d1));
      FiniteAlgebra b = univariateQuotient(field, randomMonicPoly(rng, field, d2));
      return tensorAlgebra(a, b).algebra;
    }
  }
}

}  // namespace stone::oracle

#endif
