#ifndef STONE_SPECTRUM_HPP
#define STONE_SPECTRUM_HPP

#include <vector>

#include "stone/pearl.hpp"

namespace stone {

/// Brute-force scan for all e with e*e = e, in element-index order.
/// Independent of the pearl/splitting route by construction: keep it that way,
/// it is the oracle the fast path is judged against.
std::vector<Vec> enumerateIdempotents(const FiniteAlgebra& a, const Caps& caps = {});

/// The orthogonal system attached to one p-Boolean element:
///   e_i = 1 - (a - i)^(p-1) for i = 1..p-1,  e_0 = 1 - sum e_i.
/// Validated: complete, orthogonal, and a = sum i*e_i.
std::vector<Vec> splitByElement(const PBooleanAlgebra& b, const Vec& a);

/// All primitive idempotents of a p-Boolean algebra by recursive block
/// splitting; |result| = dim B, sorted by element index.
std::vector<Vec> primitiveIdempotents(const PBooleanAlgebra& b);

/// Lattice of idempotents of a fixed algebra: meet ef, join e+f-ef,
/// complement 1-e, order e<=f iff ef=e. Operands are validated.
class IdempotentLattice {
public:
  explicit IdempotentLattice(FiniteAlgebra a) : algebra_(std::move(a)) {}

  const FiniteAlgebra& algebra() const { return algebra_; }
  bool isIdempotent(const Vec& e) const;
  void require(const Vec& e) const;  // NotIdempotent on failure

  Vec meet(const Vec& e, const Vec& f) const;
  Vec join(const Vec& e, const Vec& f) const;
  Vec complement(const Vec& e) const;
  bool leq(const Vec& e, const Vec& f) const;

private:
  FiniteAlgebra algebra_;
};

/// pi_0(Spec A): primitive idempotents of the pearl lifted into A, the factor
/// algebras e_i A, and A ≅ prod e_i A.
struct PiZeroResult {
  FiniteAlgebra ambient;
  PearlResult pearlResult;
  std::vector<Vec> components;           // primitive idempotents as elements of A
  std::vector<FiniteAlgebra> factors;    // e_i A with unit e_i
  std::vector<FpMatrix> factorBases;     // ambient.dim x factorDim each
  FiniteAlgebra productOfFactors;
  AlgebraHom reconstruction;             // A -> prod factors, bijective
};

PiZeroResult piZero(const FiniteAlgebra& a);

/// dim pearl(F_p[x]/(f)) = number of distinct irreducible factors of f.
int factorCountViaPearl(PrimeField field, const FpPoly& f, const Caps& caps = {});

/// Full factorization of a squarefree monic f by gcd-splitting along pearl
/// basis elements (the Frobenius-fixed subalgebra), canonical order.
std::vector<FpPoly> factorViaPearl(PrimeField field, const FpPoly& f, const Caps& caps = {});

}  // namespace stone

#endif
