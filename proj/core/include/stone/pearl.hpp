#ifndef STONE_PEARL_HPP
#define STONE_PEARL_HPP

#include <optional>
#include <string>

#include "stone/algebra.hpp"

namespace stone {

/// The pearl A°: the maximal p-Boolean subalgebra of A, computed as the fixed
/// space of the Frobenius a -> a^p. The basis is the reduced row-echelon
/// kernel basis of (Frobenius - I), so the presentation is canonical.
struct PearlResult {
  FiniteAlgebra ambient;
  FiniteAlgebra pearlAlgebra;
  AlgebraHom inclusion;  // pearlAlgebra -> ambient, injective
};

PearlResult pearl(const FiniteAlgebra& a);

struct PBooleanCheck {
  bool holds;
  std::optional<Vec> witness;  // a basis element with b^p != b
};

/// a^p = a for all a, decided on the basis: the Frobenius is linear, so
/// fixing a basis fixes everything.
PBooleanCheck isPBoolean(const FiniteAlgebra& a);

/// A FiniteAlgebra carrying a checked p-Boolean certificate.
class PBooleanAlgebra {
public:
  explicit PBooleanAlgebra(FiniteAlgebra a);
  const FiniteAlgebra& algebra() const { return algebra_; }

private:
  FiniteAlgebra algebra_;
};

struct StoneQuotientResult {
  PBooleanAlgebra algebra;  // Q(A) = A/(a^p - a)
  AlgebraHom projection;    // A -> Q(A), surjective
};

/// Q(A) = A/(a^p - a : a in A). Basis generators b_i^p - b_i suffice:
/// a -> a^p - a is additive in characteristic p.
StoneQuotientResult stoneQuotient(const FiniteAlgebra& a);

struct UniversalVerdict {
  bool holds = false;
  std::size_t homCountLeft = 0;   // through the universal object
  std::size_t homCountRight = 0;  // direct
  std::string detail;
};

/// Terminality of A° -> A: postcomposition with the inclusion must biject
/// Hom(B, A°) with Hom(B, A) for p-Boolean B. Both sides enumerated.
UniversalVerdict checkPearlUniversal(const PBooleanAlgebra& b, const FiniteAlgebra& a,
                                     const Caps& caps = {});

/// Q is left adjoint: precomposition with A -> Q(A) must biject
/// Hom(Q(A), B) with Hom(A, B) for p-Boolean B.
UniversalVerdict checkQUniversal(const FiniteAlgebra& a, const PBooleanAlgebra& b,
                                 const Caps& caps = {});

struct ComparisonVerdict {
  bool injective = false;
  bool surjective = false;
  std::size_t sourceDim = 0;  // dim B° ⊗_A B°
  std::size_t targetDim = 0;  // dim (B ⊗_A B)°
};

/// The comparison map B° ⊗_A B° -> (B ⊗_A B)° for p-Boolean A and injective
/// f : A -> B (injectivity stands in for faithful flatness at this scale).
ComparisonVerdict checkPearlComparison(const PBooleanAlgebra& a, const AlgebraHom& f,
                                       const Caps& caps = {});

}  // namespace stone

#endif
