#ifndef STONE_DUALITY_HPP
#define STONE_DUALITY_HPP

#include <string>
#include <vector>

#include "stone/spectrum.hpp"

namespace stone {

struct FiniteSetObj {
  std::vector<std::string> elements;  // distinct labels

  std::size_t size() const { return elements.size(); }
};

void validateFiniteSet(const FiniteSetObj& s);

/// A total map between finite sets, by target index per source element.
struct SetMap {
  FiniteSetObj source;
  FiniteSetObj target;
  std::vector<std::size_t> assignment;
};

void validateSetMap(const SetMap& m);
SetMap identitySetMap(const FiniteSetObj& s);
SetMap composeSetMaps(const SetMap& g, const SetMap& f);  // g ∘ f
bool isSurjective(const SetMap& m);
bool isInjectiveMap(const SetMap& m);

/// S -> F_p^S with basis labeled by S.
PBooleanAlgebra dualOfSet(PrimeField field, const FiniteSetObj& s);

/// Spec(B) for p-Boolean B: points are primitive idempotents; the hom at e
/// reads off the unique scalar c with e*x = c*e.
struct SpectrumResult {
  FiniteSetObj points;
  std::vector<Vec> pointIdempotents;     // primitive idempotent per point
  std::vector<AlgebraHom> pointHoms;     // B -> F_p per point
};

SpectrumResult spectrumOfPBoolean(const PBooleanAlgebra& b);

/// Contravariant functor on maps: precomposition F_p^T -> F_p^S.
AlgebraHom dualizeSetMap(PrimeField field, const SetMap& m);

/// Contravariant inverse: Spec(C) -> Spec(B) for g : B -> C.
SetMap dualizeAlgHom(const AlgebraHom& g);

struct RoundTripVerdict {
  bool holds = false;
  std::string detail;
};

/// Unit and counit of the finite-stage duality on S, plus naturality on the
/// supplied sample maps out of S.
RoundTripVerdict checkDualityRoundTrip(PrimeField field, const FiniteSetObj& s,
                                       const std::vector<SetMap>& sampleMaps = {});

struct FullFaithfulVerdict {
  bool holds = false;
  std::size_t setMapCount = 0;
  std::size_t homCount = 0;
  std::string detail;
};

/// dualizeSetMap must biject Hom_Set(S,T) with the independently enumerated
/// Hom(F_p^T, F_p^S); both counts must equal |T|^|S|.
FullFaithfulVerdict checkFullFaithfulness(PrimeField field, const FiniteSetObj& s,
                                          const FiniteSetObj& t, const Caps& caps = {});

}  // namespace stone

#endif
