#include "stone/pearl.hpp"

#include <algorithm>

namespace stone {

PearlResult pearl(const FiniteAlgebra& a) {
  const std::size_t n = a.dim();
  FpMatrix frobMinusI = a.frobeniusMatrix().sub(FpMatrix::identity(a.field(), n));
  RowSpan fixed(a.field(), n);
  for (const Vec& v : frobMinusI.kernelBasis()) fixed.insert(v);
  SubalgebraResult sub = subalgebraOnBasis(a, fixed);
  return PearlResult{a, sub.algebra, sub.inclusion};
}

PBooleanCheck isPBoolean(const FiniteAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basisVector(i);
    if (a.power(b, a.field().p()) != b) return PBooleanCheck{false, b};
  }
  return PBooleanCheck{true, std::nullopt};
}

PBooleanAlgebra::PBooleanAlgebra(FiniteAlgebra a) : algebra_(std::move(a)) {
  PBooleanCheck c = isPBoolean(algebra_);
  if (!c.holds) {
    fail(Errc::NotPBoolean, "witness basis element index " +
                                std::to_string(algebra_.indexOf(*c.witness)));
  }
}

StoneQuotientResult stoneQuotient(const FiniteAlgebra& a) {
  std::vector<Vec> gens;
  gens.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basisVector(i);
    gens.push_back(a.sub(a.power(b, a.field().p()), b));
  }
  QuotientResult q = quotientByIdeal(a, gens);
  return StoneQuotientResult{PBooleanAlgebra(q.algebra), q.projection};
}

UniversalVerdict checkPearlUniversal(const PBooleanAlgebra& b, const FiniteAlgebra& a,
                                     const Caps& caps) {
  PearlResult pr = pearl(a);
  std::vector<AlgebraHom> direct = enumerateHoms(b.algebra(), a, caps);
  std::vector<AlgebraHom> viaPearl = enumerateHoms(b.algebra(), pr.pearlAlgebra, caps);

  UniversalVerdict v;
  v.homCountLeft = viaPearl.size();
  v.homCountRight = direct.size();

  // postcomposition with the inclusion, as sorted matrices
  std::vector<FpMatrix> composed;
  composed.reserve(viaPearl.size());
  for (const AlgebraHom& h : viaPearl) composed.push_back(pr.inclusion.matrix().mul(h.matrix()));
  std::sort(composed.begin(), composed.end());
  if (std::adjacent_find(composed.begin(), composed.end()) != composed.end()) {
    v.detail = "inclusion postcomposition is not injective";
    return v;
  }
  std::vector<FpMatrix> directM;
  directM.reserve(direct.size());
  for (const AlgebraHom& h : direct) directM.push_back(h.matrix());
  std::sort(directM.begin(), directM.end());
  if (composed != directM) {
    v.detail = "hom sets through the pearl and direct hom sets differ";
    return v;
  }
  v.holds = true;
  return v;
}

UniversalVerdict checkQUniversal(const FiniteAlgebra& a, const PBooleanAlgebra& b,
                                 const Caps& caps) {
  StoneQuotientResult q = stoneQuotient(a);
  std::vector<AlgebraHom> fromQ = enumerateHoms(q.algebra.algebra(), b.algebra(), caps);
  std::vector<AlgebraHom> fromA = enumerateHoms(a, b.algebra(), caps);

  UniversalVerdict v;
  v.homCountLeft = fromQ.size();
  v.homCountRight = fromA.size();

  std::vector<FpMatrix> precomposed;
  precomposed.reserve(fromQ.size());
  for (const AlgebraHom& h : fromQ) precomposed.push_back(h.matrix().mul(q.projection.matrix()));
  std::sort(precomposed.begin(), precomposed.end());
  if (std::adjacent_find(precomposed.begin(), precomposed.end()) != precomposed.end()) {
    v.detail = "projection precomposition is not injective";
    return v;
  }
  std::vector<FpMatrix> directM;
  directM.reserve(fromA.size());
  for (const AlgebraHom& h : fromA) directM.push_back(h.matrix());
  std::sort(directM.begin(), directM.end());
  if (precomposed != directM) {
    v.detail = "hom sets through Q and direct hom sets differ";
    return v;
  }
  v.holds = true;
  return v;
}

ComparisonVerdict checkPearlComparison(const PBooleanAlgebra& a, const AlgebraHom& f,
                                       const Caps& caps) {
  if (f.source() != a.algebra()) fail(Errc::SourceMismatch, "f must start at the p-Boolean base");
  if (!f.isInjective()) fail(Errc::NotInjectiveInput, "comparison requires injective f");
  const FiniteAlgebra& B = f.target();
  const PrimeField& F = B.field();

  PearlResult bp = pearl(B);

  // f lands in B°: images of p-Boolean elements are Frobenius-fixed
  std::vector<Vec> fpCols;
  fpCols.reserve(a.algebra().dim());
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    auto coords = bp.inclusion.matrix().solve(f.apply(a.algebra().basisVector(i)));
    if (!coords) fail(Errc::InternalClosureFailure, "image of a p-Boolean element left the pearl");
    fpCols.push_back(*coords);
  }
  AlgebraHom fPearl(a.algebra(), bp.pearlAlgebra,
                    FpMatrix::fromColumns(F, bp.pearlAlgebra.dim(), fpCols), true);

  RelativeTensorResult source = relativeTensor(bp.pearlAlgebra, bp.pearlAlgebra, fPearl, fPearl, caps);
  RelativeTensorResult target = relativeTensor(B, B, f, f, caps);
  PearlResult targetPearl = pearl(target.algebra);

  // B°⊗B° -> B⊗B -> B⊗_A B, then factor through the source quotient
  FpMatrix inclTensor = bp.inclusion.matrix().kronecker(bp.inclusion.matrix());
  FpMatrix toTarget = target.fromAbsoluteTensor.matrix().mul(inclTensor);

  // columns on the source basis: source basis vectors are projections of
  // absolute-tensor basis vectors; pick explicit preimages
  std::vector<Vec> compCols;
  for (std::size_t i = 0; i < source.algebra.dim(); ++i) {
    auto pre = source.fromAbsoluteTensor.matrix().solve(source.algebra.basisVector(i));
    if (!pre) fail(Errc::InternalClosureFailure, "quotient projection is not surjective");
    compCols.push_back(toTarget.apply(*pre));
  }
  AlgebraHom comparisonToTarget(source.algebra, target.algebra,
                                FpMatrix::fromColumns(F, target.algebra.dim(), compCols), true);
  // well-definedness: the composite through the absolute tensor must agree
  if (comparisonToTarget.matrix().mul(source.fromAbsoluteTensor.matrix()) != toTarget) {
    fail(Errc::InternalClosureFailure, "comparison map is not well defined on the quotient");
  }

  // land in the pearl of the target
  std::vector<Vec> pearlCols;
  for (std::size_t i = 0; i < source.algebra.dim(); ++i) {
    auto coords = targetPearl.inclusion.matrix().solve(comparisonToTarget.matrix().col(i));
    if (!coords) {
      fail(Errc::InternalClosureFailure, "comparison image is not Frobenius-fixed");
    }
    pearlCols.push_back(*coords);
  }
  AlgebraHom comparison(source.algebra, targetPearl.pearlAlgebra,
                        FpMatrix::fromColumns(F, targetPearl.pearlAlgebra.dim(), pearlCols), true);

  ComparisonVerdict v;
  v.sourceDim = source.algebra.dim();
  v.targetDim = targetPearl.pearlAlgebra.dim();
  v.injective = comparison.isInjective();
  v.surjective = comparison.isSurjective();
  return v;
}

}  // namespace stone
