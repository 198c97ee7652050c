#ifndef STONE_SHEAFMOD_HPP
#define STONE_SHEAFMOD_HPP

#include <vector>

#include "stone/duality.hpp"

namespace stone {

/// A module over a function algebra F_p^S, given by the projector family
/// rho(chi_s): idempotent, pairwise orthogonal, summing to the identity.
/// The action of a general element sum c_s chi_s is sum c_s rho(chi_s).
class CSModule {
public:
  CSModule(FiniteAlgebra algebra, std::size_t moduleDim, std::vector<FpMatrix> projectors);

  const FiniteAlgebra& algebra() const { return algebra_; }
  std::size_t moduleDim() const { return dim_; }
  const std::vector<FpMatrix>& projectors() const { return projectors_; }
  const FpMatrix& projector(std::size_t s) const { return projectors_[s]; }

  FpMatrix actionOf(const Vec& algebraElement) const;

private:
  FiniteAlgebra algebra_;
  std::size_t dim_;
  std::vector<FpMatrix> projectors_;
};

/// Requires diagonal structure constants and an all-ones unit, i.e. the
/// algebra is literally F_p^S on the indicator basis.
void requireFunctionAlgebra(const FiniteAlgebra& a);

/// Stalk data of a sheaf of F_p-modules on a finite set: one subspace of the
/// total space per point, jointly spanning and independent.
struct SheafOnFiniteSet {
  FiniteSetObj base;
  std::size_t totalDim = 0;
  std::vector<FpMatrix> stalkBases;  // totalDim x stalkDim(s), canonical echelon bases

  std::size_t stalkDim(std::size_t s) const { return stalkBases[s].cols(); }
  std::vector<std::size_t> stalkDims() const;
};

void validateSheaf(const SheafOnFiniteSet& f);

/// Stalk at s = image of rho(chi_s); sections over a clopen U are the direct
/// sum of the stalks in U.
SheafOnFiniteSet moduleToSheaf(const CSModule& m);

struct SheafToModuleResult {
  CSModule module;           // block-diagonal projectors on the stalk sum
  FpMatrix identification;   // stalk-sum coordinates -> original total space
};

SheafToModuleResult sheafToModule(const SheafOnFiniteSet& f, PrimeField field);

/// Sections over the clopen U (sorted point indices), as a module over F_p^U.
CSModule restrictToClopen(const CSModule& m, const std::vector<std::size_t>& u);

/// M ⊗_{F_p^S} N, computed stalk-wise.
CSModule tensorModules(const CSModule& m, const CSModule& n);

struct MonoidalVerdict {
  bool holds = false;
  std::string detail;
};

/// Stalk dims of the tensor must be pointwise products, and restriction must
/// commute with the tensor on every supplied clopen.
MonoidalVerdict checkMonoidalEquivalence(const CSModule& m, const CSModule& n,
                                         const std::vector<std::vector<std::size_t>>& clopens);

}  // namespace stone

#endif
