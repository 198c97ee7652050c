#ifndef STONE_PROFINITE_HPP
#define STONE_PROFINITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "stone/duality.hpp"

namespace stone {

/// A finite-depth truncation of a light profinite set: finite levels
/// S_0..S_d with transition maps tau_n : S_{n+1} -> S_n. All statements made
/// with towers are statements "at depth d".
struct Tower {
  std::vector<std::vector<std::string>> levels;      // labels per level
  std::vector<std::vector<std::size_t>> transitions; // transitions[n][j] in S_n
  bool surjectiveTransitions = false;

  std::size_t depth() const { return levels.size() - 1; }
  std::size_t levelSize(std::size_t n) const { return levels[n].size(); }
};

void validateTower(const Tower& t);

/// S_n = {0..k-1}^n with truncation of the last digit; labels are digit
/// strings, the root level is the empty word.
Tower branchingTower(std::size_t depth, std::size_t arity);
Tower cantorTower(std::size_t depth);  // arity 2

/// Equal-depth levelwise map with commuting squares.
struct TowerMap {
  std::vector<std::vector<std::size_t>> levelMaps;  // source level n -> target level n
};

void validateTowerMap(const Tower& source, const Tower& target, const TowerMap& m);

/// Closed subset in tower form: T_n ⊆ S_n with tau(T_{n+1}) = T_n exactly.
struct ClosedSubtower {
  std::vector<std::vector<std::size_t>> levelSets;  // sorted indices per level
};

/// Open subset in cylinder form: A_n ⊆ S_n with tau^{-1}(A_n) ⊆ A_{n+1};
/// the open set is the union of the cylinders over the A_n.
struct OpenCylinderFamily {
  std::vector<std::vector<std::size_t>> levelSets;
};

/// Validates the levelwise-image condition; if normalize is set, each T_n is
/// first replaced by the image of T_d under the composed transitions.
ClosedSubtower makeClosedSubtower(const Tower& t, std::vector<std::vector<std::size_t>> sets,
                                  bool normalize = false);

OpenCylinderFamily makeOpenCylinderFamily(const Tower& t,
                                          std::vector<std::vector<std::size_t>> sets);

OpenCylinderFamily complementClosed(const Tower& t, const ClosedSubtower& sub);

/// InvalidAtDepth when the complement fails the levelwise-image condition,
/// i.e. the truncation is too shallow to represent the closed complement.
ClosedSubtower complementOpen(const Tower& t, const OpenCylinderFamily& fam);

struct TowerAlgebraResult {
  FiniteAlgebra algebra;                    // F_p^{S_n}
  std::optional<AlgebraHom> transitionHom;  // F_p^{S_n} -> F_p^{S_{n+1}}, when n < depth
};

TowerAlgebraResult towerFunctionAlgebra(const Tower& t, std::size_t level, PrimeField field);

/// Equality of germs in colim F_p^{S_n} at truncation depth: u at level m and
/// v at level n agree iff they pull back to the same function at max(m,n).
bool colimitElementEq(const Tower& t, PrimeField field, std::size_t m, const Vec& u,
                      std::size_t n, const Vec& v);

struct ClopenIdempotent {
  std::size_t level;  // smallest stabilization level
  Vec indicator;      // chi of A_level in F_p^{S_level}
};

/// Requires the family to be generated by its level-n slice for some
/// n <= depth-1: A_{m+1} = tau^{-1}(A_m) for all m >= n. Otherwise the family
/// is not clopen at this truncation depth (it may still be clopen in the
/// limit; only the observable fact is reported).
ClopenIdempotent clopenToIdempotent(const Tower& t, const OpenCylinderFamily& fam,
                                    PrimeField field);

/// Pull the level-n slice of a family back up to level m >= n.
std::vector<std::size_t> pullbackLevelSet(const Tower& t, std::size_t n,
                                          const std::vector<std::size_t>& set, std::size_t m);

/// Restriction of functions F_p^{S_n} -> F_p^{T_n}; surjective, and natural
/// against the transition homs (checked when n < depth).
AlgebraHom closedToQuotientAlgebra(const Tower& t, const ClosedSubtower& sub, std::size_t level,
                                   PrimeField field);

}  // namespace stone

#endif
