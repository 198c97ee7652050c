#ifndef STONE_ALGEBRA_HPP
#define STONE_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stone/matrix.hpp"
#include "stone/poly.hpp"

namespace stone {

/// Size limits for the exhaustive machinery. Construction is capped by
/// dimension; element- and hom-enumeration by the size of the underlying set.
struct Caps {
  std::size_t dimCap = 64;                       // max dim of a constructed algebra
  std::uint64_t elementCap = 4096;               // max |A| = p^dim for element scans
  std::uint64_t homCandidateCap = 100'000'000;   // max |B|^{dim A} for hom enumeration
};

/// Finite-dimensional commutative unital F_p-algebra, presented by structure
/// constants over a distinguished basis b_0..b_{n-1}:
///   b_i * b_j = sum_k c[i][j][k] b_k.
/// Immutable after construction. dim 0 is the zero ring.
class FiniteAlgebra {
public:
  /// Validates commutativity, associativity and the unit law exhaustively on
  /// basis triples unless validate=false (for outputs that are correct by
  /// construction: tensor, product, quotient).
  static FiniteAlgebra fromStructureConstants(PrimeField field, std::size_t dim,
                                              std::vector<Fel> mul, Vec one,
                                              std::vector<std::string> labels = {},
                                              bool validate = true,
                                              const Caps& caps = {});

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& one() const { return one_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool isZeroRing() const { return dim_ == 0; }

  Fel structureConstant(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Fel>& structureConstants() const { return mul_; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basisVector(std::size_t i) const;
  Vec scalarElement(Fel c) const;  // c * 1

  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(Fel c, const Vec& x) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec power(const Vec& a, unsigned long long e) const;  // a^0 = 1

  /// Matrix of left multiplication by a.
  FpMatrix multiplicationMatrix(const Vec& a) const;
  /// Matrix of the F_p-linear Frobenius a -> a^p (columns are b_i^p).
  FpMatrix frobeniusMatrix() const;

  /// Number of elements p^dim, if it fits the cap.
  bool elementCountWithin(std::uint64_t cap, std::uint64_t& count) const;
  /// Elements in index order: index digits little-endian base p.
  Vec elementAt(std::uint64_t index) const;
  std::uint64_t indexOf(const Vec& v) const;

  /// FNV-1a over (p, dim, one, mul); stable across runs, used as an identity
  /// reference in serialized artifacts.
  std::string contentHash() const;

  bool operator==(const FiniteAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && mul_ == o.mul_ && one_ == o.one_;
  }
  bool operator!=(const FiniteAlgebra& o) const { return !(*this == o); }

private:
  FiniteAlgebra(PrimeField field, std::size_t dim, std::vector<Fel> mul, Vec one,
                std::vector<std::string> labels)
      : field_(field), dim_(dim), mul_(std::move(mul)), one_(std::move(one)),
        labels_(std::move(labels)) {}

  PrimeField field_;
  std::size_t dim_;
  std::vector<Fel> mul_;  // dim^3, (i*dim+j)*dim+k
  Vec one_;
  std::vector<std::string> labels_;
};

/// A unital F_p-algebra homomorphism source -> target as a
/// (target.dim x source.dim) matrix. Validated on construction.
class AlgebraHom {
public:
  AlgebraHom(FiniteAlgebra source, FiniteAlgebra target, FpMatrix matrix,
             bool validate = true);

  static AlgebraHom identity(const FiniteAlgebra& a);

  const FiniteAlgebra& source() const { return source_; }
  const FiniteAlgebra& target() const { return target_; }
  const FpMatrix& matrix() const { return matrix_; }

  Vec apply(const Vec& x) const { return matrix_.apply(x); }

  bool isInjective() const;
  bool isSurjective() const;
  bool isBijective() const { return isInjective() && isSurjective(); }

  /// this ∘ g (g applied first). Requires g.target == source.
  AlgebraHom after(const AlgebraHom& g) const;

private:
  FiniteAlgebra source_;
  FiniteAlgebra target_;
  FpMatrix matrix_;
};

// ---- constructions ----

FiniteAlgebra univariateQuotient(PrimeField field, const FpPoly& f,
                                 const Caps& caps = {});

FiniteAlgebra functionAlgebra(PrimeField field, std::size_t setSize,
                              std::vector<std::string> labels = {},
                              const Caps& caps = {});

struct ProductResult {
  FiniteAlgebra algebra;
  AlgebraHom projLeft;   // A x B -> A
  AlgebraHom projRight;  // A x B -> B
};
ProductResult productAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b,
                             const Caps& caps = {});

struct TensorResult {
  FiniteAlgebra algebra;
  AlgebraHom coprojLeft;   // A -> A ⊗ B, a -> a ⊗ 1
  AlgebraHom coprojRight;  // B -> A ⊗ B, b -> 1 ⊗ b
};
TensorResult tensorAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const Caps& caps = {});

struct QuotientResult {
  FiniteAlgebra algebra;
  AlgebraHom projection;  // A -> A/I
};
/// I = smallest subspace containing gens and closed under multiplication by
/// every basis element. 1 in I gives the zero ring.
QuotientResult quotientByIdeal(const FiniteAlgebra& a, const std::vector<Vec>& gens);

struct RelativeTensorResult {
  FiniteAlgebra algebra;          // B ⊗_A C
  AlgebraHom fromAbsoluteTensor;  // B ⊗ C -> B ⊗_A C
  TensorResult absoluteTensor;
};
/// (B ⊗ C)/(f(a)⊗1 - 1⊗g(a) : a basis of A), for f : A -> B, g : A -> C.
RelativeTensorResult relativeTensor(const FiniteAlgebra& b, const FiniteAlgebra& c,
                                    const AlgebraHom& f, const AlgebraHom& g,
                                    const Caps& caps = {});

/// The complete set of unital ring maps A -> B, sorted lexicographically on
/// matrices. DFS over basis images with incremental multiplicativity pruning.
std::vector<AlgebraHom> enumerateHoms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                      const Caps& caps = {});

/// A multiplicatively closed subspace of an ambient algebra presented on the
/// span's canonical basis, with the given element as unit. The unit need not
/// be the ambient 1 (think eA for an idempotent e), so no hom is produced.
struct SpanAlgebra {
  FiniteAlgebra algebra;
  FpMatrix basisColumns;  // ambient.dim x span.dim
};
SpanAlgebra algebraOnSpan(const FiniteAlgebra& ambient, const RowSpan& span, const Vec& unit);

/// Same, for genuine unital subalgebras (unit = ambient 1): also wraps the
/// basis columns as an inclusion hom.
struct SubalgebraResult {
  FiniteAlgebra algebra;
  AlgebraHom inclusion;
};
SubalgebraResult subalgebraOnBasis(const FiniteAlgebra& ambient, const RowSpan& span);

}  // namespace stone

#endif
