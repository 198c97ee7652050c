#ifndef STONE_MATRIX_HPP
#define STONE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stone/fp.hpp"

namespace stone {

class FpMatrix;

struct Echelon {
  // set by FpMatrix::rref(): reduced row-echelon form with zero rows dropped,
  // and the pivot column per surviving row
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

/// Dense matrix over F_p, row-major. Everything downstream (pearls, quotients,
/// hom enumeration) reduces to RREF over this type, so it is kept deterministic:
/// pivots are always the first nonzero column, scans top to bottom.
class FpMatrix {
public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static FpMatrix identity(PrimeField field, std::size_t n);
  // columns[i] becomes the i-th column; every column must have length dim.
  static FpMatrix fromColumns(PrimeField field, std::size_t dim,
                              const std::vector<Vec>& columns);
  static FpMatrix fromRows(PrimeField field, std::size_t width,
                           const std::vector<Vec>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fel v) { data_[r * cols_ + c] = v; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Vec apply(const Vec& v) const;  // M v, v of length cols()
  FpMatrix mul(const FpMatrix& rhs) const;
  FpMatrix transposed() const;
  FpMatrix add(const FpMatrix& rhs) const;
  FpMatrix sub(const FpMatrix& rhs) const;

  Echelon rref() const;

  std::size_t rank() const;
  bool isIdentity() const;
  bool isZero() const;

  /// Canonical basis of {x : Mx = 0}: one vector per free column of the RREF,
  /// in ascending free-column order.
  std::vector<Vec> kernelBasis() const;

  /// One solution of Mx = b, or nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  /// Kronecker product (this ⊗ rhs), index blocks ordered row-major.
  FpMatrix kronecker(const FpMatrix& rhs) const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }
  // lexicographic on (rows, cols, row-major entries); used for canonical sorting
  bool operator<(const FpMatrix& o) const;

  const Vec& flat() const { return data_; }

private:
  PrimeField field_;
  std::size_t rows_, cols_;
  Vec data_;
};

/// A subspace of F_p^n maintained as a reduced row-echelon basis.
/// Insertion order does not matter: the stored basis is canonical.
class RowSpan {
public:
  RowSpan(PrimeField field, std::size_t width);

  /// Reduce v against the basis and absorb the remainder. Returns true if the
  /// dimension grew.
  bool insert(const Vec& v);

  bool contains(const Vec& v) const;

  /// Coefficients of v on the basis rows, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }

private:
  Vec reduceOnly(const Vec& v) const;

  PrimeField field_;
  std::size_t width_;
  std::vector<Vec> rows_;            // RREF rows, pivot columns strictly increasing
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

}  // namespace stone

#endif
