#include "stone/matrix.hpp"

#include <algorithm>

namespace stone {

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::fromColumns(PrimeField field, std::size_t dim,
                               const std::vector<Vec>& columns) {
  FpMatrix m(field, dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != dim) fail(Errc::BadInput, "column length mismatch");
    for (std::size_t r = 0; r < dim; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

FpMatrix FpMatrix::fromRows(PrimeField field, std::size_t width,
                            const std::vector<Vec>& rows) {
  FpMatrix m(field, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) fail(Errc::BadInput, "row length mismatch");
    for (std::size_t c = 0; c < width; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Vec FpMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec FpMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec FpMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(Errc::BadInput, "matrix/vector size mismatch");
  Vec out(rows_, 0);
  const unsigned p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned long long acc = 0;
    const Fel* rowp = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<unsigned>(rowp[c]) * v[c];
    out[r] = static_cast<Fel>(acc % p);
  }
  return out;
}

FpMatrix FpMatrix::mul(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::BadInput, "matrix product size mismatch");
  FpMatrix out(field_, rows_, rhs.cols_);
  const unsigned p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const unsigned a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out.set(r, c, static_cast<Fel>((out.at(r, c) + a * rhs.at(k, c)) % p));
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

FpMatrix FpMatrix::add(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::BadInput, "matrix sum size mismatch");
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

FpMatrix FpMatrix::sub(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::BadInput, "matrix diff size mismatch");
  FpMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Echelon FpMatrix::rref() const {
  FpMatrix work = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && work.at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < cols_; ++c) {
        Fel t = work.at(sel, c);
        work.set(sel, c, work.at(row, c));
        work.set(row, c, t);
      }
    }
    const Fel pivInv = field_.inv(work.at(row, col));
    for (std::size_t c = col; c < cols_; ++c)
      work.set(row, c, field_.mul(work.at(row, c), pivInv));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Fel factor = work.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        work.set(r, c, field_.sub(work.at(r, c), field_.mul(factor, work.at(row, c))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Echelon out;
  out.cols = cols_;
  out.pivots = pivots;
  out.rows.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.rows.push_back(work.row(r));
  return out;
}

std::size_t FpMatrix::rank() const { return rref().pivots.size(); }

bool FpMatrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool FpMatrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fel v) { return v == 0; });
}

std::vector<Vec> FpMatrix::kernelBasis() const {
  Echelon e = rref();
  std::vector<bool> isPivot(cols_, false);
  for (std::size_t p : e.pivots) isPivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t freeCol = 0; freeCol < cols_; ++freeCol) {
    if (isPivot[freeCol]) continue;
    Vec v(cols_, 0);
    v[freeCol] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = field_.neg(e.rows[r][freeCol]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> FpMatrix::solve(const Vec& b) const {
  if (b.size() != rows_) fail(Errc::BadInput, "rhs length mismatch");
  // RREF of the augmented matrix
  FpMatrix aug(field_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
    aug.set(r, cols_, b[r]);
  }
  Echelon e = aug.rref();
  Vec x(cols_, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols_) return std::nullopt;  // pivot in augmented column
    x[e.pivots[r]] = e.rows[r][cols_];
  }
  return x;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& rhs) const {
  FpMatrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t r1 = 0; r1 < rows_; ++r1)
    for (std::size_t c1 = 0; c1 < cols_; ++c1) {
      const Fel a = at(r1, c1);
      if (a == 0) continue;
      for (std::size_t r2 = 0; r2 < rhs.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < rhs.cols_; ++c2) {
          out.set(r1 * rhs.rows_ + r2, c1 * rhs.cols_ + c2, field_.mul(a, rhs.at(r2, c2)));
        }
    }
  return out;
}

bool FpMatrix::operator<(const FpMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return data_ < o.data_;
}

RowSpan::RowSpan(PrimeField field, std::size_t width) : field_(field), width_(width) {}

Vec RowSpan::reduceOnly(const Vec& v) const {
  Vec w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Fel c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[i]; j < width_; ++j) {
      w[j] = field_.sub(w[j], field_.mul(c, rows_[i][j]));
    }
  }
  return w;
}

bool RowSpan::insert(const Vec& v) {
  if (v.size() != width_) fail(Errc::BadInput, "row width mismatch");
  Vec w = reduceOnly(v);
  std::size_t piv = 0;
  while (piv < width_ && w[piv] == 0) ++piv;
  if (piv == width_) return false;
  const Fel inv = field_.inv(w[piv]);
  for (std::size_t j = piv; j < width_; ++j) w[j] = field_.mul(w[j], inv);
  // back-substitute the new row into existing rows, keep RREF
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Fel c = rows_[i][piv];
    if (c == 0) continue;
    for (std::size_t j = piv; j < width_; ++j) {
      rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, w[j]));
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
  return true;
}

bool RowSpan::contains(const Vec& v) const {
  if (v.size() != width_) fail(Errc::BadInput, "row width mismatch");
  Vec w = reduceOnly(v);
  return std::all_of(w.begin(), w.end(), [](Fel x) { return x == 0; });
}

std::optional<Vec> RowSpan::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  // rows are RREF: the coefficient on row i is v at that row's pivot column
  Vec coords(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

}  // namespace stone
