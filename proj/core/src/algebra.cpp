#include "stone/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace stone {

namespace {

// p^dim <= cap without overflow; on success count = p^dim
bool powWithin(unsigned p, std::size_t dim, std::uint64_t cap, std::uint64_t& count) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (acc > cap / p) return false;
    acc *= p;
  }
  count = acc;
  return acc <= cap;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::fromStructureConstants(PrimeField field, std::size_t dim,
                                                    std::vector<Fel> mul, Vec one,
                                                    std::vector<std::string> labels,
                                                    bool validate, const Caps& caps) {
  if (dim > caps.dimCap) {
    fail(Errc::DimCapExceeded,
         "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(caps.dimCap));
  }
  if (mul.size() != dim * dim * dim) fail(Errc::BadInput, "structure tensor size mismatch");
  if (one.size() != dim) fail(Errc::BadInput, "unit vector size mismatch");
  for (Fel& v : mul) {
    if (v >= field.p()) fail(Errc::BadInput, "structure constant out of range");
  }
  for (Fel v : one) {
    if (v >= field.p()) fail(Errc::BadInput, "unit coordinate out of range");
  }
  if (!labels.empty() && labels.size() != dim) fail(Errc::BadInput, "label count mismatch");

  FiniteAlgebra a(field, dim, std::move(mul), std::move(one), std::move(labels));
  if (validate) {
    // commutativity
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (a.structureConstant(i, j, k) != a.structureConstant(j, i, k)) {
            fail(Errc::NotCommutative,
                 "b" + std::to_string(i) + "*b" + std::to_string(j) + " != b" +
                     std::to_string(j) + "*b" + std::to_string(i));
          }
    // unit law: 1 * b_i = b_i
    for (std::size_t i = 0; i < dim; ++i) {
      if (a.multiply(a.one(), a.basisVector(i)) != a.basisVector(i)) {
        fail(Errc::BadUnit, "one*b" + std::to_string(i) + " != b" + std::to_string(i));
      }
    }
    // associativity via multiplication operators: L_{b_i b_j} = L_{b_i} L_{b_j}
    std::vector<FpMatrix> leftMul;
    leftMul.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) leftMul.push_back(a.multiplicationMatrix(a.basisVector(i)));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        FpMatrix lhs(field, dim, dim);
        for (std::size_t k = 0; k < dim; ++k) {
          const Fel c = a.structureConstant(i, j, k);
          if (c == 0) continue;
          for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t s = 0; s < dim; ++s)
              lhs.set(r, s, field.add(lhs.at(r, s), field.mul(c, leftMul[k].at(r, s))));
        }
        if (lhs != leftMul[i].mul(leftMul[j])) {
          // find a witness basis element for the report
          std::size_t w = 0;
          for (std::size_t k = 0; k < dim; ++k) {
            Vec lhsV = a.multiply(a.multiply(a.basisVector(i), a.basisVector(j)), a.basisVector(k));
            Vec rhsV = a.multiply(a.basisVector(i), a.multiply(a.basisVector(j), a.basisVector(k)));
            if (lhsV != rhsV) { w = k; break; }
          }
          fail(Errc::NotAssociative,
               "witness triple (b" + std::to_string(i) + ",b" + std::to_string(j) + ",b" +
                   std::to_string(w) + ")");
        }
      }
  }
  return a;
}

Vec FiniteAlgebra::basisVector(std::size_t i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Vec FiniteAlgebra::scalarElement(Fel c) const { return scale(c, one_); }

Vec FiniteAlgebra::add(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_.add(x[i], y[i]);
  return out;
}

Vec FiniteAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_.sub(x[i], y[i]);
  return out;
}

Vec FiniteAlgebra::scale(Fel c, const Vec& x) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_.mul(c, x[i]);
  return out;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  const unsigned p = field_.p();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const unsigned xy = static_cast<unsigned>(x[i]) * y[j] % p;
      if (xy == 0) continue;
      const Fel* cij = mul_.data() + (i * dim_ + j) * dim_;
      for (std::size_t k = 0; k < dim_; ++k) {
        out[k] = static_cast<Fel>((out[k] + xy * cij[k]) % p);
      }
    }
  }
  return out;
}

Vec FiniteAlgebra::power(const Vec& a, unsigned long long e) const {
  Vec result = one_;
  Vec base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

FpMatrix FiniteAlgebra::multiplicationMatrix(const Vec& a) const {
  FpMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = multiply(a, basisVector(j));
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

FpMatrix FiniteAlgebra::frobeniusMatrix() const {
  FpMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = power(basisVector(j), field_.p());
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

bool FiniteAlgebra::elementCountWithin(std::uint64_t cap, std::uint64_t& count) const {
  return powWithin(field_.p(), dim_, cap, count);
}

Vec FiniteAlgebra::elementAt(std::uint64_t index) const {
  Vec v(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = static_cast<Fel>(index % field_.p());
    index /= field_.p();
  }
  return v;
}

std::uint64_t FiniteAlgebra::indexOf(const Vec& v) const {
  std::uint64_t idx = 0;
  for (std::size_t i = dim_; i-- > 0;) idx = idx * field_.p() + v[i];
  return idx;
}

std::string FiniteAlgebra::contentHash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto eat = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  eat(field_.p());
  eat(dim_);
  for (Fel v : one_) eat(v);
  for (Fel v : mul_) eat(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

AlgebraHom::AlgebraHom(FiniteAlgebra source, FiniteAlgebra target, FpMatrix matrix,
                       bool validate)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.field() != target_.field()) fail(Errc::FieldMismatch, "hom across fields");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    fail(Errc::BadInput, "hom matrix shape mismatch");
  }
  if (validate) {
    if (matrix_.apply(source_.one()) != target_.one()) {
      fail(Errc::BadUnit, "hom does not preserve the unit");
    }
    for (std::size_t i = 0; i < source_.dim(); ++i) {
      const Vec imI = matrix_.col(i);
      for (std::size_t j = i; j < source_.dim(); ++j) {
        Vec lhs = matrix_.apply(source_.multiply(source_.basisVector(i), source_.basisVector(j)));
        Vec rhs = target_.multiply(imI, matrix_.col(j));
        if (lhs != rhs) {
          fail(Errc::BadInput, "hom not multiplicative on (b" + std::to_string(i) + ",b" +
                                   std::to_string(j) + ")");
        }
      }
    }
  }
}

AlgebraHom AlgebraHom::identity(const FiniteAlgebra& a) {
  return AlgebraHom(a, a, FpMatrix::identity(a.field(), a.dim()), false);
}

bool AlgebraHom::isInjective() const { return matrix_.rank() == source_.dim(); }

bool AlgebraHom::isSurjective() const { return matrix_.rank() == target_.dim(); }

AlgebraHom AlgebraHom::after(const AlgebraHom& g) const {
  if (g.target() != source_) fail(Errc::SourceMismatch, "composition mismatch");
  return AlgebraHom(g.source(), target_, matrix_.mul(g.matrix()), false);
}

FiniteAlgebra univariateQuotient(PrimeField field, const FpPoly& f, const Caps& caps) {
  if (!f.isMonic()) fail(Errc::NotMonic, "modulus must be monic, got " + f.toString());
  if (f.degree() < 1) fail(Errc::ZeroDegree, "modulus must have degree >= 1");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n > caps.dimCap) fail(Errc::DimCapExceeded, "degree exceeds dimension cap");

  // powers x^k mod f for k <= 2n-2
  std::vector<Vec> pw(2 * n - 1, Vec(n, 0));
  FpPoly acc = FpPoly::constant(field, 1);
  for (std::size_t k = 0; k < 2 * n - 1; ++k) {
    FpPoly r = acc.mod(f);
    for (std::size_t i = 0; i < n; ++i) pw[k][i] = r.coeff(i);
    acc = acc.mul(FpPoly::x(field));
  }

  std::vector<Fel> mul(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = pw[i + j][k];

  Vec one(n, 0);
  one[0] = 1;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return FiniteAlgebra::fromStructureConstants(field, n, std::move(mul), std::move(one),
                                               std::move(labels), false, caps);
}

FiniteAlgebra functionAlgebra(PrimeField field, std::size_t setSize,
                              std::vector<std::string> labels, const Caps& caps) {
  if (setSize > caps.dimCap) fail(Errc::DimCapExceeded, "set size exceeds dimension cap");
  const std::size_t n = setSize;
  std::vector<Fel> mul(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) mul[(i * n + i) * n + i] = 1;
  Vec one(n, 1);
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i);
  }
  return FiniteAlgebra::fromStructureConstants(field, n, std::move(mul), std::move(one),
                                               std::move(labels), false, caps);
}

ProductResult productAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b,
                             const Caps& caps) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "product across fields");
  const std::size_t n = a.dim(), m = b.dim(), nm = n + m;
  if (nm > caps.dimCap) fail(Errc::DimCapExceeded, "product dimension exceeds cap");
  std::vector<Fel> mul(nm * nm * nm, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        mul[(i * nm + j) * nm + k] = a.structureConstant(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        mul[((n + i) * nm + (n + j)) * nm + (n + k)] = b.structureConstant(i, j, k);
  Vec one(nm, 0);
  for (std::size_t i = 0; i < n; ++i) one[i] = a.one()[i];
  for (std::size_t i = 0; i < m; ++i) one[n + i] = b.one()[i];

  FiniteAlgebra prod = FiniteAlgebra::fromStructureConstants(a.field(), nm, std::move(mul),
                                                             std::move(one), {}, false, caps);
  FpMatrix pl(a.field(), n, nm), pr(a.field(), m, nm);
  for (std::size_t i = 0; i < n; ++i) pl.set(i, i, 1);
  for (std::size_t i = 0; i < m; ++i) pr.set(i, n + i, 1);
  return ProductResult{prod, AlgebraHom(prod, a, std::move(pl), false),
                       AlgebraHom(prod, b, std::move(pr), false)};
}

TensorResult tensorAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b, const Caps& caps) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "tensor across fields");
  const std::size_t n = a.dim(), m = b.dim(), nm = n * m;
  std::uint64_t count = 0;
  if (nm > caps.dimCap || !powWithin(a.field().p(), nm, caps.elementCap, count)) {
    fail(Errc::DimCapExceeded, "tensor of dims " + std::to_string(n) + "x" + std::to_string(m) +
                                   " exceeds the element cap");
  }
  const PrimeField& F = a.field();
  std::vector<Fel> mul(nm * nm * nm, 0);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          const std::size_t u = i1 * m + j1, v = i2 * m + j2;
          for (std::size_t i3 = 0; i3 < n; ++i3) {
            const Fel ca = a.structureConstant(i1, i2, i3);
            if (ca == 0) continue;
            for (std::size_t j3 = 0; j3 < m; ++j3) {
              const Fel cb = b.structureConstant(j1, j2, j3);
              if (cb == 0) continue;
              mul[(u * nm + v) * nm + (i3 * m + j3)] = F.mul(ca, cb);
            }
          }
        }
  Vec one(nm, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) one[i * m + j] = F.mul(a.one()[i], b.one()[j]);

  FiniteAlgebra tens = FiniteAlgebra::fromStructureConstants(F, nm, std::move(mul),
                                                             std::move(one), {}, false, caps);
  // a -> a ⊗ 1 and b -> 1 ⊗ b
  FpMatrix cl(F, nm, n), cr(F, nm, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cl.set(i * m + j, i, b.one()[j]);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) cr.set(i * m + j, j, a.one()[i]);
  return TensorResult{tens, AlgebraHom(a, tens, std::move(cl), false),
                      AlgebraHom(b, tens, std::move(cr), false)};
}

QuotientResult quotientByIdeal(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  const std::size_t n = a.dim();
  RowSpan ideal(a.field(), n);
  std::vector<Vec> frontier;
  for (const Vec& g : gens) {
    if (g.size() != n) fail(Errc::BadInput, "generator length mismatch");
    if (ideal.insert(g)) frontier.push_back(g);
  }
  // close under multiplication by basis elements
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec w = a.multiply(a.basisVector(i), v);
        if (ideal.insert(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }

  const std::vector<std::size_t>& piv = ideal.pivots();
  std::vector<bool> isPivot(n, false);
  for (std::size_t p : piv) isPivot[p] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t c = 0; c < n; ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  const std::size_t q = freeCols.size();

  // projection: reduce mod the RREF ideal basis, read off free coordinates
  const PrimeField& F = a.field();
  auto project = [&](const Vec& v) {
    Vec w = v;
    const std::vector<Vec>& rows = ideal.basis();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Fel c = w[piv[i]];
      if (c == 0) continue;
      for (std::size_t j = piv[i]; j < n; ++j) w[j] = F.sub(w[j], F.mul(c, rows[i][j]));
    }
    Vec out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = w[freeCols[i]];
    return out;
  };

  std::vector<Fel> mul(q * q * q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = project(a.multiply(a.basisVector(freeCols[i]), a.basisVector(freeCols[j])));
      for (std::size_t k = 0; k < q; ++k) mul[(i * q + j) * q + k] = prod[k];
    }
  Vec one = project(a.one());
  FiniteAlgebra quot =
      FiniteAlgebra::fromStructureConstants(F, q, std::move(mul), std::move(one), {}, false);

  FpMatrix pm(F, q, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec col = project(a.basisVector(c));
    for (std::size_t r = 0; r < q; ++r) pm.set(r, c, col[r]);
  }
  return QuotientResult{quot, AlgebraHom(a, quot, std::move(pm), false)};
}

RelativeTensorResult relativeTensor(const FiniteAlgebra& b, const FiniteAlgebra& c,
                                    const AlgebraHom& f, const AlgebraHom& g,
                                    const Caps& caps) {
  if (f.source() != g.source()) fail(Errc::SourceMismatch, "relative tensor needs a shared source");
  if (f.target() != b || g.target() != c) {
    fail(Errc::BadInput, "hom targets must be the tensor factors");
  }
  if (b.field() != c.field() || b.field() != f.source().field()) {
    fail(Errc::FieldMismatch, "relative tensor across fields");
  }
  TensorResult t = tensorAlgebra(b, c, caps);
  const FiniteAlgebra& A = f.source();
  std::vector<Vec> gens;
  gens.reserve(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec lhs = t.coprojLeft.apply(f.apply(A.basisVector(i)));
    Vec rhs = t.coprojRight.apply(g.apply(A.basisVector(i)));
    gens.push_back(t.algebra.sub(lhs, rhs));
  }
  QuotientResult qr = quotientByIdeal(t.algebra, gens);
  return RelativeTensorResult{qr.algebra, qr.projection, std::move(t)};
}

std::vector<AlgebraHom> enumerateHoms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                      const Caps& caps) {
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "homs across fields");
  const std::size_t n = a.dim(), m = b.dim();
  const PrimeField& F = a.field();

  // candidate count |B|^{dim A} = p^{m n}
  {
    const double bits = static_cast<double>(m) * static_cast<double>(n) *
                        std::log2(static_cast<double>(F.p()));
    if (bits > std::log2(static_cast<double>(caps.homCandidateCap))) {
      fail(Errc::EnumerationCapExceeded,
           "|B|^{dim A} exceeds the hom enumeration cap of " +
               std::to_string(caps.homCandidateCap));
    }
  }

  std::vector<AlgebraHom> out;

  // depth at which each multiplicative constraint (i,j) becomes checkable:
  // all of i, j, and the support of b_i b_j must be assigned
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checksAt(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t need = std::max(i, j) + 1;
      for (std::size_t k = 0; k < n; ++k)
        if (a.structureConstant(i, j, k) != 0) need = std::max(need, k + 1);
      checksAt[need].push_back({i, j});
    }
  std::size_t unitDepth = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a.one()[i] != 0) unitDepth = i + 1;

  std::uint64_t targetCount = 0;
  if (!powWithin(F.p(), m, std::numeric_limits<std::uint64_t>::max() / 2, targetCount)) {
    fail(Errc::EnumerationCapExceeded, "target too large to enumerate");
  }

  std::vector<Vec> cols(n, Vec(m, 0));
  auto partialUnitHolds = [&](std::size_t depth) {
    if (depth < unitDepth) return true;
    Vec img(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.one()[i] == 0) continue;
      for (std::size_t r = 0; r < m; ++r)
        img[r] = F.add(img[r], F.mul(a.one()[i], cols[i][r]));
    }
    return img == b.one();
  };
  auto constraintsHold = [&](std::size_t depth) {
    for (auto [i, j] : checksAt[depth]) {
      Vec lhs(m, 0);
      for (std::size_t k = 0; k < n; ++k) {
        const Fel cc = a.structureConstant(i, j, k);
        if (cc == 0) continue;
        for (std::size_t r = 0; r < m; ++r) lhs[r] = F.add(lhs[r], F.mul(cc, cols[k][r]));
      }
      if (lhs != b.multiply(cols[i], cols[j])) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      FpMatrix mtx = FpMatrix::fromColumns(F, m, cols);
      out.emplace_back(a, b, std::move(mtx), true);
      return;
    }
    for (std::uint64_t idx = 0; idx < targetCount; ++idx) {
      cols[depth] = b.elementAt(idx);
      if (!constraintsHold(depth + 1)) continue;
      if (depth + 1 == unitDepth && !partialUnitHolds(depth + 1)) continue;
      self(self, depth + 1);
    }
  };

  if (n == 0) {
    // the empty matrix is a hom iff the unit law holds, i.e. iff B = 0
    if (m == 0) out.emplace_back(a, b, FpMatrix(F, 0, 0), false);
    return out;
  }
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(),
            [](const AlgebraHom& x, const AlgebraHom& y) { return x.matrix() < y.matrix(); });
  return out;
}

SpanAlgebra algebraOnSpan(const FiniteAlgebra& ambient, const RowSpan& span, const Vec& unit) {
  const std::size_t q = span.dim();
  const PrimeField& F = ambient.field();
  std::vector<Fel> mul(q * q * q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = ambient.multiply(span.basis()[i], span.basis()[j]);
      auto coords = span.coordinates(prod);
      if (!coords) {
        fail(Errc::InternalClosureFailure, "basis product escapes the subspace");
      }
      for (std::size_t k = 0; k < q; ++k) mul[(i * q + j) * q + k] = (*coords)[k];
    }
  auto oneCoords = span.coordinates(unit);
  if (!oneCoords) fail(Errc::InternalClosureFailure, "unit lies outside the subspace");
  FiniteAlgebra sub = FiniteAlgebra::fromStructureConstants(F, q, std::move(mul),
                                                            std::move(*oneCoords), {}, false);
  return SpanAlgebra{sub, FpMatrix::fromColumns(F, ambient.dim(), span.basis())};
}

SubalgebraResult subalgebraOnBasis(const FiniteAlgebra& ambient, const RowSpan& span) {
  SpanAlgebra sa = algebraOnSpan(ambient, span, ambient.one());
  return SubalgebraResult{sa.algebra,
                          AlgebraHom(sa.algebra, ambient, std::move(sa.basisColumns), false)};
}

}  // namespace stone
