#include "stone/sheafmod.hpp"

#include <algorithm>

namespace stone {

void requireFunctionAlgebra(const FiniteAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.one()[i] != 1) fail(Errc::BadInput, "unit is not the all-ones function");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Fel expect = (i == j && j == k) ? 1 : 0;
        if (a.structureConstant(i, j, k) != expect) {
          fail(Errc::BadInput, "structure constants are not diagonal");
        }
      }
  }
}

CSModule::CSModule(FiniteAlgebra algebra, std::size_t moduleDim,
                   std::vector<FpMatrix> projectors)
    : algebra_(std::move(algebra)), dim_(moduleDim), projectors_(std::move(projectors)) {
  requireFunctionAlgebra(algebra_);
  if (projectors_.size() != algebra_.dim()) fail(Errc::BadInput, "one projector per point required");
  const PrimeField& F = algebra_.field();
  FpMatrix sum(F, dim_, dim_);
  for (std::size_t s = 0; s < projectors_.size(); ++s) {
    const FpMatrix& ps = projectors_[s];
    if (ps.rows() != dim_ || ps.cols() != dim_) fail(Errc::BadInput, "projector shape mismatch");
    if (ps.mul(ps) != ps) fail(Errc::BadInput, "rho(chi_s) not idempotent");
    for (std::size_t t = s + 1; t < projectors_.size(); ++t) {
      if (!ps.mul(projectors_[t]).isZero()) {
        fail(Errc::BadInput, "projectors not pairwise orthogonal");
      }
    }
    sum = sum.add(ps);
  }
  if (!(dim_ == 0 ? sum.isZero() : sum.isIdentity())) {
    fail(Errc::BadInput, "projectors do not sum to the identity");
  }
}

FpMatrix CSModule::actionOf(const Vec& algebraElement) const {
  if (algebraElement.size() != algebra_.dim()) fail(Errc::BadInput, "element length mismatch");
  FpMatrix out(algebra_.field(), dim_, dim_);
  for (std::size_t s = 0; s < projectors_.size(); ++s) {
    const Fel c = algebraElement[s];
    if (c == 0) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t k = 0; k < dim_; ++k)
        out.set(r, k, algebra_.field().add(out.at(r, k),
                                           algebra_.field().mul(c, projectors_[s].at(r, k))));
  }
  return out;
}

std::vector<std::size_t> SheafOnFiniteSet::stalkDims() const {
  std::vector<std::size_t> dims;
  dims.reserve(stalkBases.size());
  for (const FpMatrix& b : stalkBases) dims.push_back(b.cols());
  return dims;
}

void validateSheaf(const SheafOnFiniteSet& f) {
  validateFiniteSet(f.base);
  if (f.stalkBases.size() != f.base.size()) fail(Errc::BadInput, "one stalk per point required");
  std::size_t sum = 0;
  for (const FpMatrix& b : f.stalkBases) {
    if (b.rows() != f.totalDim) fail(Errc::BadInput, "stalk basis height mismatch");
    if (b.rank() != b.cols()) fail(Errc::BadInput, "stalk basis columns dependent");
    sum += b.cols();
  }
  if (sum != f.totalDim) fail(Errc::BadInput, "stalk dims do not sum to the total dimension");
  if (f.totalDim > 0) {
    // joint independence
    std::vector<Vec> cols;
    for (const FpMatrix& b : f.stalkBases)
      for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.col(c));
    const PrimeField F = f.stalkBases.empty() ? PrimeField(2) : f.stalkBases[0].field();
    if (FpMatrix::fromColumns(F, f.totalDim, cols).rank() != f.totalDim) {
      fail(Errc::BadInput, "stalk subspaces not independent");
    }
  }
}

SheafOnFiniteSet moduleToSheaf(const CSModule& m) {
  const PrimeField& F = m.algebra().field();
  SheafOnFiniteSet out;
  out.base.elements = m.algebra().labels();
  out.totalDim = m.moduleDim();
  for (std::size_t s = 0; s < m.algebra().dim(); ++s) {
    RowSpan image(F, m.moduleDim());
    for (std::size_t c = 0; c < m.moduleDim(); ++c) image.insert(m.projector(s).col(c));
    out.stalkBases.push_back(FpMatrix::fromColumns(F, m.moduleDim(), image.basis()));
  }
  validateSheaf(out);
  return out;
}

SheafToModuleResult sheafToModule(const SheafOnFiniteSet& f, PrimeField field) {
  validateSheaf(f);
  const std::size_t total = f.totalDim;
  FiniteAlgebra alg = functionAlgebra(field, f.base.size(), f.base.elements);

  std::vector<FpMatrix> projectors;
  std::size_t offset = 0;
  for (std::size_t s = 0; s < f.stalkBases.size(); ++s) {
    FpMatrix proj(field, total, total);
    for (std::size_t k = 0; k < f.stalkDim(s); ++k) proj.set(offset + k, offset + k, 1);
    projectors.push_back(std::move(proj));
    offset += f.stalkDim(s);
  }
  FpMatrix ident(field, total, total);
  {
    std::size_t col = 0;
    for (const FpMatrix& b : f.stalkBases)
      for (std::size_t c = 0; c < b.cols(); ++c, ++col)
        for (std::size_t r = 0; r < total; ++r) ident.set(r, col, b.at(r, c));
  }
  return SheafToModuleResult{CSModule(std::move(alg), total, std::move(projectors)),
                             std::move(ident)};
}

CSModule restrictToClopen(const CSModule& m, const std::vector<std::size_t>& u) {
  const PrimeField& F = m.algebra().field();
  if (!std::is_sorted(u.begin(), u.end()) ||
      std::adjacent_find(u.begin(), u.end()) != u.end()) {
    fail(Errc::BadInput, "clopen must be a sorted duplicate-free index list");
  }
  for (std::size_t s : u) {
    if (s >= m.algebra().dim()) fail(Errc::BadInput, "clopen index out of range");
  }

  // underlying space: image of chi_U acting on M
  RowSpan image(F, m.moduleDim());
  for (std::size_t s : u)
    for (std::size_t c = 0; c < m.moduleDim(); ++c) image.insert(m.projector(s).col(c));
  FpMatrix basis = FpMatrix::fromColumns(F, m.moduleDim(), image.basis());
  const std::size_t d = basis.cols();

  std::vector<std::string> labels;
  labels.reserve(u.size());
  for (std::size_t s : u) labels.push_back(m.algebra().labels()[s]);
  FiniteAlgebra alg = functionAlgebra(F, u.size(), labels);

  std::vector<FpMatrix> projectors;
  for (std::size_t s : u) {
    FpMatrix proj(F, d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vec img = m.projector(s).apply(basis.col(c));
      auto coords = image.coordinates(img);
      if (!coords) fail(Errc::InternalClosureFailure, "projector leaves the restricted space");
      for (std::size_t r = 0; r < d; ++r) proj.set(r, c, (*coords)[r]);
    }
    projectors.push_back(std::move(proj));
  }
  return CSModule(std::move(alg), d, std::move(projectors));
}

CSModule tensorModules(const CSModule& m, const CSModule& n) {
  if (m.algebra() != n.algebra()) fail(Errc::AlgebraMismatch, "modules over different algebras");
  const PrimeField& F = m.algebra().field();

  SheafOnFiniteSet fm = moduleToSheaf(m);
  SheafOnFiniteSet fn = moduleToSheaf(n);
  std::size_t total = 0;
  std::vector<std::size_t> blockDims;
  for (std::size_t s = 0; s < m.algebra().dim(); ++s) {
    blockDims.push_back(fm.stalkDim(s) * fn.stalkDim(s));
    total += blockDims.back();
  }
  std::vector<FpMatrix> projectors;
  std::size_t offset = 0;
  for (std::size_t s = 0; s < m.algebra().dim(); ++s) {
    FpMatrix proj(F, total, total);
    for (std::size_t k = 0; k < blockDims[s]; ++k) proj.set(offset + k, offset + k, 1);
    projectors.push_back(std::move(proj));
    offset += blockDims[s];
  }
  return CSModule(m.algebra(), total, std::move(projectors));
}

MonoidalVerdict checkMonoidalEquivalence(const CSModule& m, const CSModule& n,
                                         const std::vector<std::vector<std::size_t>>& clopens) {
  MonoidalVerdict v;
  if (m.algebra() != n.algebra()) fail(Errc::AlgebraMismatch, "modules over different algebras");

  CSModule t = tensorModules(m, n);
  std::vector<std::size_t> dm = moduleToSheaf(m).stalkDims();
  std::vector<std::size_t> dn = moduleToSheaf(n).stalkDims();
  std::vector<std::size_t> dt = moduleToSheaf(t).stalkDims();
  for (std::size_t s = 0; s < dm.size(); ++s) {
    if (dt[s] != dm[s] * dn[s]) {
      v.detail = "tensor stalk dimension is not the pointwise product";
      return v;
    }
  }

  for (const std::vector<std::size_t>& u : clopens) {
    CSModule restrictedTensor = restrictToClopen(t, u);
    CSModule tensorRestricted = tensorModules(restrictToClopen(m, u), restrictToClopen(n, u));
    if (moduleToSheaf(restrictedTensor).stalkDims() !=
        moduleToSheaf(tensorRestricted).stalkDims()) {
      v.detail = "restriction does not commute with tensor on a clopen";
      return v;
    }
  }
  v.holds = true;
  return v;
}

}  // namespace stone
