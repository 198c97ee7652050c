#include "stone/spectrum.hpp"

#include <algorithm>

namespace stone {

std::vector<Vec> enumerateIdempotents(const FiniteAlgebra& a, const Caps& caps) {
  std::uint64_t count = 0;
  if (!a.elementCountWithin(caps.elementCap, count)) {
    fail(Errc::EnumerationCapExceeded,
         "|A| exceeds the element cap of " + std::to_string(caps.elementCap));
  }
  std::vector<Vec> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec e = a.elementAt(idx);
    if (a.multiply(e, e) == e) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Vec> splitByElement(const PBooleanAlgebra& b, const Vec& a) {
  const FiniteAlgebra& B = b.algebra();
  const PrimeField& F = B.field();
  if (a.size() != B.dim()) fail(Errc::BadInput, "element length mismatch");
  const unsigned p = F.p();

  std::vector<Vec> es(p, B.zero());
  Vec sum = B.zero();
  for (unsigned i = 1; i < p; ++i) {
    Vec shifted = B.sub(a, B.scalarElement(static_cast<Fel>(i)));
    es[i] = B.sub(B.one(), B.power(shifted, p - 1));
    sum = B.add(sum, es[i]);
  }
  es[0] = B.sub(B.one(), sum);

  // complete orthogonal system carrying a = sum i*e_i
  Vec total = B.zero();
  Vec recon = B.zero();
  for (unsigned i = 0; i < p; ++i) {
    if (B.multiply(es[i], es[i]) != es[i]) {
      fail(Errc::SystemValidationFailure, "e_" + std::to_string(i) + " is not idempotent");
    }
    for (unsigned j = i + 1; j < p; ++j) {
      if (B.multiply(es[i], es[j]) != B.zero()) {
        fail(Errc::SystemValidationFailure,
             "e_" + std::to_string(i) + " e_" + std::to_string(j) + " != 0");
      }
    }
    total = B.add(total, es[i]);
    recon = B.add(recon, B.scale(static_cast<Fel>(i), es[i]));
  }
  if (total != B.one()) fail(Errc::SystemValidationFailure, "system does not sum to 1");
  if (recon != a) fail(Errc::SystemValidationFailure, "sum i*e_i does not recover a");
  return es;
}

namespace {

// is w a scalar multiple of e (e != 0)?
bool isScalarMultiple(const FiniteAlgebra& alg, const Vec& w, const Vec& e) {
  const PrimeField& F = alg.field();
  std::size_t lead = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) { lead = i; break; }
  }
  if (lead == e.size()) return std::all_of(w.begin(), w.end(), [](Fel v) { return v == 0; });
  const Fel c = F.mul(w[lead], F.inv(e[lead]));
  return w == alg.scale(c, e);
}

}  // namespace

std::vector<Vec> primitiveIdempotents(const PBooleanAlgebra& b) {
  const FiniteAlgebra& B = b.algebra();
  if (B.isZeroRing()) return {};
  std::vector<Vec> blocks{B.one()};
  bool refined = true;
  while (refined) {
    refined = false;
    std::vector<Vec> next;
    for (const Vec& e : blocks) {
      std::size_t pivot = B.dim();
      for (std::size_t i = 0; i < B.dim(); ++i) {
        if (!isScalarMultiple(B, B.multiply(e, B.basisVector(i)), e)) {
          pivot = i;
          break;
        }
      }
      if (pivot == B.dim()) {
        next.push_back(e);
        continue;
      }
      refined = true;
      for (const Vec& ei : splitByElement(b, B.basisVector(pivot))) {
        Vec part = B.multiply(e, ei);
        if (part != B.zero()) next.push_back(std::move(part));
      }
    }
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end(), [&B](const Vec& x, const Vec& y) {
    return B.indexOf(x) < B.indexOf(y);
  });
  return blocks;
}

bool IdempotentLattice::isIdempotent(const Vec& e) const {
  return algebra_.multiply(e, e) == e;
}

void IdempotentLattice::require(const Vec& e) const {
  if (!isIdempotent(e)) {
    fail(Errc::NotIdempotent, "element index " + std::to_string(algebra_.indexOf(e)));
  }
}

Vec IdempotentLattice::meet(const Vec& e, const Vec& f) const {
  require(e);
  require(f);
  return algebra_.multiply(e, f);
}

Vec IdempotentLattice::join(const Vec& e, const Vec& f) const {
  require(e);
  require(f);
  return algebra_.sub(algebra_.add(e, f), algebra_.multiply(e, f));
}

Vec IdempotentLattice::complement(const Vec& e) const {
  require(e);
  return algebra_.sub(algebra_.one(), e);
}

bool IdempotentLattice::leq(const Vec& e, const Vec& f) const {
  require(e);
  require(f);
  return algebra_.multiply(e, f) == e;
}

PiZeroResult piZero(const FiniteAlgebra& a) {
  PearlResult pr = pearl(a);
  PBooleanAlgebra pb(pr.pearlAlgebra);
  std::vector<Vec> primInPearl = primitiveIdempotents(pb);

  std::vector<Vec> components;
  components.reserve(primInPearl.size());
  for (const Vec& e : primInPearl) components.push_back(pr.inclusion.apply(e));
  std::sort(components.begin(), components.end(),
            [&a](const Vec& x, const Vec& y) { return a.indexOf(x) < a.indexOf(y); });

  std::vector<FiniteAlgebra> factors;
  std::vector<FpMatrix> factorBases;
  for (const Vec& e : components) {
    FpMatrix mult = a.multiplicationMatrix(e);
    RowSpan span(a.field(), a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) span.insert(mult.col(c));
    SpanAlgebra sa = algebraOnSpan(a, span, e);
    factors.push_back(sa.algebra);
    factorBases.push_back(sa.basisColumns);
  }

  // fold the product and stack the per-factor coordinate maps
  FiniteAlgebra prod = functionAlgebra(a.field(), 0);
  if (!factors.empty()) {
    prod = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
      prod = productAlgebra(prod, factors[i]).algebra;
    }
  }
  FpMatrix recon(a.field(), prod.dim(), a.dim());
  {
    std::size_t rowBase = 0;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      RowSpan span(a.field(), a.dim());
      for (std::size_t c = 0; c < factorBases[fi].cols(); ++c) span.insert(factorBases[fi].col(c));
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec ex = a.multiply(components[fi], a.basisVector(j));
        auto coords = span.coordinates(ex);
        if (!coords) fail(Errc::InternalClosureFailure, "e*x left the factor subspace");
        for (std::size_t r = 0; r < coords->size(); ++r) recon.set(rowBase + r, j, (*coords)[r]);
      }
      rowBase += factors[fi].dim();
    }
  }
  AlgebraHom reconstruction(a, prod, std::move(recon), true);
  if (!reconstruction.isBijective()) {
    fail(Errc::InternalClosureFailure, "reconstruction map is not bijective");
  }
  return PiZeroResult{a,       pr,          std::move(components), std::move(factors),
                      std::move(factorBases), std::move(prod),       std::move(reconstruction)};
}

int factorCountViaPearl(PrimeField field, const FpPoly& f, const Caps& caps) {
  if (!f.isMonic()) fail(Errc::NotMonic, "expected a monic polynomial");
  FiniteAlgebra a = univariateQuotient(field, f, caps);
  return static_cast<int>(pearl(a).pearlAlgebra.dim());
}

namespace {

void factorRec(PrimeField field, const FpPoly& f, std::vector<FpPoly>& out, const Caps& caps) {
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  FiniteAlgebra a = univariateQuotient(field, f, caps);
  PearlResult pr = pearl(a);
  if (pr.pearlAlgebra.dim() <= 1) {
    out.push_back(f);  // connected, i.e. irreducible for squarefree f
    return;
  }
  // first pearl basis vector with support beyond the constant coordinate
  Vec pivot;
  for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
    Vec v = pr.inclusion.apply(pr.pearlAlgebra.basisVector(i));
    for (std::size_t k = 1; k < v.size(); ++k) {
      if (v[k] != 0) { pivot = v; break; }
    }
    if (!pivot.empty()) break;
  }
  if (pivot.empty()) fail(Errc::InternalClosureFailure, "pearl of dim >= 2 with only scalars");

  FpPoly aPoly(field, pivot);
  for (unsigned c = 0; c < field.p(); ++c) {
    FpPoly g = polyGcd(f, aPoly.sub(FpPoly::constant(field, static_cast<Fel>(c))));
    if (g.degree() >= 1 && g.degree() < f.degree()) factorRec(field, g, out, caps);
  }
}

}  // namespace

std::vector<FpPoly> factorViaPearl(PrimeField field, const FpPoly& f, const Caps& caps) {
  if (!f.isMonic()) fail(Errc::NotMonic, "expected a monic polynomial");
  if (f.degree() < 1) fail(Errc::ZeroDegree, "expected degree >= 1");
  FpPoly fd = f.derivative();
  if (fd.isZero()) fail(Errc::NotSquarefree, "zero derivative in characteristic p");
  if (polyGcd(f, fd).degree() != 0) fail(Errc::NotSquarefree, "gcd(f, f') is not constant");

  std::vector<FpPoly> out;
  factorRec(field, f, out, caps);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stone
