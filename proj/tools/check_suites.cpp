#include "check_suites.hpp"

#include <algorithm>
#include <random>

#include "stone/duality.hpp"
#include "stone/profinite.hpp"
#include "stone/sheafmod.hpp"
#include "stone/spectrum.hpp"

namespace stone::suites {

namespace {

using Rng = std::mt19937_64;

Vec randomElement(Rng& rng, const FiniteAlgebra& a) {
  Vec v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v[i] = static_cast<Fel>(rng() % a.field().p());
  return v;
}

FpPoly randomMonic(Rng& rng, PrimeField field, std::size_t deg) {
  Vec coeffs(deg + 1, 0);
  for (std::size_t i = 0; i < deg; ++i) coeffs[i] = static_cast<Fel>(rng() % field.p());
  coeffs[deg] = 1;
  return FpPoly(field, coeffs);
}

FiniteAlgebra randomAlgebra(Rng& rng, unsigned p, std::size_t maxDim, const Caps& caps) {
  PrimeField field(p);
  switch (rng() % 4) {
    case 0:
      return functionAlgebra(field, rng() % (maxDim + 1), {}, caps);
    case 1:
      return univariateQuotient(field, randomMonic(rng, field, 1 + rng() % maxDim), caps);
    case 2: {
      FiniteAlgebra a = randomAlgebra(rng, p, std::max<std::size_t>(maxDim / 2, 1), caps);
      FiniteAlgebra b = randomAlgebra(rng, p, std::max<std::size_t>(maxDim / 2, 1), caps);
      return productAlgebra(a, b, caps).algebra;
    }
    default: {
      FiniteAlgebra a = univariateQuotient(field, randomMonic(rng, field, 1 + rng() % 2), caps);
      FiniteAlgebra b = univariateQuotient(field, randomMonic(rng, field, 1 + rng() % 2), caps);
      return tensorAlgebra(a, b, caps).algebra;
    }
  }
}

PropertyResult prop(const std::string& name, bool ok, const std::string& detail) {
  return PropertyResult{name, ok, detail};
}

// p^{dimA*dimB} within the element cap, for guarding tensor dim checks
bool tensorUnderCap(const FiniteAlgebra& a, const FiniteAlgebra& b, const Caps& caps) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < a.dim() * b.dim(); ++i) {
    if (acc > caps.elementCap / a.field().p()) return false;
    acc *= a.field().p();
  }
  return true;
}

SuiteResult runFpAlgebra(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"fpalgebra", seed, {}};
  Rng rng(seed);
  int cases = 0;
  bool laws = true, frob = true, dims = true, zeroq = true;
  std::string detail;
  for (unsigned p : {2u, 3u, 5u}) {
    for (int t = 0; t < 6 && laws; ++t) {
      FiniteAlgebra a = randomAlgebra(rng, p, 4, caps);
      FpMatrix fr = a.frobeniusMatrix();
      for (int i = 0; i < 8; ++i) {
        ++cases;
        Vec x = randomElement(rng, a), y = randomElement(rng, a), z = randomElement(rng, a);
        if (a.multiply(x, y) != a.multiply(y, x) ||
            a.multiply(a.multiply(x, y), z) != a.multiply(x, a.multiply(y, z)) ||
            a.multiply(x, a.add(y, z)) != a.add(a.multiply(x, y), a.multiply(x, z))) {
          laws = false;
          detail = "ring law failed on " + a.contentHash();
          break;
        }
        if (fr.apply(a.multiply(x, y)) != a.multiply(fr.apply(x), fr.apply(y))) {
          frob = false;
        }
      }
      FiniteAlgebra b = randomAlgebra(rng, p, 3, caps);
      if (productAlgebra(a, b, caps).algebra.dim() != a.dim() + b.dim()) dims = false;
      if (tensorUnderCap(a, b, caps)) {
        if (tensorAlgebra(a, b, caps).algebra.dim() != a.dim() * b.dim()) dims = false;
      }
      QuotientResult q = quotientByIdeal(a, {a.zero()});
      if (q.algebra.dim() != a.dim() || !q.projection.matrix().isIdentity()) zeroq = false;
    }
  }
  out.properties.push_back(prop("ring laws on random elements", laws,
                                laws ? std::to_string(cases) + " cases" : detail));
  out.properties.push_back(prop("frobenius is a ring endomorphism", frob, ""));
  out.properties.push_back(prop("product/tensor dimension laws", dims, ""));
  out.properties.push_back(prop("quotient by (0) is the identity", zeroq, ""));
  return out;
}

SuiteResult runPearl(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"pearl", seed, {}};
  Rng rng(seed + 1);
  bool monad = true, products = true, universal = true, qu = true;
  for (unsigned p : {2u, 3u}) {
    PrimeField field(p);
    for (int t = 0; t < 5; ++t) {
      FiniteAlgebra a = randomAlgebra(rng, p, 4, caps);
      PearlResult pr = pearl(a);
      PearlResult again = pearl(pr.pearlAlgebra);
      if (!again.inclusion.matrix().isIdentity()) monad = false;

      FiniteAlgebra b = randomAlgebra(rng, p, 3, caps);
      if (pearl(productAlgebra(a, b, caps).algebra).pearlAlgebra.dim() !=
          pearl(a).pearlAlgebra.dim() + pearl(b).pearlAlgebra.dim()) {
        products = false;
      }
    }
    for (int t = 0; t < 3; ++t) {
      FiniteAlgebra a = randomAlgebra(rng, p, 3, caps);
      for (std::size_t m = 0; m <= 2; ++m) {
        PBooleanAlgebra bb(functionAlgebra(field, m, {}, caps));
        if (!checkPearlUniversal(bb, a, caps).holds) universal = false;
        if (!checkQUniversal(a, bb, caps).holds) qu = false;
      }
    }
  }
  out.properties.push_back(prop("pearl is an idempotent monad", monad, ""));
  out.properties.push_back(prop("pearl commutes with finite products", products, ""));
  out.properties.push_back(prop("pearl universal property", universal, ""));
  out.properties.push_back(prop("Q universal property", qu, ""));
  return out;
}

SuiteResult runSpectrum(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"spectrum", seed, {}};
  Rng rng(seed + 2);
  bool agree = true, lattice = true, counts = true, inPearl = true;
  for (unsigned p : {2u, 3u}) {
    for (int t = 0; t < 5; ++t) {
      FiniteAlgebra a = randomAlgebra(rng, p, 3, caps);
      std::uint64_t total = 0;
      if (!a.elementCountWithin(caps.elementCap, total)) continue;

      PiZeroResult pz = piZero(a);
      std::vector<Vec> idems = enumerateIdempotents(a, caps);
      // primitive = nonzero with no proper sub-idempotent
      std::vector<Vec> slow;
      for (const Vec& e : idems) {
        if (e == a.zero()) continue;
        bool primitive = true;
        for (const Vec& f : idems) {
          if (f == a.zero() || f == e) continue;
          if (a.multiply(e, f) == f) { primitive = false; break; }
        }
        if (primitive) slow.push_back(e);
      }
      std::vector<Vec> fast = pz.components;
      auto cmp = [&a](const Vec& x, const Vec& y) { return a.indexOf(x) < a.indexOf(y); };
      std::sort(fast.begin(), fast.end(), cmp);
      std::sort(slow.begin(), slow.end(), cmp);
      if (fast != slow) agree = false;

      PearlResult pr = pearl(a);
      RowSpan span(a.field(), a.dim());
      for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
        span.insert(pr.inclusion.matrix().col(i));
      }
      IdempotentLattice lat(a);
      for (int k = 0; k < 8 && !idems.empty(); ++k) {
        const Vec& e = idems[rng() % idems.size()];
        const Vec& f = idems[rng() % idems.size()];
        const Vec& g = idems[rng() % idems.size()];
        if (lat.meet(e, lat.join(f, g)) != lat.join(lat.meet(e, f), lat.meet(e, g))) {
          lattice = false;
        }
        if (lat.complement(lat.complement(e)) != e) lattice = false;
        if (!span.contains(e)) inPearl = false;
      }
    }
    // factor counts against full splitting on squarefree samples
    PrimeField field(p);
    int done = 0;
    while (done < 6) {
      FpPoly f = randomMonic(rng, field, 2 + rng() % 4);
      if (f.derivative().isZero() || polyGcd(f, f.derivative()).degree() != 0) continue;
      ++done;
      auto factors = factorViaPearl(field, f, caps);
      FpPoly prod = FpPoly::constant(field, 1);
      for (const FpPoly& g : factors) prod = prod.mul(g);
      if (prod != f) counts = false;
      if (static_cast<int>(factors.size()) != factorCountViaPearl(field, f, caps)) counts = false;
    }
  }
  out.properties.push_back(prop("primitive idempotents match brute force", agree, ""));
  out.properties.push_back(prop("idempotent lattice is Boolean", lattice, ""));
  out.properties.push_back(prop("idempotents lie in the pearl", inPearl, ""));
  out.properties.push_back(prop("factor splitting multiplies back", counts, ""));
  return out;
}

SuiteResult runDuality(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"duality", seed, {}};
  Rng rng(seed + 3);
  bool roundTrips = true, faithful = true, variance = true;
  for (unsigned p : {2u, 3u}) {
    PrimeField field(p);
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
      if (!checkDualityRoundTrip(field, FiniteSetObj{labels}).holds) roundTrips = false;
    }
    for (std::size_t sN : {0u, 1u, 2u, 3u}) {
      for (std::size_t tN : {0u, 1u, 2u, 3u}) {
        std::vector<std::string> sL, tL;
        for (std::size_t i = 0; i < sN; ++i) sL.push_back("s" + std::to_string(i));
        for (std::size_t i = 0; i < tN; ++i) tL.push_back("t" + std::to_string(i));
        if (!checkFullFaithfulness(field, FiniteSetObj{sL}, FiniteSetObj{tL}, caps).holds) {
          faithful = false;
        }
      }
    }
  }
  PrimeField f2(2);
  FiniteSetObj s{{"a", "b", "c"}};
  FiniteSetObj t{{"u", "v"}};
  for (int trial = 0; trial < 12; ++trial) {
    SetMap f{s, t, {rng() % 2, rng() % 2, rng() % 2}};
    if (isSurjective(f) != dualizeSetMap(f2, f).isInjective()) variance = false;
  }
  out.properties.push_back(prop("unit/counit round trips", roundTrips, ""));
  out.properties.push_back(prop("full faithfulness at small sizes", faithful, ""));
  out.properties.push_back(prop("surjective maps <-> injective homs", variance, ""));
  return out;
}

SuiteResult runProfinite(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"profinite", seed, {}};
  Rng rng(seed + 4);
  bool involution = true, clopens = true, natural = true;
  (void)caps;
  for (int trial = 0; trial < 40; ++trial) {
    Tower t = (trial % 2 == 0) ? cantorTower(4) : branchingTower(4, 3);
    std::vector<std::vector<std::size_t>> leaf(t.levels.size());
    for (std::size_t i = 0; i < t.levelSize(t.depth()); ++i) {
      if (rng() % 2) leaf[t.depth()].push_back(i);
    }
    ClosedSubtower sub = makeClosedSubtower(t, leaf, true);
    if (complementOpen(t, complementClosed(t, sub)).levelSets != sub.levelSets) {
      involution = false;
    }
    // a stabilized family: pull a random level-1 slice all the way down
    std::vector<std::vector<std::size_t>> gen(t.levels.size());
    for (std::size_t i = 0; i < t.levelSize(1); ++i) {
      if (rng() % 2) gen[1].push_back(i);
    }
    for (std::size_t m = 2; m <= t.depth(); ++m) gen[m] = pullbackLevelSet(t, 1, gen[1], m);
    OpenCylinderFamily fam = makeOpenCylinderFamily(t, gen);
    ClopenIdempotent ci = clopenToIdempotent(t, fam, PrimeField(2));
    for (std::size_t m = ci.level; m <= t.depth(); ++m) {
      std::vector<std::size_t> pulled =
          pullbackLevelSet(t, ci.level, fam.levelSets[ci.level], m);
      if (pulled != fam.levelSets[m]) clopens = false;
    }
    // natural restriction along the subtower (validated inside the call);
    // stay under the dense structure-constant cap of 64 basis elements
    try {
      for (std::size_t lvl = 0; lvl < t.depth(); ++lvl) {
        if (!sub.levelSets[lvl].empty() && t.levelSize(lvl + 1) <= 64) {
          closedToQuotientAlgebra(t, sub, lvl, PrimeField(2));
        }
      }
    } catch (const StoneError&) {
      natural = false;
    }
  }
  out.properties.push_back(prop("complement involution", involution, "40 random subtowers"));
  out.properties.push_back(prop("clopen pullback round trip", clopens, ""));
  out.properties.push_back(prop("restriction is natural", natural, ""));
  return out;
}

SuiteResult runSheafmod(std::uint64_t seed, const Caps& caps) {
  SuiteResult out{"sheafmod", seed, {}};
  Rng rng(seed + 5);
  bool roundTrips = true, additive = true, monoidal = true;
  (void)caps;
  for (unsigned p : {2u, 3u}) {
    PrimeField field(p);
    for (int t = 0; t < 8; ++t) {
      const std::size_t setSize = 1 + rng() % 4;
      const std::size_t dim = rng() % 7;
      // random conjugated projector family
      FiniteAlgebra alg = functionAlgebra(field, setSize);
      std::vector<std::size_t> dims(setSize, 0);
      for (std::size_t i = 0; i < dim; ++i) ++dims[rng() % setSize];
      FpMatrix change(field, dim, dim);
      while (true) {
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c) change.set(r, c, static_cast<Fel>(rng() % p));
        if (dim == 0 || change.rank() == dim) break;
      }
      std::vector<Vec> invCols;
      for (std::size_t c = 0; c < dim; ++c) {
        Vec unit(dim, 0);
        unit[c] = 1;
        invCols.push_back(*change.solve(unit));
      }
      FpMatrix changeInv = FpMatrix::fromColumns(field, dim, invCols);
      std::vector<FpMatrix> projectors;
      std::size_t offset = 0;
      for (std::size_t s = 0; s < setSize; ++s) {
        FpMatrix block(field, dim, dim);
        for (std::size_t k = 0; k < dims[s]; ++k) block.set(offset + k, offset + k, 1);
        offset += dims[s];
        projectors.push_back(change.mul(block).mul(changeInv));
      }
      CSModule m(alg, dim, projectors);

      SheafOnFiniteSet f = moduleToSheaf(m);
      SheafToModuleResult back = sheafToModule(f, field);
      for (std::size_t s = 0; s < setSize; ++s) {
        if (back.identification.mul(back.module.projector(s)) !=
            m.projector(s).mul(back.identification)) {
          roundTrips = false;
        }
      }
      std::vector<std::size_t> u, v;
      for (std::size_t s = 0; s < setSize; ++s) {
        switch (rng() % 3) {
          case 0: u.push_back(s); break;
          case 1: v.push_back(s); break;
          default: break;
        }
      }
      std::vector<std::size_t> uv;
      std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(uv));
      if (restrictToClopen(m, uv).moduleDim() !=
          restrictToClopen(m, u).moduleDim() + restrictToClopen(m, v).moduleDim()) {
        additive = false;
      }
      if (!checkMonoidalEquivalence(m, m, {u, v, uv}).holds) monoidal = false;
    }
  }
  out.properties.push_back(prop("module/sheaf round trips", roundTrips, ""));
  out.properties.push_back(prop("disjoint clopen additivity", additive, ""));
  out.properties.push_back(prop("monoidal equivalence on pairs", monoidal, ""));
  return out;
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"fpalgebra", "pearl", "spectrum", "duality", "profinite", "sheafmod", "all"};
}

std::vector<SuiteResult> runSuites(const std::string& name, std::uint64_t seed,
                                   const Caps& caps) {
  std::vector<SuiteResult> out;
  auto want = [&name](const char* n) { return name == "all" || name == n; };
  if (want("fpalgebra")) out.push_back(runFpAlgebra(seed, caps));
  if (want("pearl")) out.push_back(runPearl(seed, caps));
  if (want("spectrum")) out.push_back(runSpectrum(seed, caps));
  if (want("duality")) out.push_back(runDuality(seed, caps));
  if (want("profinite")) out.push_back(runProfinite(seed, caps));
  if (want("sheafmod")) out.push_back(runSheafmod(seed, caps));
  if (out.empty()) fail(Errc::BadInput, "unknown suite '" + name + "'");
  return out;
}

}  // namespace stone::suites
