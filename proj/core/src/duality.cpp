#include "stone/duality.hpp"

#include <algorithm>
#include <set>

namespace stone {

void validateFiniteSet(const FiniteSetObj& s) {
  std::set<std::string> seen(s.elements.begin(), s.elements.end());
  if (seen.size() != s.elements.size()) fail(Errc::BadInput, "duplicate labels in finite set");
}

void validateSetMap(const SetMap& m) {
  validateFiniteSet(m.source);
  validateFiniteSet(m.target);
  if (m.assignment.size() != m.source.size()) fail(Errc::BadInput, "assignment size mismatch");
  for (std::size_t t : m.assignment) {
    if (t >= m.target.size()) fail(Errc::BadInput, "assignment index out of range");
  }
}

SetMap identitySetMap(const FiniteSetObj& s) {
  SetMap m{s, s, {}};
  m.assignment.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) m.assignment[i] = i;
  return m;
}

SetMap composeSetMaps(const SetMap& g, const SetMap& f) {
  if (f.target.elements != g.source.elements) fail(Errc::SourceMismatch, "set maps not composable");
  SetMap out{f.source, g.target, {}};
  out.assignment.resize(f.source.size());
  for (std::size_t i = 0; i < f.source.size(); ++i) {
    out.assignment[i] = g.assignment[f.assignment[i]];
  }
  return out;
}

bool isSurjective(const SetMap& m) {
  std::vector<bool> hit(m.target.size(), false);
  for (std::size_t t : m.assignment) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool isInjectiveMap(const SetMap& m) {
  std::set<std::size_t> seen(m.assignment.begin(), m.assignment.end());
  return seen.size() == m.assignment.size();
}

PBooleanAlgebra dualOfSet(PrimeField field, const FiniteSetObj& s) {
  validateFiniteSet(s);
  return PBooleanAlgebra(functionAlgebra(field, s.size(), s.elements));
}

SpectrumResult spectrumOfPBoolean(const PBooleanAlgebra& b) {
  const FiniteAlgebra& B = b.algebra();
  std::vector<Vec> prim = primitiveIdempotents(b);

  SpectrumResult out;
  out.pointIdempotents = prim;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    const Vec& e = prim[i];
    // point label: the ambient basis label when e is a coordinate indicator
    std::size_t unitPos = B.dim();
    std::size_t support = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) { ++support; unitPos = k; }
    }
    if (support == 1 && e[unitPos] == 1 && !B.labels().empty()) {
      out.points.elements.push_back(B.labels()[unitPos]);
    } else {
      out.points.elements.push_back("c" + std::to_string(i));
    }

    FpMatrix row(B.field(), 1, B.dim());
    for (std::size_t j = 0; j < B.dim(); ++j) {
      Vec w = B.multiply(e, B.basisVector(j));
      // w must be c*e for a unique scalar c
      std::size_t lead = e.size();
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] != 0) { lead = k; break; }
      }
      const Fel c = B.field().mul(w[lead], B.field().inv(e[lead]));
      if (w != B.scale(c, e)) {
        fail(Errc::ScalarResolutionFailure, "e*b_j is not a scalar multiple of e");
      }
      row.set(0, j, c);
    }
    out.pointHoms.emplace_back(B, functionAlgebra(B.field(), 1), std::move(row), true);
  }
  validateFiniteSet(out.points);
  return out;
}

AlgebraHom dualizeSetMap(PrimeField field, const SetMap& m) {
  validateSetMap(m);
  FiniteAlgebra algS = functionAlgebra(field, m.source.size(), m.source.elements);
  FiniteAlgebra algT = functionAlgebra(field, m.target.size(), m.target.elements);
  FpMatrix mat(field, m.source.size(), m.target.size());
  for (std::size_t s = 0; s < m.source.size(); ++s) mat.set(s, m.assignment[s], 1);
  return AlgebraHom(algT, algS, std::move(mat), false);
}

SetMap dualizeAlgHom(const AlgebraHom& g) {
  PBooleanAlgebra B(g.source());
  PBooleanAlgebra C(g.target());
  SpectrumResult specB = spectrumOfPBoolean(B);
  SpectrumResult specC = spectrumOfPBoolean(C);

  SetMap out{specC.points, specB.points, {}};
  out.assignment.reserve(specC.points.size());
  const FiniteAlgebra& Calg = g.target();
  for (const Vec& e : specC.pointIdempotents) {
    std::size_t found = specB.points.size();
    for (std::size_t j = 0; j < specB.pointIdempotents.size(); ++j) {
      if (Calg.multiply(e, g.apply(specB.pointIdempotents[j])) == e) {
        found = j;
        break;
      }
    }
    if (found == specB.points.size()) {
      fail(Errc::NoPreimagePoint, "no primitive idempotent pulls back onto the point");
    }
    out.assignment.push_back(found);
  }
  return out;
}

RoundTripVerdict checkDualityRoundTrip(PrimeField field, const FiniteSetObj& s,
                                       const std::vector<SetMap>& sampleMaps) {
  RoundTripVerdict v;
  PBooleanAlgebra B = dualOfSet(field, s);
  SpectrumResult spec = spectrumOfPBoolean(B);

  // unit: S -> Spec(F_p^S) is a bijection matching indicators to labels
  if (spec.points.size() != s.size()) {
    v.detail = "point count differs from |S|";
    return v;
  }
  std::vector<bool> covered(s.size(), false);
  for (const Vec& e : spec.pointIdempotents) {
    std::size_t pos = e.size();
    std::size_t support = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) { ++support; pos = k; }
    }
    if (support != 1 || e[pos] != 1) {
      v.detail = "a point of Spec(F_p^S) is not a coordinate indicator";
      return v;
    }
    covered[pos] = true;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    v.detail = "points do not cover S";
    return v;
  }

  // counit: evaluation F_p^S -> F_p^{Spec} is a bijective hom
  {
    FiniteAlgebra target = functionAlgebra(field, spec.points.size(), spec.points.elements);
    FpMatrix ev(field, spec.points.size(), B.algebra().dim());
    for (std::size_t i = 0; i < spec.pointHoms.size(); ++i) {
      for (std::size_t j = 0; j < B.algebra().dim(); ++j) {
        ev.set(i, j, spec.pointHoms[i].matrix().at(0, j));
      }
    }
    AlgebraHom evaluation(B.algebra(), target, std::move(ev), true);
    if (!evaluation.isBijective()) {
      v.detail = "evaluation map is not bijective";
      return v;
    }
  }

  // naturality: dualize then re-dualize each sample map out of S
  for (const SetMap& f : sampleMaps) {
    validateSetMap(f);
    if (f.source.elements != s.elements) {
      v.detail = "sample map does not start at S";
      return v;
    }
    AlgebraHom dual = dualizeSetMap(field, f);
    SetMap back = dualizeAlgHom(dual);
    // identify points with labels via their indicator positions
    auto indicatorPos = [](const Vec& e) {
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) return k;
      return e.size();
    };
    SpectrumResult specS = spectrumOfPBoolean(PBooleanAlgebra(dual.target()));
    SpectrumResult specT = spectrumOfPBoolean(PBooleanAlgebra(dual.source()));
    for (std::size_t i = 0; i < back.assignment.size(); ++i) {
      const std::size_t srcLabel = indicatorPos(specS.pointIdempotents[i]);
      const std::size_t dstLabel = indicatorPos(specT.pointIdempotents[back.assignment[i]]);
      if (f.assignment[srcLabel] != dstLabel) {
        v.detail = "naturality square fails on a sample map";
        return v;
      }
    }
  }

  v.holds = true;
  return v;
}

FullFaithfulVerdict checkFullFaithfulness(PrimeField field, const FiniteSetObj& s,
                                          const FiniteSetObj& t, const Caps& caps) {
  FullFaithfulVerdict v;
  validateFiniteSet(s);
  validateFiniteSet(t);

  std::vector<FpMatrix> dualized;
  // all |T|^|S| set maps, odometer over assignments
  if (t.size() == 0 && s.size() > 0) {
    // no maps
  } else {
    std::vector<std::size_t> asg(s.size(), 0);
    while (true) {
      SetMap m{s, t, asg};
      dualized.push_back(dualizeSetMap(field, m).matrix());
      std::size_t i = 0;
      for (; i < asg.size(); ++i) {
        if (++asg[i] < t.size()) break;
        asg[i] = 0;
      }
      if (i == asg.size()) break;
    }
  }
  v.setMapCount = dualized.size();

  FiniteAlgebra algS = functionAlgebra(field, s.size(), s.elements);
  FiniteAlgebra algT = functionAlgebra(field, t.size(), t.elements);
  std::vector<AlgebraHom> homs = enumerateHoms(algT, algS, caps);
  v.homCount = homs.size();

  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < s.size(); ++i) expected *= t.size();
  if (v.setMapCount != expected) {
    v.detail = "set map count mismatch";
    return v;
  }
  if (v.homCount != expected) {
    v.detail = "hom count differs from |T|^|S|";
    return v;
  }
  std::vector<FpMatrix> homM;
  homM.reserve(homs.size());
  for (const AlgebraHom& h : homs) homM.push_back(h.matrix());
  std::sort(homM.begin(), homM.end());
  std::sort(dualized.begin(), dualized.end());
  if (homM != dualized) {
    v.detail = "dualized set maps and enumerated homs differ";
    return v;
  }
  v.holds = true;
  return v;
}

}  // namespace stone
