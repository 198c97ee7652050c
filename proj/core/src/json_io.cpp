#include "stone/json_io.hpp"

namespace stone {

namespace {

json vecToJson(const Vec& v) {
  json arr = json::array();
  for (Fel x : v) arr.push_back(static_cast<int>(x));
  return arr;
}

Vec vecFromJson(const json& j) {
  if (!j.is_array()) fail(Errc::BadInput, "expected an array of scalars");
  Vec v;
  v.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 255) {
      fail(Errc::BadInput, "scalar out of range");
    }
    v.push_back(static_cast<Fel>(x.get<long long>()));
  }
  return v;
}

}  // namespace

json matrixToJson(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vecToJson(m.row(r)));
  return rows;
}

json algebraToJson(const FiniteAlgebra& a) {
  json j;
  j["p"] = a.field().p();
  j["dim"] = a.dim();
  j["one"] = vecToJson(a.one());
  json mul = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json plane = json::array();
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      json row = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) {
        row.push_back(static_cast<int>(a.structureConstant(i, jj, k)));
      }
      plane.push_back(std::move(row));
    }
    mul.push_back(std::move(plane));
  }
  j["mul"] = std::move(mul);
  if (!a.labels().empty()) j["labels"] = a.labels();
  return j;
}

FiniteAlgebra algebraFromJson(const json& j, const Caps& caps) {
  if (!j.is_object()) fail(Errc::BadInput, "expected an algebra object");
  if (!j.contains("p") || !j.contains("dim") || !j.contains("one") || !j.contains("mul")) {
    fail(Errc::BadInput, "algebra object must have p, dim, one, mul");
  }
  PrimeField field(j.at("p").get<unsigned>());
  const std::size_t dim = j.at("dim").get<std::size_t>();
  Vec one = vecFromJson(j.at("one"));
  const json& mulJ = j.at("mul");
  if (!mulJ.is_array() || mulJ.size() != dim) fail(Errc::BadInput, "mul must be dim^3 nested");
  std::vector<Fel> mul;
  mul.reserve(dim * dim * dim);
  for (const json& plane : mulJ) {
    if (!plane.is_array() || plane.size() != dim) fail(Errc::BadInput, "mul must be dim^3 nested");
    for (const json& row : plane) {
      Vec r = vecFromJson(row);
      if (r.size() != dim) fail(Errc::BadInput, "mul must be dim^3 nested");
      mul.insert(mul.end(), r.begin(), r.end());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteAlgebra::fromStructureConstants(field, dim, std::move(mul), std::move(one),
                                               std::move(labels), true, caps);
}

json homToJson(const AlgebraHom& h) {
  json j;
  j["sourceDim"] = h.source().dim();
  j["targetDim"] = h.target().dim();
  j["matrix"] = matrixToJson(h.matrix());
  return j;
}

json pearlResultToJson(const PearlResult& r) {
  json j;
  j["ambient"] = r.ambient.contentHash();
  json basis = json::array();
  for (std::size_t i = 0; i < r.pearlAlgebra.dim(); ++i) {
    basis.push_back(vecToJson(r.inclusion.matrix().col(i)));
  }
  j["pearlBasis"] = std::move(basis);
  j["inclusion"] = matrixToJson(r.inclusion.matrix());
  j["pearlDim"] = r.pearlAlgebra.dim();
  return j;
}

PearlResult pearlResultFromJson(const FiniteAlgebra& ambient, const json& j) {
  if (j.at("ambient").get<std::string>() != ambient.contentHash()) {
    fail(Errc::BadInput, "ambient hash mismatch");
  }
  const json& rows = j.at("inclusion");
  std::vector<Vec> rowVecs;
  for (const json& r : rows) rowVecs.push_back(vecFromJson(r));
  FpMatrix inc = FpMatrix::fromRows(ambient.field(), j.at("pearlDim").get<std::size_t>(), rowVecs);

  RowSpan span(ambient.field(), ambient.dim());
  for (std::size_t c = 0; c < inc.cols(); ++c) span.insert(inc.col(c));
  if (span.dim() != inc.cols()) fail(Errc::BadInput, "inclusion columns dependent");
  SubalgebraResult sub = subalgebraOnBasis(ambient, span);
  if (sub.inclusion.matrix() != inc) fail(Errc::BadInput, "inclusion is not in canonical form");
  PBooleanCheck check = isPBoolean(sub.algebra);
  if (!check.holds) fail(Errc::NotPBoolean, "stored pearl is not p-Boolean");
  return PearlResult{ambient, sub.algebra, sub.inclusion};
}

json piZeroToJson(const PiZeroResult& r) {
  json j;
  j["ambient"] = r.ambient.contentHash();
  j["componentCount"] = r.components.size();
  json comps = json::array();
  for (const Vec& e : r.components) comps.push_back(vecToJson(e));
  j["idempotents"] = std::move(comps);
  json factors = json::array();
  json dims = json::array();
  for (const FiniteAlgebra& f : r.factors) {
    factors.push_back(algebraToJson(f));
    dims.push_back(f.dim());
  }
  j["factors"] = std::move(factors);
  j["factorDims"] = std::move(dims);
  return j;
}

json towerToJson(const Tower& t) {
  json j;
  j["depth"] = t.depth();
  j["levels"] = t.levels;
  j["transitions"] = t.transitions;
  j["surjective"] = t.surjectiveTransitions;
  return j;
}

Tower towerFromJson(const json& j) {
  Tower t;
  t.levels = j.at("levels").get<std::vector<std::vector<std::string>>>();
  t.transitions = j.at("transitions").get<std::vector<std::vector<std::size_t>>>();
  t.surjectiveTransitions = j.value("surjective", false);
  if (j.contains("depth") && j.at("depth").get<std::size_t>() + 1 != t.levels.size()) {
    fail(Errc::BadInput, "depth field disagrees with level count");
  }
  validateTower(t);
  return t;
}

json levelSetsToJson(const std::vector<std::vector<std::size_t>>& sets) {
  return json(sets);
}

std::vector<std::vector<std::size_t>> levelSetsFromJson(const json& j) {
  return j.get<std::vector<std::vector<std::size_t>>>();
}

json setMapToJson(const SetMap& m) {
  json j;
  j["source"] = m.source.elements;
  j["target"] = m.target.elements;
  j["assignment"] = m.assignment;
  return j;
}

SetMap setMapFromJson(const json& j) {
  SetMap m;
  m.source.elements = j.at("source").get<std::vector<std::string>>();
  m.target.elements = j.at("target").get<std::vector<std::string>>();
  m.assignment = j.at("assignment").get<std::vector<std::size_t>>();
  validateSetMap(m);
  return m;
}

json csModuleToJson(const CSModule& m) {
  json j;
  j["p"] = m.algebra().field().p();
  j["points"] = m.algebra().labels();
  j["moduleDim"] = m.moduleDim();
  json projs = json::array();
  for (const FpMatrix& proj : m.projectors()) projs.push_back(matrixToJson(proj));
  j["projectors"] = std::move(projs);
  return j;
}

CSModule csModuleFromJson(const json& j) {
  PrimeField field(j.at("p").get<unsigned>());
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  const std::size_t dim = j.at("moduleDim").get<std::size_t>();
  FiniteAlgebra alg = functionAlgebra(field, points.size(), points);
  std::vector<FpMatrix> projectors;
  for (const json& pj : j.at("projectors")) {
    std::vector<Vec> rows;
    for (const json& r : pj) rows.push_back(vecFromJson(r));
    projectors.push_back(FpMatrix::fromRows(field, dim, rows));
  }
  return CSModule(std::move(alg), dim, std::move(projectors));
}

json sheafToJson(const SheafOnFiniteSet& f) {
  json j;
  j["points"] = f.base.elements;
  j["totalDim"] = f.totalDim;
  j["stalkDims"] = f.stalkDims();
  json bases = json::array();
  for (const FpMatrix& b : f.stalkBases) bases.push_back(matrixToJson(b));
  j["stalkBases"] = std::move(bases);
  return j;
}

}  // namespace stone
