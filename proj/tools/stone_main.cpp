#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "check_suites.hpp"
#include "stone/dot_io.hpp"
#include "stone/expr.hpp"
#include "stone/json_io.hpp"

namespace {

constexpr const char* kVersion = "0.3.0";

using stone::json;

struct GlobalOpts {
  bool emitJson = false;
  bool emitDot = false;
  std::uint64_t dimCap = 4096;
  std::uint64_t seed = 20250811;
};

stone::Caps makeCaps(const GlobalOpts& g) {
  stone::Caps caps;
  caps.elementCap = g.dimCap;
  return caps;
}

void emitEnvelope(const std::string& command, const std::string& input, json result) {
  json env;
  env["command"] = command;
  env["input"] = input;
  env["result"] = std::move(result);
  env["version"] = kVersion;
  std::cout << env.dump(2) << "\n";
}

json verdictJson(bool holds, const std::string& detail) {
  json j;
  j["holds"] = holds;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

int runPearlCmd(const std::string& exprText, const GlobalOpts& g) {
  stone::ExprEvaluator ev(makeCaps(g));
  stone::FiniteAlgebra a = ev.eval(stone::parseAlgebraExpr(exprText));
  stone::PearlResult pr = stone::pearl(a);
  if (g.emitJson) {
    json result;
    result["ambientAlgebra"] = stone::algebraToJson(a);
    result["pearl"] = stone::pearlResultToJson(pr);
    emitEnvelope("pearl", exprText, std::move(result));
  } else {
    std::cout << "ambient dim " << a.dim() << ", pearl dim " << pr.pearlAlgebra.dim() << "\n";
    for (std::size_t i = 0; i < pr.pearlAlgebra.dim(); ++i) {
      std::cout << "  basis[" << i << "] =";
      for (stone::Fel v : pr.inclusion.matrix().col(i)) std::cout << " " << int(v);
      std::cout << "\n";
    }
  }
  return 0;
}

int runPiZeroCmd(const std::string& exprText, const GlobalOpts& g) {
  stone::ExprEvaluator ev(makeCaps(g));
  stone::FiniteAlgebra a = ev.eval(stone::parseAlgebraExpr(exprText));
  stone::PiZeroResult pz = stone::piZero(a);
  if (g.emitDot) {
    std::cout << stone::dotPiZero(pz);
  } else if (g.emitJson) {
    emitEnvelope("pi0", exprText, stone::piZeroToJson(pz));
  } else {
    std::cout << pz.components.size() << " connected component(s); factor dims:";
    for (const stone::FiniteAlgebra& f : pz.factors) std::cout << " " << f.dim();
    std::cout << "\n";
  }
  return 0;
}

int runQCmd(const std::string& exprText, const GlobalOpts& g) {
  stone::ExprEvaluator ev(makeCaps(g));
  stone::FiniteAlgebra a = ev.eval(stone::parseAlgebraExpr(exprText));
  stone::StoneQuotientResult q = stone::stoneQuotient(a);
  if (g.emitJson) {
    json result;
    result["algebra"] = stone::algebraToJson(q.algebra.algebra());
    result["projection"] = stone::matrixToJson(q.projection.matrix());
    result["dim"] = q.algebra.algebra().dim();
    emitEnvelope("q", exprText, std::move(result));
  } else {
    std::cout << "Q(A) has dim " << q.algebra.algebra().dim() << " (ambient dim " << a.dim()
              << ")\n";
  }
  return 0;
}

int runDualSet(std::size_t n, unsigned p, const GlobalOpts& g) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  stone::PBooleanAlgebra b = stone::dualOfSet(stone::PrimeField(p), stone::FiniteSetObj{labels});
  const std::string input = "set " + std::to_string(n) + " -p " + std::to_string(p);
  if (g.emitJson) {
    emitEnvelope("dual", input, stone::algebraToJson(b.algebra()));
  } else {
    std::cout << "F_" << p << "^" << n << ": dim " << b.algebra().dim() << ", p-Boolean\n";
  }
  return 0;
}

int runDualSpec(const std::string& exprText, const GlobalOpts& g) {
  stone::ExprEvaluator ev(makeCaps(g));
  stone::FiniteAlgebra a = ev.eval(stone::parseAlgebraExpr(exprText));
  stone::PBooleanAlgebra b(a);  // NotPBoolean -> exit 2
  stone::SpectrumResult spec = stone::spectrumOfPBoolean(b);
  const std::string input = "spec " + exprText;
  if (g.emitJson) {
    json result;
    result["points"] = spec.points.elements;
    json idems = json::array();
    for (const stone::Vec& e : spec.pointIdempotents) {
      json arr = json::array();
      for (stone::Fel v : e) arr.push_back(int(v));
      idems.push_back(std::move(arr));
    }
    result["pointIdempotents"] = std::move(idems);
    json homs = json::array();
    for (const stone::AlgebraHom& h : spec.pointHoms) homs.push_back(stone::matrixToJson(h.matrix()));
    result["pointHoms"] = std::move(homs);
    emitEnvelope("dual", input, std::move(result));
  } else {
    std::cout << "|Spec| = " << spec.points.size() << ":";
    for (const std::string& s : spec.points.elements) std::cout << " " << s;
    std::cout << "\n";
  }
  return 0;
}

int runFactorCount(unsigned p, const std::string& polyText, const GlobalOpts& g) {
  stone::PrimeField field(p);
  stone::FpPoly f = stone::parsePolynomial(field, polyText);
  int count = stone::factorCountViaPearl(field, f, makeCaps(g));
  if (g.emitJson) {
    json result;
    result["count"] = count;
    result["degree"] = f.degree();
    emitEnvelope("factor-count", polyText, std::move(result));
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int runFactor(unsigned p, const std::string& polyText, const GlobalOpts& g) {
  stone::PrimeField field(p);
  stone::FpPoly f = stone::parsePolynomial(field, polyText);
  std::vector<stone::FpPoly> factors = stone::factorViaPearl(field, f, makeCaps(g));
  if (g.emitJson) {
    json result;
    json arr = json::array();
    for (const stone::FpPoly& g2 : factors) arr.push_back(g2.toString());
    result["factors"] = std::move(arr);
    emitEnvelope("factor", polyText, std::move(result));
  } else {
    for (const stone::FpPoly& g2 : factors) std::cout << g2.toString() << "\n";
  }
  return 0;
}

std::vector<std::vector<std::size_t>> parseLevelSets(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw stone::ParseError(0, {"JSON level sets"}, "invalid JSON index lists");
  }
  return stone::levelSetsFromJson(j);
}

int runTower(const std::string& shape, std::size_t depth, const std::string& action,
             const std::string& closedArg, const std::string& openArg, unsigned p,
             std::size_t level, bool normalize, const GlobalOpts& g) {
  if (shape != "cantor") stone::fail(stone::Errc::BadInput, "unknown tower shape '" + shape + "'");
  stone::Tower t = stone::cantorTower(depth);
  const std::string input = shape + " -d " + std::to_string(depth) + " " + action;

  if (action == "show") {
    if (g.emitDot) {
      std::cout << stone::dotTower(t);
    } else if (g.emitJson) {
      emitEnvelope("tower", input, stone::towerToJson(t));
    } else {
      std::cout << "cantor tower, depth " << depth << ", level sizes:";
      for (const auto& lvl : t.levels) std::cout << " " << lvl.size();
      std::cout << "\n";
    }
    return 0;
  }
  if (action == "algebra") {
    stone::TowerAlgebraResult r = stone::towerFunctionAlgebra(t, level, stone::PrimeField(p));
    if (g.emitJson) {
      json result;
      result["algebra"] = stone::algebraToJson(r.algebra);
      if (r.transitionHom) result["transition"] = stone::matrixToJson(r.transitionHom->matrix());
      emitEnvelope("tower", input + " -n " + std::to_string(level), std::move(result));
    } else {
      std::cout << "level " << level << " algebra dim " << r.algebra.dim() << "\n";
    }
    return 0;
  }
  if (action == "complement") {
    if (!closedArg.empty()) {
      stone::ClosedSubtower sub = stone::makeClosedSubtower(t, parseLevelSets(closedArg), normalize);
      stone::OpenCylinderFamily open = stone::complementClosed(t, sub);
      if (g.emitJson) {
        json result;
        result["closed"] = stone::levelSetsToJson(sub.levelSets);
        result["open"] = stone::levelSetsToJson(open.levelSets);
        emitEnvelope("tower", input, std::move(result));
      } else {
        std::cout << stone::levelSetsToJson(open.levelSets).dump() << "\n";
      }
      return 0;
    }
    if (!openArg.empty()) {
      stone::OpenCylinderFamily fam = stone::makeOpenCylinderFamily(t, parseLevelSets(openArg));
      stone::ClosedSubtower sub = stone::complementOpen(t, fam);
      if (g.emitJson) {
        json result;
        result["open"] = stone::levelSetsToJson(fam.levelSets);
        result["closed"] = stone::levelSetsToJson(sub.levelSets);
        emitEnvelope("tower", input, std::move(result));
      } else {
        std::cout << stone::levelSetsToJson(sub.levelSets).dump() << "\n";
      }
      return 0;
    }
    stone::fail(stone::Errc::BadInput, "complement needs --closed or --open");
  }
  if (action == "clopen") {
    if (openArg.empty()) stone::fail(stone::Errc::BadInput, "clopen needs --open");
    stone::OpenCylinderFamily fam = stone::makeOpenCylinderFamily(t, parseLevelSets(openArg));
    stone::ClopenIdempotent ci = stone::clopenToIdempotent(t, fam, stone::PrimeField(p));
    if (g.emitJson) {
      json result;
      result["level"] = ci.level;
      json arr = json::array();
      for (stone::Fel v : ci.indicator) arr.push_back(int(v));
      result["indicator"] = std::move(arr);
      emitEnvelope("tower", input, std::move(result));
    } else {
      std::cout << "stabilizes at level " << ci.level << "\n";
    }
    return 0;
  }
  stone::fail(stone::Errc::BadInput, "unknown tower action '" + action + "'");
}

int runSheafDemo(unsigned p, const std::string& stalksArg, const GlobalOpts& g) {
  json stalksJ = json::parse(stalksArg, nullptr, false);
  if (stalksJ.is_discarded() || !stalksJ.is_array()) {
    throw stone::ParseError(0, {"JSON stalk dims"}, "expected a JSON array of stalk dims");
  }
  std::vector<std::size_t> dims = stalksJ.get<std::vector<std::size_t>>();
  stone::PrimeField field(p);

  // build the block module with the given stalk dims, run it once through
  // the equivalence and its monoidal structure
  std::size_t total = 0;
  for (std::size_t d : dims) total += d;
  stone::FiniteAlgebra alg = stone::functionAlgebra(field, dims.size());
  std::vector<stone::FpMatrix> projectors;
  std::size_t offset = 0;
  for (std::size_t d : dims) {
    stone::FpMatrix proj(field, total, total);
    for (std::size_t k = 0; k < d; ++k) proj.set(offset + k, offset + k, 1);
    offset += d;
    projectors.push_back(std::move(proj));
  }
  stone::CSModule m(alg, total, std::move(projectors));
  stone::SheafOnFiniteSet sheaf = stone::moduleToSheaf(m);
  stone::SheafToModuleResult back = stone::sheafToModule(sheaf, field);
  bool roundTrip = true;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (back.identification.mul(back.module.projector(s)) !=
        m.projector(s).mul(back.identification)) {
      roundTrip = false;
    }
  }
  stone::CSModule square = stone::tensorModules(m, m);
  std::vector<std::vector<std::size_t>> clopens;
  clopens.push_back({});
  std::vector<std::size_t> evens;
  for (std::size_t s = 0; s < dims.size(); s += 2) evens.push_back(s);
  clopens.push_back(evens);
  stone::MonoidalVerdict mv = stone::checkMonoidalEquivalence(m, m, clopens);

  const std::string input = "demo -p " + std::to_string(p) + " --stalks " + stalksArg;
  if (g.emitJson) {
    json result;
    result["module"] = stone::csModuleToJson(m);
    result["sheaf"] = stone::sheafToJson(sheaf);
    result["tensorStalkDims"] = stone::moduleToSheaf(square).stalkDims();
    result["roundTrip"] = roundTrip;
    result["monoidal"] = verdictJson(mv.holds, mv.detail);
    emitEnvelope("sheaf", input, std::move(result));
  } else {
    std::cout << "module dim " << total << " over F_" << p << "^" << dims.size()
              << "; round trip " << (roundTrip ? "ok" : "FAILED") << "; monoidal "
              << (mv.holds ? "ok" : "FAILED") << "\n";
  }
  return (roundTrip && mv.holds) ? 0 : 2;
}

int runCheck(const std::string& suite, const GlobalOpts& g) {
  std::vector<stone::suites::SuiteResult> results =
      stone::suites::runSuites(suite, g.seed, makeCaps(g));
  bool all = true;
  if (g.emitJson) {
    json result;
    result["seed"] = g.seed;
    json arr = json::array();
    for (const auto& sr : results) {
      json sj;
      sj["suite"] = sr.suite;
      json props = json::array();
      for (const auto& p : sr.properties) {
        all = all && p.passed;
        json pj;
        pj["name"] = p.name;
        pj["passed"] = p.passed;
        if (!p.detail.empty()) pj["detail"] = p.detail;
        props.push_back(std::move(pj));
      }
      sj["properties"] = std::move(props);
      arr.push_back(std::move(sj));
    }
    result["suites"] = std::move(arr);
    result["allPassed"] = all;
    emitEnvelope("check", suite, std::move(result));
  } else {
    std::cout << "seed " << g.seed << "\n";
    for (const auto& sr : results) {
      for (const auto& p : sr.properties) {
        all = all && p.passed;
        std::cout << (p.passed ? "PASS" : "FAIL") << " [" << sr.suite << "] " << p.name;
        if (!p.detail.empty()) std::cout << " (" << p.detail << ")";
        std::cout << "\n";
      }
    }
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stone: a workbench for Stone duality over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  if (const char* env = std::getenv("STONE_DIM_CAP")) {
    g.dimCap = std::strtoull(env, nullptr, 10);
  }
  app.add_flag("--json", g.emitJson, "emit a JSON envelope");
  app.add_flag("--dot", g.emitDot, "emit graphviz DOT where supported");
  app.add_option("--dim-cap", g.dimCap, "cap on |A| for enumeration-backed operations");
  app.add_option("--seed", g.seed, "seed for randomized suites");

  std::string exprText, polyText;
  unsigned prime = 2;

  CLI::App* pearlCmd = app.add_subcommand("pearl", "maximal p-Boolean subalgebra of <expr>");
  pearlCmd->add_option("expr", exprText, "algebra expression")->required();

  CLI::App* pi0Cmd = app.add_subcommand("pi0", "connected components of Spec <expr>");
  pi0Cmd->add_option("expr", exprText, "algebra expression")->required();

  CLI::App* qCmd = app.add_subcommand("q", "universal p-Boolean quotient of <expr>");
  qCmd->add_option("expr", exprText, "algebra expression")->required();

  CLI::App* dualCmd = app.add_subcommand("dual", "finite-stage Stone duality");
  dualCmd->require_subcommand(1);
  std::size_t dualSetSize = 0;
  CLI::App* dualSetCmd = dualCmd->add_subcommand("set", "function algebra of an n-point set");
  dualSetCmd->add_option("n", dualSetSize, "set size")->required();
  dualSetCmd->add_option("-p,--prime", prime, "characteristic")->required();
  CLI::App* dualSpecCmd = dualCmd->add_subcommand("spec", "points of a p-Boolean algebra");
  dualSpecCmd->add_option("expr", exprText, "algebra expression")->required();

  CLI::App* fcCmd = app.add_subcommand("factor-count", "distinct irreducible factor count");
  fcCmd->add_option("-p,--prime", prime, "characteristic")->required();
  fcCmd->add_option("poly", polyText, "monic polynomial")->required();

  CLI::App* fCmd = app.add_subcommand("factor", "factor a squarefree monic polynomial");
  fCmd->add_option("-p,--prime", prime, "characteristic")->required();
  fCmd->add_option("poly", polyText, "monic squarefree polynomial")->required();

  CLI::App* towerCmd = app.add_subcommand("tower", "light profinite towers");
  std::string towerShape, towerAction = "show", closedArg, openArg;
  std::size_t towerDepth = 0, towerLevel = 0;
  bool normalize = false;
  towerCmd->add_option("shape", towerShape, "tower family (cantor)")->required();
  towerCmd->add_option("-d,--depth", towerDepth, "truncation depth")->required();
  towerCmd->add_option("action", towerAction, "show|algebra|complement|clopen");
  towerCmd->add_option("--closed", closedArg, "closed subtower as JSON index lists");
  towerCmd->add_option("--open", openArg, "open cylinder family as JSON index lists");
  towerCmd->add_option("-p,--prime", prime, "characteristic");
  towerCmd->add_option("-n,--level", towerLevel, "level for the algebra action");
  towerCmd->add_flag("--normalize", normalize, "normalize the closed subtower from its deepest level");

  CLI::App* sheafCmd = app.add_subcommand("sheaf", "sheaf-module equivalence demos");
  sheafCmd->require_subcommand(1);
  CLI::App* sheafDemo = sheafCmd->add_subcommand("demo", "run a module through the equivalence");
  std::string stalksArg = "[1]";
  sheafDemo->add_option("-p,--prime", prime, "characteristic")->required();
  sheafDemo->add_option("--stalks", stalksArg, "stalk dimensions as a JSON array")->required();

  CLI::App* checkCmd = app.add_subcommand("check", "randomized property suites");
  std::string suiteName;
  checkCmd->add_option("suite", suiteName, "fpalgebra|pearl|spectrum|duality|profinite|sheafmod|all")
      ->required();

  // let --json/--dot/--dim-cap/--seed appear after any subcommand
  for (CLI::App* sub : app.get_subcommands(/*filter=*/[](CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands([](CLI::App*) { return true; })) {
      nested->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (pearlCmd->parsed()) return runPearlCmd(exprText, g);
    if (pi0Cmd->parsed()) return runPiZeroCmd(exprText, g);
    if (qCmd->parsed()) return runQCmd(exprText, g);
    if (dualCmd->parsed()) {
      if (dualSetCmd->parsed()) return runDualSet(dualSetSize, prime, g);
      return runDualSpec(exprText, g);
    }
    if (fcCmd->parsed()) return runFactorCount(prime, polyText, g);
    if (fCmd->parsed()) return runFactor(prime, polyText, g);
    if (towerCmd->parsed()) {
      return runTower(towerShape, towerDepth, towerAction, closedArg, openArg, prime, towerLevel,
                      normalize, g);
    }
    if (sheafCmd->parsed()) return runSheafDemo(prime, stalksArg, g);
    if (checkCmd->parsed()) return runCheck(suiteName, g);
  } catch (const stone::StoneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stone::errcExitClass(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
