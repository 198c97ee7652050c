#include "stone/profinite.hpp"

#include <algorithm>
#include <set>

namespace stone {

void validateTower(const Tower& t) {
  if (t.levels.empty()) fail(Errc::BadInput, "tower must have at least one level");
  if (t.transitions.size() != t.levels.size() - 1) {
    fail(Errc::BadInput, "transition count must be depth");
  }
  for (std::size_t n = 0; n < t.transitions.size(); ++n) {
    if (t.transitions[n].size() != t.levelSize(n + 1)) {
      fail(Errc::BadInput, "transition arity mismatch at level " + std::to_string(n));
    }
    std::vector<bool> hit(t.levelSize(n), false);
    for (std::size_t img : t.transitions[n]) {
      if (img >= t.levelSize(n)) fail(Errc::BadInput, "transition image out of range");
      hit[img] = true;
    }
    if (t.surjectiveTransitions &&
        !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      fail(Errc::BadInput, "transition not surjective at level " + std::to_string(n));
    }
  }
  for (const auto& level : t.levels) {
    std::set<std::string> seen(level.begin(), level.end());
    if (seen.size() != level.size()) fail(Errc::BadInput, "duplicate labels in a level");
  }
}

Tower branchingTower(std::size_t depth, std::size_t arity) {
  if (arity < 1) fail(Errc::BadInput, "arity must be positive");
  Tower t;
  t.surjectiveTransitions = true;
  std::size_t size = 1;
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<std::string> level(size);
    for (std::size_t i = 0; i < size; ++i) {
      // digit string of length n, most significant first
      std::string label(n, '0');
      std::size_t v = i;
      for (std::size_t k = n; k-- > 0;) {
        label[k] = static_cast<char>('0' + v % arity);
        v /= arity;
      }
      level[i] = label;
    }
    t.levels.push_back(std::move(level));
    if (n < depth) {
      std::vector<std::size_t> tr(size * arity);
      for (std::size_t j = 0; j < size * arity; ++j) tr[j] = j / arity;
      t.transitions.push_back(std::move(tr));
    }
    size *= arity;
  }
  return t;
}

Tower cantorTower(std::size_t depth) { return branchingTower(depth, 2); }

void validateTowerMap(const Tower& source, const Tower& target, const TowerMap& m) {
  if (source.depth() != target.depth()) fail(Errc::BadInput, "tower depths differ");
  if (m.levelMaps.size() != source.levels.size()) fail(Errc::BadInput, "level map count mismatch");
  for (std::size_t n = 0; n <= source.depth(); ++n) {
    if (m.levelMaps[n].size() != source.levelSize(n)) {
      fail(Errc::BadInput, "level map size mismatch at level " + std::to_string(n));
    }
    for (std::size_t img : m.levelMaps[n]) {
      if (img >= target.levelSize(n)) fail(Errc::BadInput, "level map image out of range");
    }
  }
  for (std::size_t n = 0; n + 1 <= source.depth(); ++n) {
    for (std::size_t j = 0; j < source.levelSize(n + 1); ++j) {
      if (m.levelMaps[n][source.transitions[n][j]] !=
          target.transitions[n][m.levelMaps[n + 1][j]]) {
        fail(Errc::BadInput, "square does not commute at level " + std::to_string(n));
      }
    }
  }
}

namespace {

std::vector<std::size_t> sortedUnique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void checkLevelSets(const Tower& t, const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.size() != t.levels.size()) fail(Errc::BadInput, "level set count must be depth+1");
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    for (std::size_t idx : sets[n]) {
      if (idx >= t.levelSize(n)) fail(Errc::BadInput, "level set index out of range");
    }
    if (!std::is_sorted(sets[n].begin(), sets[n].end()) ||
        std::adjacent_find(sets[n].begin(), sets[n].end()) != sets[n].end()) {
      fail(Errc::BadInput, "level sets must be sorted and duplicate-free");
    }
  }
}

}  // namespace

ClosedSubtower makeClosedSubtower(const Tower& t, std::vector<std::vector<std::size_t>> sets,
                                  bool normalize) {
  validateTower(t);
  for (auto& s : sets) s = sortedUnique(std::move(s));
  checkLevelSets(t, sets);
  if (normalize) {
    for (std::size_t n = t.depth(); n-- > 0;) {
      std::vector<std::size_t> img;
      img.reserve(sets[n + 1].size());
      for (std::size_t j : sets[n + 1]) img.push_back(t.transitions[n][j]);
      sets[n] = sortedUnique(std::move(img));
    }
  }
  for (std::size_t n = 0; n < t.depth(); ++n) {
    std::vector<std::size_t> img;
    img.reserve(sets[n + 1].size());
    for (std::size_t j : sets[n + 1]) img.push_back(t.transitions[n][j]);
    if (sortedUnique(std::move(img)) != sets[n]) {
      fail(Errc::InvalidSubtower,
           "levelwise image condition fails at level " + std::to_string(n));
    }
  }
  return ClosedSubtower{std::move(sets)};
}

OpenCylinderFamily makeOpenCylinderFamily(const Tower& t,
                                          std::vector<std::vector<std::size_t>> sets) {
  validateTower(t);
  for (auto& s : sets) s = sortedUnique(std::move(s));
  checkLevelSets(t, sets);
  for (std::size_t n = 0; n < t.depth(); ++n) {
    std::set<std::size_t> nextSet(sets[n + 1].begin(), sets[n + 1].end());
    std::set<std::size_t> cur(sets[n].begin(), sets[n].end());
    for (std::size_t j = 0; j < t.levelSize(n + 1); ++j) {
      if (cur.count(t.transitions[n][j]) && !nextSet.count(j)) {
        fail(Errc::BadInput,
             "cylinder condition fails at level " + std::to_string(n));
      }
    }
  }
  return OpenCylinderFamily{std::move(sets)};
}

namespace {

std::vector<std::size_t> levelComplement(const Tower& t, std::size_t n,
                                         const std::vector<std::size_t>& sub) {
  std::vector<bool> in(t.levelSize(n), false);
  for (std::size_t idx : sub) in[idx] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.levelSize(n); ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

OpenCylinderFamily complementClosed(const Tower& t, const ClosedSubtower& sub) {
  validateTower(t);
  if (sub.levelSets.size() != t.levels.size()) fail(Errc::InvalidSubtower, "depth mismatch");
  std::vector<std::vector<std::size_t>> sets(t.levels.size());
  for (std::size_t n = 0; n <= t.depth(); ++n) sets[n] = levelComplement(t, n, sub.levelSets[n]);
  return makeOpenCylinderFamily(t, std::move(sets));
}

ClosedSubtower complementOpen(const Tower& t, const OpenCylinderFamily& fam) {
  validateTower(t);
  if (fam.levelSets.size() != t.levels.size()) fail(Errc::BadInput, "depth mismatch");
  std::vector<std::vector<std::size_t>> sets(t.levels.size());
  for (std::size_t n = 0; n <= t.depth(); ++n) sets[n] = levelComplement(t, n, fam.levelSets[n]);
  // the image condition can genuinely fail at finite depth
  for (std::size_t n = 0; n < t.depth(); ++n) {
    std::vector<std::size_t> img;
    img.reserve(sets[n + 1].size());
    for (std::size_t j : sets[n + 1]) img.push_back(t.transitions[n][j]);
    if (sortedUnique(std::move(img)) != sets[n]) {
      fail(Errc::InvalidAtDepth,
           "closed complement does not close up at level " + std::to_string(n) +
               "; truncation depth too shallow");
    }
  }
  return ClosedSubtower{std::move(sets)};
}

TowerAlgebraResult towerFunctionAlgebra(const Tower& t, std::size_t level, PrimeField field) {
  validateTower(t);
  if (level > t.depth()) fail(Errc::LevelOutOfRange, "level " + std::to_string(level));
  FiniteAlgebra alg = functionAlgebra(field, t.levelSize(level), t.levels[level]);
  std::optional<AlgebraHom> transition;
  if (level < t.depth()) {
    FiniteAlgebra next = functionAlgebra(field, t.levelSize(level + 1), t.levels[level + 1]);
    FpMatrix mat(field, t.levelSize(level + 1), t.levelSize(level));
    for (std::size_t j = 0; j < t.levelSize(level + 1); ++j) {
      mat.set(j, t.transitions[level][j], 1);
    }
    transition = AlgebraHom(alg, next, std::move(mat), false);
  }
  return TowerAlgebraResult{std::move(alg), std::move(transition)};
}

namespace {

Vec pullbackOnce(const Tower& t, std::size_t n, const Vec& u) {
  Vec out(t.levelSize(n + 1));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = u[t.transitions[n][j]];
  return out;
}

}  // namespace

bool colimitElementEq(const Tower& t, PrimeField field, std::size_t m, const Vec& u,
                      std::size_t n, const Vec& v) {
  validateTower(t);
  (void)field;
  if (m > t.depth() || n > t.depth()) fail(Errc::LevelOutOfRange, "germ level out of range");
  if (u.size() != t.levelSize(m) || v.size() != t.levelSize(n)) {
    fail(Errc::BadInput, "function length does not match its level");
  }
  const std::size_t top = std::max(m, n);
  Vec uu = u, vv = v;
  for (std::size_t k = m; k < top; ++k) uu = pullbackOnce(t, k, uu);
  for (std::size_t k = n; k < top; ++k) vv = pullbackOnce(t, k, vv);
  return uu == vv;
}

ClopenIdempotent clopenToIdempotent(const Tower& t, const OpenCylinderFamily& fam,
                                    PrimeField field) {
  validateTower(t);
  if (fam.levelSets.size() != t.levels.size()) fail(Errc::BadInput, "depth mismatch");
  if (t.depth() == 0) {
    fail(Errc::NotClopenAtThisDepth, "depth 0 leaves no transition to stabilize against");
  }
  // smallest n whose slice generates all deeper slices by pullback
  std::vector<bool> exact(t.depth());  // exact[n]: A_{n+1} == tau^{-1}(A_n)
  for (std::size_t n = 0; n < t.depth(); ++n) {
    std::set<std::size_t> cur(fam.levelSets[n].begin(), fam.levelSets[n].end());
    std::vector<std::size_t> pre;
    for (std::size_t j = 0; j < t.levelSize(n + 1); ++j) {
      if (cur.count(t.transitions[n][j])) pre.push_back(j);
    }
    exact[n] = pre == fam.levelSets[n + 1];
  }
  std::size_t stable = t.depth();
  while (stable > 0 && exact[stable - 1]) --stable;
  if (stable > t.depth() - 1) {
    fail(Errc::NotClopenAtThisDepth, "family keeps growing through the last level");
  }
  Vec chi(t.levelSize(stable), 0);
  for (std::size_t idx : fam.levelSets[stable]) chi[idx] = 1;
  (void)field;
  return ClopenIdempotent{stable, std::move(chi)};
}

std::vector<std::size_t> pullbackLevelSet(const Tower& t, std::size_t n,
                                          const std::vector<std::size_t>& set, std::size_t m) {
  if (n > t.depth() || m > t.depth() || m < n) fail(Errc::LevelOutOfRange, "pullback levels");
  std::vector<std::size_t> cur = set;
  for (std::size_t k = n; k < m; ++k) {
    std::set<std::size_t> curSet(cur.begin(), cur.end());
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < t.levelSize(k + 1); ++j) {
      if (curSet.count(t.transitions[k][j])) next.push_back(j);
    }
    cur = std::move(next);
  }
  return cur;
}

AlgebraHom closedToQuotientAlgebra(const Tower& t, const ClosedSubtower& sub, std::size_t level,
                                   PrimeField field) {
  validateTower(t);
  if (level > t.depth()) fail(Errc::LevelOutOfRange, "level " + std::to_string(level));
  if (sub.levelSets.size() != t.levels.size()) fail(Errc::InvalidSubtower, "depth mismatch");

  const std::vector<std::size_t>& tn = sub.levelSets[level];
  FiniteAlgebra amb = functionAlgebra(field, t.levelSize(level), t.levels[level]);
  std::vector<std::string> subLabels;
  subLabels.reserve(tn.size());
  for (std::size_t idx : tn) subLabels.push_back(t.levels[level][idx]);
  FiniteAlgebra quot = functionAlgebra(field, tn.size(), subLabels);

  FpMatrix mat(field, tn.size(), t.levelSize(level));
  for (std::size_t i = 0; i < tn.size(); ++i) mat.set(i, tn[i], 1);
  AlgebraHom restriction(amb, quot, std::move(mat), false);
  if (!restriction.isSurjective()) {
    fail(Errc::InternalClosureFailure, "restriction map not surjective");
  }

  if (level < t.depth()) {
    // naturality against the ambient and restricted transition matrices
    const std::vector<std::size_t>& tn1 = sub.levelSets[level + 1];
    FpMatrix restrict1(field, tn1.size(), t.levelSize(level + 1));
    for (std::size_t i = 0; i < tn1.size(); ++i) restrict1.set(i, tn1[i], 1);

    FpMatrix ambTrans(field, t.levelSize(level + 1), t.levelSize(level));
    for (std::size_t j = 0; j < t.levelSize(level + 1); ++j) {
      ambTrans.set(j, t.transitions[level][j], 1);
    }

    // restricted transition: position of tau(j) inside T_level
    FpMatrix subTrans(field, tn1.size(), tn.size());
    for (std::size_t j = 0; j < tn1.size(); ++j) {
      const std::size_t img = t.transitions[level][tn1[j]];
      auto it = std::lower_bound(tn.begin(), tn.end(), img);
      if (it == tn.end() || *it != img) {
        fail(Errc::InvalidSubtower, "transition leaves the subtower");
      }
      subTrans.set(j, static_cast<std::size_t>(it - tn.begin()), 1);
    }

    if (subTrans.mul(restriction.matrix()) != restrict1.mul(ambTrans)) {
      fail(Errc::InternalClosureFailure, "restriction is not natural in the level");
    }
  }
  return restriction;
}

}  // namespace stone
