#ifndef STONE_DOT_IO_HPP
#define STONE_DOT_IO_HPP

#include <string>

#include "stone/profinite.hpp"
#include "stone/spectrum.hpp"

namespace stone {

/// Component partition of Spec(A) as labeled nodes.
std::string dotPiZero(const PiZeroResult& r);

/// Bipartite source/target rendering of a set map.
std::string dotSetMap(const SetMap& m);

/// Layered tree of a tower (edges follow the transitions downward).
std::string dotTower(const Tower& t);

}  // namespace stone

#endif
