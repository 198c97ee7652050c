#ifndef STONE_JSON_IO_HPP
#define STONE_JSON_IO_HPP

#include <json.hpp>

#include "stone/profinite.hpp"
#include "stone/sheafmod.hpp"

namespace stone {

using nlohmann::json;

// FiniteAlgebra: {"p","dim","one","mul","labels"?}, mul row-major nested
json algebraToJson(const FiniteAlgebra& a);
// re-validates all algebra laws
FiniteAlgebra algebraFromJson(const json& j, const Caps& caps = {});

json homToJson(const AlgebraHom& h);

// PearlResult: ambient content hash + pearl basis + inclusion matrix
json pearlResultToJson(const PearlResult& r);
// rebuilds against a provided ambient; checks the hash and re-validates
PearlResult pearlResultFromJson(const FiniteAlgebra& ambient, const json& j);

json piZeroToJson(const PiZeroResult& r);

json towerToJson(const Tower& t);
Tower towerFromJson(const json& j);

json levelSetsToJson(const std::vector<std::vector<std::size_t>>& sets);
std::vector<std::vector<std::size_t>> levelSetsFromJson(const json& j);

json setMapToJson(const SetMap& m);
SetMap setMapFromJson(const json& j);

json csModuleToJson(const CSModule& m);
CSModule csModuleFromJson(const json& j);

json sheafToJson(const SheafOnFiniteSet& f);

json matrixToJson(const FpMatrix& m);

}  // namespace stone

#endif
