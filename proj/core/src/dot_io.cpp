#include "stone/dot_io.hpp"

#include <sstream>

namespace stone {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dotPiZero(const PiZeroResult& r) {
  std::ostringstream os;
  os << "graph pi0 {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    os << "  comp" << i << " [label=" << quoted("e" + std::to_string(i) + " : dim " +
                                                std::to_string(r.factors[i].dim()))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dotSetMap(const SetMap& m) {
  std::ostringstream os;
  os << "digraph setmap {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    os << "  s" << i << " [label=" << quoted(m.source.elements[i]) << "];\n";
  }
  for (std::size_t i = 0; i < m.target.size(); ++i) {
    os << "  t" << i << " [label=" << quoted(m.target.elements[i]) << "];\n";
  }
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    os << "  s" << i << " -> t" << m.assignment[i] << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dotTower(const Tower& t) {
  std::ostringstream os;
  os << "digraph tower {\n  rankdir=BT;\n";
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    for (std::size_t i = 0; i < t.levelSize(n); ++i) {
      const std::string& lbl = t.levels[n][i];
      os << "  n" << n << "_" << i << " [label=" << quoted(lbl.empty() ? "<root>" : lbl)
         << "];\n";
    }
  }
  for (std::size_t n = 0; n < t.depth(); ++n) {
    for (std::size_t j = 0; j < t.levelSize(n + 1); ++j) {
      os << "  n" << n + 1 << "_" << j << " -> n" << n << "_" << t.transitions[n][j] << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace stone
