#ifndef STONE_TOOLS_CHECK_SUITES_HPP
#define STONE_TOOLS_CHECK_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stone/algebra.hpp"

namespace stone::suites {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure description or case count
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool allPassed() const {
    for (const PropertyResult& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

std::vector<std::string> suiteNames();

/// Runs one named randomized suite ("all" fans out to every suite).
std::vector<SuiteResult> runSuites(const std::string& name, std::uint64_t seed,
                                   const Caps& caps);

}  // namespace stone::suites

#endif
