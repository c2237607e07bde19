#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace superenv {

/// One named exact identity and whether it held.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

} // namespace superenv
