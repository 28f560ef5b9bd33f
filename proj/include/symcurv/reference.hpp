#pragma once

#include <string>
#include <vector>

#include "symcurv/curvature.hpp"

namespace symcurv {

struct RefCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

// Recomputes every reference value of the named builtin algebra
// ("aff1c" or "r40") and compares exactly. With perturb = true one
// expected constant is deliberately flipped, to exercise the mismatch
// path of callers.
std::vector<RefCheck> builtin_reference_checks(const std::string& name, bool perturb = false);

}  // namespace symcurv
