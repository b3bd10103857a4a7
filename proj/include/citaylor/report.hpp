#pragma once

#include <optional>
#include <string>
#include <vector>

namespace citaylor {

/// Where an identity check first failed.
struct Witness {
  std::string condition;  // e.g. "(b) j=1"
  int degree = 0;         // homological degree of the module the check ran on
  std::string basis_element;
  std::string detail;
};

/// Outcome of one verification routine. `checks` counts the individual
/// identities evaluated so a vacuous pass is visible.
struct Report {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::optional<Witness> failure;
  std::vector<std::string> notes;

  void fail(Witness w) {
    if (passed) failure = std::move(w);
    passed = false;
  }
};

}  // namespace citaylor
