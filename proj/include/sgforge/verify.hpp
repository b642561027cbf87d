#pragma once

// Universally quantified checks run over every numerical semigroup up to a
// genus bound. Each registered check maps one semigroup to either nothing
// (holds) or a description of what failed.

#include "sgforge/classify.hpp"
#include "sgforge/semigroup.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgforge {

struct Counterexample {
  std::vector<int> generators;
  std::string detail;
  std::optional<ClassificationReport> report;  // absent if classify itself failed
};

struct VerificationOutcome {
  std::string theorem_id;
  std::string description;
  int genus_bound = 0;
  std::size_t tested = 0;  // semigroups checked, up to and including a counterexample
  bool pass = true;
  std::optional<Counterexample> first_counterexample;
};

struct TheoremCheck {
  std::string id;
  std::string description;
  std::function<std::optional<std::string>(const NumericalSemigroup&)> check;
};

const std::vector<TheoremCheck>& registered_checks();

/// Runs one check over genus <= g_max. jobs == 1 walks the tree serially and
/// stops at the first failure; other values shard subtrees and pick the
/// failure that comes first in DFS order, so the outcome is the same.
/// Throws UnknownTheorem.
VerificationOutcome verify(std::string_view theorem_id, int g_max, int jobs = 1);

/// Same walk for a check that is not in the registry.
VerificationOutcome run_verification(const TheoremCheck& check, int g_max, int jobs = 1);

std::vector<VerificationOutcome> verify_all(int g_max, int jobs = 1);

}  // namespace sgforge
