#pragma once

// Genus tree of numerical semigroups. The children of H are H ∖ {a} for the
// minimal generators a > F(H), by increasing a. Rooted at ℕ, the tree visits
// every numerical semigroup exactly once, at depth equal to its genus.
//
// Preorder DFS with children by increasing removed generator coincides with
// the lexicographic order of sorted gap lists (a prefix sorts first), which
// gives every node a total-order key usable across parallel shards.

#include "sgforge/semigroup.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace sgforge {

/// counts[g] = number of semigroups of genus g.
using GenusCounts = std::vector<std::size_t>;

std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& h);

/// Reference serial DFS. `visit` returns false to stop the walk early.
GenusCounts enumerate_by_genus_serial(int g_max,
                                      const std::function<bool(const NumericalSemigroup&)>& visit);

/// Parallel walk over subtrees with OpenMP. `visit` is called concurrently
/// from several threads, exactly once per semigroup, in no particular order.
/// `jobs` <= 0 means the OpenMP default.
GenusCounts enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& visit,
                               int jobs = 0);

/// All semigroups of genus <= g_max in DFS order.
std::vector<NumericalSemigroup> collect_by_genus(int g_max);

int default_jobs();

}  // namespace sgforge
