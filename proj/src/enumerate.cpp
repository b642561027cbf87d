#include "sgforge/enumerate.hpp"

#include "sgforge/error.hpp"

#include <omp.h>

#include <algorithm>

namespace sgforge {
namespace {

bool dfs(const NumericalSemigroup& h, int g_max, GenusCounts& counts,
         const std::function<bool(const NumericalSemigroup&)>& visit) {
  ++counts[static_cast<std::size_t>(h.genus())];
  if (!visit(h)) return false;
  if (h.genus() == g_max) return true;
  for (const auto& child : genus_tree_children(h)) {
    if (!dfs(child, g_max, counts, visit)) return false;
  }
  return true;
}

void check_genus(int g_max) {
  if (g_max < 0) throw InvalidArgument("genus bound must be >= 0");
}

}  // namespace

std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& h) {
  std::vector<NumericalSemigroup> out;
  for (int a : h.min_generators()) {
    if (a > h.frobenius()) out.push_back(h.without_generator(a));
  }
  return out;
}

GenusCounts enumerate_by_genus_serial(int g_max,
                                      const std::function<bool(const NumericalSemigroup&)>& visit) {
  check_genus(g_max);
  GenusCounts counts(static_cast<std::size_t>(g_max) + 1, 0);
  dfs(NumericalSemigroup(), g_max, counts, visit);
  return counts;
}

GenusCounts enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& visit,
                               int jobs) {
  check_genus(g_max);
  const int threads = jobs > 0 ? jobs : default_jobs();

  // Expand layers until there are enough subtrees to balance the workers.
  std::vector<NumericalSemigroup> upper;
  std::vector<NumericalSemigroup> frontier{NumericalSemigroup()};
  const std::size_t wanted = static_cast<std::size_t>(threads) * 16;
  while (frontier.size() < wanted && frontier.front().genus() < g_max) {
    std::vector<NumericalSemigroup> next;
    for (const auto& h : frontier) {
      for (auto& c : genus_tree_children(h)) next.push_back(std::move(c));
    }
    upper.insert(upper.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  const std::size_t slots = static_cast<std::size_t>(g_max) + 1;
  GenusCounts total(slots, 0);
  for (const auto& h : upper) {
    ++total[static_cast<std::size_t>(h.genus())];
    visit(h);
  }

  const auto n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel num_threads(threads)
  {
    GenusCounts local(slots, 0);
    auto walk = [&](const NumericalSemigroup& h) {
      visit(h);
      return true;
    };
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      dfs(frontier[static_cast<std::size_t>(i)], g_max, local, walk);
    }
#pragma omp critical(sgforge_enumerate_counts)
    for (std::size_t g = 0; g < slots; ++g) total[g] += local[g];
  }
  return total;
}

std::vector<NumericalSemigroup> collect_by_genus(int g_max) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus_serial(g_max, [&](const NumericalSemigroup& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

int default_jobs() { return std::max(1, omp_get_max_threads()); }

}  // namespace sgforge
