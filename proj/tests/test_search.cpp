#include "sgforge/enumerate.hpp"
#include "sgforge/search.hpp"

#include <gtest/gtest.h>

using sgforge::NumericalSemigroup;

namespace {

NumericalSemigroup ns(std::initializer_list<int> gens) { return NumericalSemigroup::from_generators(gens); }

struct Expected {
  std::vector<int> gens;
  int sd_colength;
  std::vector<int> sd_removed;
  int sd_shift;
  int sub_colength;
  std::vector<int> sub_removed;
};

TEST(Search, KnownMinima) {
  const std::vector<Expected> table = {
      {{4, 5, 7}, 2, {0, 4}, -5, 2, {4, 11}},
      {{3, 4, 5}, 1, {0}, -3, 1, {5}},
      {{5, 6, 7}, 2, {0, 5}, -6, 2, {5, 15}},
      {{4, 5, 11}, 1, {0}, -4, 1, {11}},
      {{3, 10, 11}, 3, {0, 3, 6}, -9, 3, {3, 6, 17}},
  };
  for (const auto& row : table) {
    const auto h = NumericalSemigroup::from_generators(row.gens);
    const auto sd = sgforge::min_selfdual_ideal_colength(h, 5);
    ASSERT_TRUE(sd.has_value()) << h.to_string();
    EXPECT_EQ(sd->colength, row.sd_colength) << h.to_string();
    EXPECT_EQ(sd->removed, row.sd_removed) << h.to_string();
    EXPECT_EQ(sd->shift, row.sd_shift) << h.to_string();
    const auto sub = sgforge::symmetric_subsemigroup_search(h, 5);
    ASSERT_TRUE(sub.has_value()) << h.to_string();
    EXPECT_EQ(sub->colength, row.sub_colength) << h.to_string();
    EXPECT_EQ(sub->removed, row.sub_removed) << h.to_string();
    EXPECT_TRUE(sgforge::is_symmetric(sub->sub));
  }
  const auto sub = sgforge::symmetric_subsemigroup_search(ns({4, 5, 7}), 2);
  EXPECT_EQ(sub->sub, ns({5, 7, 8, 9}));
  EXPECT_EQ(sub->sub.genus(), 6);
}

TEST(Search, SymmetricNeedsNothing) {
  const auto h = ns({3, 4});
  EXPECT_EQ(sgforge::min_selfdual_ideal_colength(h, 0)->colength, 0);
  EXPECT_EQ(sgforge::symmetric_subsemigroup_search(h, 0)->colength, 0);
  EXPECT_FALSE(sgforge::min_selfdual_ideal_colength(ns({4, 5, 7}), 1).has_value());
  EXPECT_FALSE(sgforge::symmetric_subsemigroup_search(ns({3, 10, 11}), 2).has_value());
}

TEST(Search, SelfDualIdealReachingPastColengthPlusFrobenius) {
  // H ∖ {0, 13} is a self-dual ideal of colength 2 in <6,10,11,13,14,15>,
  // and 13 > colength + F + 1 = 12. The removal window has to reach this far.
  const auto h = ns({6, 10, 11, 13, 14, 15});
  const auto e =
      sgforge::RelativeIdeal::from_window(0, 30, [&](int z) { return h.contains(z) && z != 0 && z != 13; });
  EXPECT_EQ(sgforge::colength(h, e), 2);
  EXPECT_TRUE(sgforge::is_isomorphic(e, sgforge::dual(h, e)).has_value());
  const auto sd = sgforge::min_selfdual_ideal_colength(h, 2);
  ASSERT_TRUE(sd.has_value());
  EXPECT_EQ(sgforge::translate(sd->ideal, sd->shift), sgforge::dual(h, sd->ideal));
}

TEST(BgBounds, Examples) {
  auto b = sgforge::bg_bounds(ns({3, 4}));
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 0);
  EXPECT_EQ(b.upper_cert.route, sgforge::BgRoute::kSymmetric);

  b = sgforge::bg_bounds(ns({3, 4, 5}));
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 1);
  EXPECT_EQ(b.upper_cert.subsemigroup_generators, (std::vector<int>{3, 4}));

  b = sgforge::bg_bounds(ns({4, 5, 7}));
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 2);
  EXPECT_FALSE(b.conditional_lower.has_value());

  b = sgforge::bg_bounds(ns({3, 10, 11}));
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 3);
  EXPECT_EQ(b.conditional_lower, 3);
  EXPECT_EQ(b.upper_cert.route, sgforge::BgRoute::kSelfDualIdeal);

  // With no search budget only the conductor ideal certifies.
  b = sgforge::bg_bounds(ns({4, 5, 7}), 0);
  EXPECT_EQ(b.upper, 3);
  EXPECT_EQ(b.upper_cert.route, sgforge::BgRoute::kConductor);
  EXPECT_EQ(b.upper_cert.shift, -7);
}

// Independent check of the search windows: every removal set of size <= 2
// drawn from a much wider range than the searches use.
bool is_ideal_after_removal(const NumericalSemigroup& h, const std::vector<int>& removed) {
  auto in_e = [&](int z) {
    return h.contains(z) && std::find(removed.begin(), removed.end(), z) == removed.end();
  };
  for (int x : removed) {
    for (int y = 0; y < x; ++y) {
      if (in_e(y) && h.contains(x - y)) return false;
    }
  }
  return true;
}

sgforge::RelativeIdeal ideal_without(const NumericalSemigroup& h, const std::vector<int>& removed) {
  const int hi = *std::max_element(removed.begin(), removed.end()) + h.conductor() + 1;
  return sgforge::RelativeIdeal::from_window(0, hi, [&](int z) {
    return h.contains(z) && std::find(removed.begin(), removed.end(), z) == removed.end();
  });
}

int wide_selfdual_min(const NumericalSemigroup& h) {
  const auto self_dual = [&](const sgforge::RelativeIdeal& e) {
    return sgforge::is_isomorphic(e, sgforge::dual(h, e)).has_value();
  };
  if (self_dual(sgforge::semigroup_ideal(h))) return 0;
  const int w = 4 * h.conductor() + 12;
  for (int x = 0; x <= w; ++x) {
    if (h.contains(x) && is_ideal_after_removal(h, {x}) && self_dual(ideal_without(h, {x}))) return 1;
  }
  for (int x = 0; x <= w; ++x) {
    for (int y = x + 1; y <= w; ++y) {
      if (!h.contains(x) || !h.contains(y) || !is_ideal_after_removal(h, {x, y})) continue;
      if (self_dual(ideal_without(h, {x, y}))) return 2;
    }
  }
  return 3;
}

int wide_subsemigroup_min(const NumericalSemigroup& h) {
  if (sgforge::is_symmetric(h)) return 0;
  const int w = 4 * h.conductor() + 12;
  auto symmetric_without = [&](std::vector<int> removed) {
    boost::dynamic_bitset<> bits(static_cast<std::size_t>(w + 1));
    for (int z = 0; z <= w; ++z) {
      const bool in = h.contains(z) && std::find(removed.begin(), removed.end(), z) == removed.end();
      bits[static_cast<std::size_t>(z)] = in;
    }
    for (int a = 1; a <= w; ++a) {
      for (int b = a; a + b <= w; ++b) {
        if (bits[static_cast<std::size_t>(a)] && bits[static_cast<std::size_t>(b)] &&
            !bits[static_cast<std::size_t>(a + b)]) {
          return false;
        }
      }
    }
    return sgforge::is_symmetric(NumericalSemigroup::from_members(bits));
  };
  for (int x = 1; x <= w; ++x) {
    if (h.contains(x) && symmetric_without({x})) return 1;
  }
  for (int x = 1; x <= w; ++x) {
    for (int y = x + 1; y <= w; ++y) {
      if (h.contains(x) && h.contains(y) && symmetric_without({x, y})) return 2;
    }
  }
  return 3;
}

TEST(SearchOracle, WideWindowAgreesUpToGenusSix) {
  sgforge::enumerate_by_genus_serial(6, [&](const NumericalSemigroup& h) {
    const auto sd = sgforge::min_selfdual_ideal_colength(h, 2);
    EXPECT_EQ(sd ? sd->colength : 3, wide_selfdual_min(h)) << h.to_string();
    const auto sub = sgforge::symmetric_subsemigroup_search(h, 2);
    EXPECT_EQ(sub ? sub->colength : 3, wide_subsemigroup_min(h)) << h.to_string();
    return true;
  });
}

TEST(Survey, Rows) {
  const auto row = sgforge::survey_questions(ns({5, 6, 7}));
  EXPECT_EQ(row.trace_colength, 1);
  EXPECT_EQ(row.sd_min, 2);
  EXPECT_EQ(row.bg.upper, 2);
  EXPECT_FALSE(row.violation());
  const auto sym = sgforge::survey_questions(ns({3, 4}));
  EXPECT_EQ(sym.trace_colength, 0);
  EXPECT_EQ(sym.sd_min, 0);
}

TEST(Survey, FlagsTraceAboveSelfDualMinimum) {
  // Smallest genus (13) where the trace colength exceeds both the least
  // self-dual colength and bg, which is pinned to exactly 2 here.
  const auto row = sgforge::survey_questions(ns({10, 11, 12, 13, 14, 17}));
  EXPECT_EQ(row.trace_colength, 3);
  EXPECT_EQ(row.sd_min, 2);
  EXPECT_EQ(row.bg.lower, 2);
  EXPECT_EQ(row.bg.upper, 2);
  EXPECT_TRUE(row.trace_exceeds_sd);
  EXPECT_TRUE(row.trace_exceeds_bg);
  EXPECT_FALSE(row.sd_exceeds_bg);
  EXPECT_TRUE(row.violation());

  std::size_t flagged = 0;
  sgforge::enumerate_by_genus_serial(12, [&](const NumericalSemigroup& h) {
    flagged += sgforge::survey_questions(h).violation() ? 1 : 0;
    return true;
  });
  EXPECT_EQ(flagged, 0u);
}

}  // namespace
