#include "sgforge/search.hpp"

#include "sgforge/classify.hpp"

#include <algorithm>

namespace sgforge {
namespace {

// Depth-first generation of increasing removal sets of a fixed size. `addable`
// decides whether the next candidate may join the current prefix; `leaf`
// returns true to stop the search.
template <class Addable, class Leaf>
bool for_each_removal(const std::vector<int>& window, std::size_t size, std::vector<int>& chosen,
                      std::size_t start, Addable& addable, Leaf& leaf) {
  if (chosen.size() == size) return leaf(chosen);
  const std::size_t still_needed = size - chosen.size();
  for (std::size_t i = start; i + still_needed <= window.size(); ++i) {
    const int x = window[i];
    if (!addable(x)) continue;
    chosen.push_back(x);
    const bool stop = for_each_removal(window, size, chosen, i + 1, addable, leaf);
    chosen.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<SelfDualIdealHit> min_selfdual_ideal_colength(const NumericalSemigroup& h, int bound) {
  if (bound < 0) return std::nullopt;
  // A removed element x of a colength-c ideal satisfies x ≤ 2F + c + 1: all
  // y ∈ H with y ≤ x − F − 1 divide x in H and must be removed as well.
  const int limit = 2 * h.frobenius() + bound + 1;
  std::vector<int> window;
  for (int z = 0; z <= limit; ++z) {
    if (h.contains(z)) window.push_back(z);
  }
  const RelativeIdeal k = canonical_ideal(h);

  std::optional<SelfDualIdealHit> hit;
  for (int c = 0; c <= bound && !hit; ++c) {
    std::vector<int> chosen;
    auto is_removed = [&](int v) { return std::binary_search(chosen.begin(), chosen.end(), v); };
    // The complement of an ideal in H is closed under H-divisors. Divisors
    // of x are smaller than x, so they are decided before x is considered.
    auto addable = [&](int x) {
      for (int y = 0; y < x; ++y) {
        if (h.contains(y) && h.contains(x - y) && !is_removed(y)) return false;
      }
      return true;
    };
    auto leaf = [&](const std::vector<int>& d) {
      const int hi = std::max(h.conductor(), d.empty() ? 0 : d.back() + 1);
      RelativeIdeal e = RelativeIdeal::from_window(0, hi, [&](int z) {
        return h.contains(z) && !std::binary_search(d.begin(), d.end(), z);
      });
      if (auto shift = is_isomorphic(e, quotient(k, e))) {
        hit = SelfDualIdealHit{c, std::move(e), *shift, d};
        return true;
      }
      return false;
    };
    for_each_removal(window, static_cast<std::size_t>(c), chosen, 0, addable, leaf);
  }
  return hit;
}

std::optional<SubsemigroupHit> symmetric_subsemigroup_search(const NumericalSemigroup& h, int bound) {
  if (bound < 0) return std::nullopt;
  // Gaps of a numerical semigroup of genus g are at most 2g − 1.
  const int limit = 2 * (h.genus() + bound) - 1;
  std::vector<int> window;
  for (int z = 1; z <= limit; ++z) {
    if (h.contains(z)) window.push_back(z);
  }

  std::optional<SubsemigroupHit> hit;
  for (int c = 0; c <= bound && !hit; ++c) {
    std::vector<int> chosen;
    auto in_sub = [&](int v) {
      return h.contains(v) && !std::binary_search(chosen.begin(), chosen.end(), v);
    };
    // Every summand of x is below x, hence already decided.
    auto addable = [&](int x) {
      for (int a = 1; 2 * a <= x; ++a) {
        if (in_sub(a) && in_sub(x - a)) return false;
      }
      return true;
    };
    auto leaf = [&](const std::vector<int>& d) {
      const int frob = std::max(h.frobenius(), d.empty() ? -1 : d.back());
      if (2 * (h.genus() + c) != frob + 1) return false;
      boost::dynamic_bitset<> bits(static_cast<std::size_t>(frob) + 2);
      for (int z = 0; z <= frob + 1; ++z) {
        if (h.contains(z) && !std::binary_search(d.begin(), d.end(), z)) {
          bits.set(static_cast<std::size_t>(z));
        }
      }
      hit = SubsemigroupHit{c, NumericalSemigroup::from_members(bits), d};
      return true;
    };
    for_each_removal(window, static_cast<std::size_t>(c), chosen, 0, addable, leaf);
  }
  return hit;
}

const char* to_string(BgRoute route) {
  switch (route) {
    case BgRoute::kSymmetric:
      return "symmetric";
    case BgRoute::kSubsemigroup:
      return "symmetric-subsemigroup";
    case BgRoute::kSelfDualIdeal:
      return "self-dual-ideal";
    case BgRoute::kConductor:
      return "conductor-ideal";
  }
  return "?";
}

BgBounds bg_bounds(const NumericalSemigroup& h, std::optional<int> search_bound) {
  BgBounds out;
  if (is_symmetric(h)) {
    out.lower_reason = "symmetric";
    out.upper_cert = {BgRoute::kSymmetric, 0, h.min_generators(), {}, std::nullopt};
    return out;
  }
  if (auto cert = is_uesy(h)) {
    out.lower = out.upper = 1;
    out.lower_reason = "uesy and not symmetric";
    out.upper_cert = {BgRoute::kSubsemigroup, 1, cert->core_generators, {cert->removed}, std::nullopt};
    return out;
  }

  out.lower = 2;
  out.lower_reason = "neither symmetric nor uesy";
  const int n_of_h = h.conductor() - h.genus();
  const int bound = std::min(search_bound.value_or(n_of_h), n_of_h);

  // The conductor ideal [c, ∞) is a translate of ℕ, hence self-dual.
  std::vector<int> below_conductor = h.small_elements();
  out.upper = n_of_h;
  out.upper_cert = {BgRoute::kConductor, n_of_h, {}, below_conductor, -h.conductor()};

  const auto sd = min_selfdual_ideal_colength(h, bound);
  if (sd && sd->colength <= out.upper) {
    out.upper = sd->colength;
    out.upper_cert = {BgRoute::kSelfDualIdeal, sd->colength, {}, sd->removed, sd->shift};
  }
  if (!sd || sd->colength > 2) {
    out.conditional_lower = 3;
    out.lower_reason += "; no monomial self-dual ideal of colength <= 2 (conditional 3)";
  }
  if (const auto sub = symmetric_subsemigroup_search(h, std::min(bound, out.upper - 1))) {
    out.upper = sub->colength;
    out.upper_cert = {BgRoute::kSubsemigroup, sub->colength, sub->sub.min_generators(), sub->removed,
                      std::nullopt};
  }
  if (out.conditional_lower && *out.conditional_lower > out.upper) out.conditional_lower.reset();
  return out;
}

SurveyRow survey_questions(const NumericalSemigroup& h) {
  SurveyRow row;
  row.generators = h.min_generators();
  row.trace_colength = colength(h, trace_of_canonical(h));
  const int n_of_h = h.conductor() - h.genus();
  const auto sd = min_selfdual_ideal_colength(h, n_of_h);
  row.sd_min = sd ? sd->colength : n_of_h;
  row.bg = bg_bounds(h);
  row.trace_exceeds_sd = row.trace_colength > row.sd_min;
  row.trace_exceeds_bg = row.trace_colength > row.bg.upper;
  row.sd_exceeds_bg = row.sd_min > row.bg.upper;
  return row;
}

}  // namespace sgforge
