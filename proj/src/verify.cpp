#include "sgforge/verify.hpp"

#include "sgforge/enumerate.hpp"
#include "sgforge/error.hpp"
#include "sgforge/ideal.hpp"
#include "sgforge/search.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace sgforge {
namespace {

using Result = std::optional<std::string>;

std::string flags(std::initializer_list<bool> values) {
  std::string s;
  for (bool v : values) s += v ? '1' : '0';
  return s;
}

Result five_conditions(const NumericalSemigroup& h) {
  const auto c = theorem_a_conditions(h).as_array();
  if (std::all_of(c.begin(), c.end(), [&](bool v) { return v == c[0]; })) return std::nullopt;
  return "conditions (bg<=1, endo, self-dual, canonical-in-max, canonical-colength<=2) = " +
         flags({c[0], c[1], c[2], c[3], c[4]});
}

Result min_mult_almost(const NumericalSemigroup& h) {
  const bool sym = is_symmetric(h);
  const bool uesy = is_uesy(h).has_value();
  const bool sd = max_ideal_self_dual(h);
  const bool almost = is_almost_symmetric(h);
  const bool mm = minimal_multiplicity(h);
  const int rho = canonical_index(h);
  const int e = h.multiplicity();
  bool endo_low = false;
  for (const auto& core : uesy_cores(h)) {
    const auto s = NumericalSemigroup::from_generators(core.core_generators);
    if (s.multiplicity() <= s.embedding_dimension() + 1) endo_low = true;
  }
  const bool c1 = (sym || uesy) && mm;
  const bool c2 = e <= 2 || (almost && uesy && !sym);
  const bool c3 = sd && almost;
  const bool c4 = sd && mm;
  const bool c5 = almost && mm;
  const bool c6 = endo_low;
  const bool c7 = sd && rho <= 2;
  const bool all_equal = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6 && c6 == c7;
  if (!all_equal) {
    return "conditions (1)..(7) = " + flags({c1, c2, c3, c4, c5, c6, c7});
  }
  // Constructive direction: End of the maximal ideal of a symmetric S with
  // e(S) <= edim(S) + 1 is self-dual with minimal multiplicity.
  if (sym && !h.is_full() && e <= h.embedding_dimension() + 1) {
    const NumericalSemigroup r = unitary_extension(h);
    if (!(max_ideal_self_dual(r) && minimal_multiplicity(r))) {
      return "unitary extension " + r.to_string() + " lacks self-dual M or minimal multiplicity";
    }
  }
  return std::nullopt;
}

Result selfdual_ideal_colength_two(const NumericalSemigroup& h) {
  const bool ideal_route = min_selfdual_ideal_colength(h, 2).has_value();
  const BgBounds bg = bg_bounds(h, 2);
  if (bg.lower > bg.upper) {
    return "bg interval empty: [" + std::to_string(bg.lower) + ", " + std::to_string(bg.upper) + "]";
  }
  if (ideal_route != (bg.upper <= 2)) {
    return std::string("self-dual ideal of colength <= 2: ") + (ideal_route ? "yes" : "no") +
           ", bg upper = " + std::to_string(bg.upper);
  }
  return std::nullopt;
}

Result nearly_endo_type(const NumericalSemigroup& h) {
  if (h.is_full()) return std::nullopt;
  if (!is_nearly_gorenstein(h)) return std::nullopt;
  const int t = type(endo_semigroup(h));
  const bool almost = is_almost_symmetric(h);
  const bool sd = max_ideal_self_dual(h);
  if (t == 2 && !(almost && !sd)) {
    return "endo type 2, nearly Gorenstein, almost=" + flags({almost}) + " self-dual=" + flags({sd});
  }
  if (t == 3 && !(almost || sd)) return "endo type 3, nearly Gorenstein, neither almost nor self-dual";
  return std::nullopt;
}

Result endo_gorenstein(const NumericalSemigroup& h) {
  if (h.is_full()) return std::nullopt;
  const auto [b_symmetric, almost_and_mm] = check_gmp_endo(h);
  if (b_symmetric == almost_and_mm) return std::nullopt;
  return "B symmetric=" + flags({b_symmetric}) + ", almost and min mult=" + flags({almost_and_mm});
}

Result nearly_low_multiplicity(const NumericalSemigroup& h) {
  if (h.multiplicity() > 4 || !is_nearly_gorenstein(h)) return std::nullopt;
  if (is_almost_symmetric(h) || max_ideal_self_dual(h)) return std::nullopt;
  return "e <= 4 and nearly Gorenstein, but neither almost symmetric nor self-dual M";
}

Result endo_colength_is_type(const NumericalSemigroup& h) {
  if (h.is_full()) return std::nullopt;
  const RelativeIdeal hs = semigroup_ideal(h);
  const RelativeIdeal m = maximal_ideal(h);
  const RelativeIdeal b = quotient(hs, m);
  int extra = 0;
  for (int z = b.min_elt(); z < h.conductor(); ++z) {
    if (b.contains(z) && !h.contains(z)) ++extra;
  }
  if (extra != type(h)) {
    return "#(B \\ H) = " + std::to_string(extra) + " but type = " + std::to_string(type(h));
  }
  if (!(quotient(m, m) == b)) return "M − M differs from H − M";
  std::vector<int> pf = pseudo_frobenius(h);
  const NumericalSemigroup endo = endo_semigroup(h);
  for (int z = 0; z <= h.conductor(); ++z) {
    const bool expected = h.contains(z) || std::binary_search(pf.begin(), pf.end(), z);
    if (endo.contains(z) != expected) return "endo semigroup differs from H ∪ PF(H) at " + std::to_string(z);
  }
  return std::nullopt;
}

Result selfdual_nearly(const NumericalSemigroup& h) {
  if (max_ideal_self_dual(h) && !is_nearly_gorenstein(h)) return "self-dual M but not nearly Gorenstein";
  return std::nullopt;
}

Result uesy_quasi_decomposable(const NumericalSemigroup& h) {
  const auto cert = is_uesy(h);
  if (!cert || cert->core_generators.front() <= 2) return std::nullopt;
  quasi_decomposable_witness(h);  // TheoremViolation propagates as a failure
  return std::nullopt;
}

Result hypersurface_endo(const NumericalSemigroup& h) {
  const HypersurfaceForms forms = hypersurface_forms(h);
  if (forms.via_colength == forms.via_square) return std::nullopt;
  return std::string("colength form ") + (forms.via_colength ? "holds" : "fails") + ", square form " +
         (forms.via_square ? "holds" : "fails");
}

std::vector<TheoremCheck> build_registry() {
  return {
      {"selfdual-max",
       "bg<=1, End of a Gorenstein maximal ideal, M self-dual, 0->K->M->k->0, and a canonical "
       "ideal of colength <= 2 are equivalent",
       five_conditions},
      {"min-mult-almost",
       "the seven minimal-multiplicity / almost-symmetric / self-dual conditions are equivalent, "
       "and unitary extensions of symmetric S with e(S) <= edim(S)+1 are self-dual with minimal "
       "multiplicity",
       min_mult_almost},
      {"selfdual-ideal-colength-two",
       "monomial self-dual ideal of colength <= 2 exists iff the certified bg upper bound is <= 2 "
       "(checked on monomial ideals and monomial subsemigroups only)",
       selfdual_ideal_colength_two},
      {"nearly-endo-type",
       "nearly Gorenstein with type(B)=2 implies almost symmetric and M not self-dual; with "
       "type(B)=3 implies almost symmetric or M self-dual",
       nearly_endo_type},
      {"endo-gorenstein", "B = H ∪ PF(H) symmetric iff almost symmetric with minimal multiplicity",
       endo_gorenstein},
      {"nearly-low-mult", "nearly Gorenstein with e <= 4 implies almost symmetric or M self-dual",
       nearly_low_multiplicity},
      {"endo-colength-type", "#((H − M) ∖ H) = type(H), M − M = H − M, and H − M = H ∪ PF(H)",
       endo_colength_is_type},
      {"selfdual-nearly", "M self-dual implies nearly Gorenstein", selfdual_nearly},
      {"uesy-quasi-decomposable",
       "for UESY H with core multiplicity > 2, f + a_i − a_1 and 2f − a_1 lie in the core",
       uesy_quasi_decomposable},
      {"hypersurface-endo",
       "(type 2, canonical I with colength 2 and I² = MI) iff (edim 3, canonical I with I² = M²), "
       "or e <= 2",
       hypersurface_endo},
  };
}

Result run_check(const TheoremCheck& check, const NumericalSemigroup& h) {
  try {
    return check.check(h);
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

Counterexample make_counterexample(const NumericalSemigroup& h, std::string detail) {
  Counterexample cex{h.min_generators(), std::move(detail), std::nullopt};
  try {
    cex.report = classify(h);
  } catch (const Error& e) {
    cex.detail += std::string("; classify failed: ") + e.what();
  }
  return cex;
}

}  // namespace

const std::vector<TheoremCheck>& registered_checks() {
  static const std::vector<TheoremCheck> registry = build_registry();
  return registry;
}

VerificationOutcome verify(std::string_view theorem_id, int g_max, int jobs) {
  const auto& checks = registered_checks();
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const TheoremCheck& c) { return c.id == theorem_id; });
  if (it == checks.end()) throw UnknownTheorem("unknown theorem id '" + std::string(theorem_id) + "'");
  return run_verification(*it, g_max, jobs);
}

VerificationOutcome run_verification(const TheoremCheck& check, int g_max, int jobs) {
  VerificationOutcome out;
  out.theorem_id = check.id;
  out.description = check.description;
  out.genus_bound = g_max;

  if (jobs == 1) {
    std::size_t tested = 0;
    enumerate_by_genus_serial(g_max, [&](const NumericalSemigroup& h) {
      ++tested;
      if (auto failure = run_check(check, h)) {
        out.pass = false;
        out.first_counterexample = make_counterexample(h, std::move(*failure));
        return false;
      }
      return true;
    });
    out.tested = tested;
    return out;
  }

  std::mutex mu;
  std::optional<std::vector<int>> best_key;
  std::optional<NumericalSemigroup> best;
  std::string best_detail;
  const GenusCounts counts = enumerate_by_genus(
      g_max,
      [&](const NumericalSemigroup& h) {
        if (auto failure = run_check(check, h)) {
          std::vector<int> key = h.gaps();
          std::lock_guard lock(mu);
          if (!best_key || key < *best_key) {
            best_key = std::move(key);
            best = h;
            best_detail = std::move(*failure);
          }
        }
      },
      jobs);

  if (!best) {
    for (std::size_t c : counts) out.tested += c;
    return out;
  }
  // Recount in DFS order so `tested` matches the serial walk.
  std::size_t tested = 0;
  enumerate_by_genus_serial(g_max, [&](const NumericalSemigroup& h) {
    ++tested;
    return h.gaps() != *best_key;
  });
  out.tested = tested;
  out.pass = false;
  out.first_counterexample = make_counterexample(*best, std::move(best_detail));
  return out;
}

std::vector<VerificationOutcome> verify_all(int g_max, int jobs) {
  std::vector<VerificationOutcome> out;
  for (const auto& check : registered_checks()) out.push_back(verify(check.id, g_max, jobs));
  return out;
}

}  // namespace sgforge
