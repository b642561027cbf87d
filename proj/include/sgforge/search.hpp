#pragma once

// Bounded exhaustive searches over one semigroup: monomial self-dual ideals
// of small colength, symmetric subsemigroups of small colength, and the
// resulting interval for the birational Gorenstein colength bg(k[[H]]).
//
// Candidates are removal sets visited in lexicographic order; the first
// certificate found at the smallest colength wins.

#include "sgforge/ideal.hpp"
#include "sgforge/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgforge {

struct SelfDualIdealHit {
  int colength = 0;
  RelativeIdeal ideal;       // E ⊆ H
  int shift = 0;             // E† = E + shift
  std::vector<int> removed;  // H ∖ E, increasing
};

struct SubsemigroupHit {
  int colength = 0;
  NumericalSemigroup sub;    // symmetric, S ⊆ H
  std::vector<int> removed;  // H ∖ S, increasing
};

/// Smallest c ≤ bound with a self-dual monomial ideal E ⊆ H of colength c.
std::optional<SelfDualIdealHit> min_selfdual_ideal_colength(const NumericalSemigroup& h, int bound);

/// Smallest c ≤ bound with a symmetric numerical semigroup S ⊆ H, #(H ∖ S) = c.
std::optional<SubsemigroupHit> symmetric_subsemigroup_search(const NumericalSemigroup& h, int bound);

enum class BgRoute { kSymmetric, kSubsemigroup, kSelfDualIdeal, kConductor };

const char* to_string(BgRoute route);

struct BgUpperCert {
  BgRoute route = BgRoute::kSymmetric;
  int colength = 0;
  std::vector<int> subsemigroup_generators;  // kSymmetric, kSubsemigroup
  std::vector<int> removed;                  // removed elements of H
  std::optional<int> shift;                  // kSelfDualIdeal, kConductor
};

struct BgBounds {
  int lower = 0;
  int upper = 0;
  std::string lower_reason;
  /// 3 when no monomial self-dual ideal of colength ≤ 2 exists. Only a
  /// non-monomial self-dual ideal could still give bg = 2.
  std::optional<int> conditional_lower;
  BgUpperCert upper_cert;
};

/// `search_bound` caps the colength explored by both searches; the default
/// is #(H ∩ [0, c)), where the conductor ideal always certifies.
BgBounds bg_bounds(const NumericalSemigroup& h, std::optional<int> search_bound = std::nullopt);

struct SurveyRow {
  std::vector<int> generators;
  int trace_colength = 0;  // ℓ(R / tr ω)
  int sd_min = 0;          // least colength of a monomial self-dual ideal
  BgBounds bg;
  bool trace_exceeds_sd = false;
  bool trace_exceeds_bg = false;
  bool sd_exceeds_bg = false;

  bool violation() const { return trace_exceeds_sd || trace_exceeds_bg || sd_exceeds_bg; }
};

SurveyRow survey_questions(const NumericalSemigroup& h);

}  // namespace sgforge
