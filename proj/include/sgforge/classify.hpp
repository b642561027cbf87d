#pragma once

// Classification predicates of k[[H]] reduced to semigroup and relative-ideal
// computations. Where two independent routes exist for the same predicate,
// both are computed and compared; a mismatch raises InternalDisagreement.

#include "sgforge/ideal.hpp"
#include "sgforge/semigroup.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sgforge {

/// H = core ∪ {removed}, core symmetric with Frobenius number `removed`.
struct UesyCert {
  std::vector<int> core_generators;
  int removed = 0;
};

struct HypCert {
  bool low_multiplicity = false;    // e ≤ 2
  std::optional<int> shift;         // x with I = x + K ⊆ H, colength 2, I² = MI
  bool colength_two = false;
  bool square_eq_mi = false;        // I² = M + I at `shift`
  bool square_eq_m2 = false;        // I² = M + M at `shift`
  bool edim_three = false;
  std::optional<int> m2_shift;      // some x with x + K ⊆ H and I² = M + M
};

/// Both characterizations of endomorphism rings of one-dimensional
/// hypersurfaces: (type 2, colength 2, I² = MI) and (edim 3, I² = M²).
struct HypersurfaceForms {
  bool via_colength = false;
  bool via_square = false;
  HypCert cert;
};

struct QdWitness {
  int f = 0;   // Frobenius number of the symmetric core
  int a1 = 0;  // smallest core generator
  /// f + a_i − a_1 for i ≠ 1, then 2f − a_1; every entry lies in the core.
  std::vector<int> checked;
};

/// The five conditions of the self-dual maximal ideal theorem, each computed
/// on its own route.
struct TheoremAConditions {
  bool bg_at_most_one = false;      // symmetric subsemigroup of colength ≤ 1
  bool endo_of_gorenstein = false;  // symmetric or UESY
  bool max_self_dual = false;       // symmetric or M ≅ M†
  bool canonical_in_max = false;    // symmetric or x + K ⊆ M with colength 2
  bool canonical_colength_two = false;  // x + K ⊆ H with colength ≤ 2

  std::array<bool, 5> as_array() const {
    return {bg_at_most_one, endo_of_gorenstein, max_self_dual, canonical_in_max,
            canonical_colength_two};
  }
};

struct ClassificationReport {
  std::vector<int> generators;
  CoreInvariants core;
  bool symmetric = false;
  std::optional<UesyCert> uesy;
  bool self_dual_max = false;
  bool almost_symmetric = false;
  bool nearly_gorenstein = false;
  bool minimal_multiplicity = false;
  int canonical_index = 1;
  NumericalSemigroup endo_semigroup;
  int endo_type = 1;
  std::optional<HypCert> hypersurface_endo;
  std::optional<QdWitness> quasi_decomposable;
};

/// First minimal generator a > F(H), smallest first, with H ∖ {a} symmetric.
std::optional<UesyCert> is_uesy(const NumericalSemigroup& h);

/// Every UESY decomposition of H, by increasing removed generator.
std::vector<UesyCert> uesy_cores(const NumericalSemigroup& h);

bool max_ideal_self_dual(const NumericalSemigroup& h);

bool is_almost_symmetric(const NumericalSemigroup& h);

bool is_nearly_gorenstein(const NumericalSemigroup& h);

/// e = edim, cross-checked against M ≅ M − M.
bool minimal_multiplicity(const NumericalSemigroup& h);

/// H ∪ PF(H), the semigroup of m:m.
NumericalSemigroup endo_semigroup(const NumericalSemigroup& h);

/// (B symmetric, almost symmetric ∧ minimal multiplicity). Throws
/// PreconditionFailed for H = ℕ.
std::pair<bool, bool> check_gmp_endo(const NumericalSemigroup& h);

/// Throws PreconditionFailed unless H is UESY with core multiplicity > 2,
/// TheoremViolation if a membership check fails.
QdWitness quasi_decomposable_witness(const NumericalSemigroup& h);

HypersurfaceForms hypersurface_forms(const NumericalSemigroup& h);

/// Some iff the colength form holds. Throws InternalDisagreement when the
/// two forms differ.
std::optional<HypCert> hypersurface_endo_check(const NumericalSemigroup& h);

TheoremAConditions theorem_a_conditions(const NumericalSemigroup& h);

ClassificationReport classify(const NumericalSemigroup& h);

}  // namespace sgforge
