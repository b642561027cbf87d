#include "sgforge/classify.hpp"

#include "sgforge/error.hpp"
#include "sgforge/search.hpp"

#include <algorithm>

namespace sgforge {
namespace {

struct CanonicalTranslate {
  int shift;
  RelativeIdeal ideal;
  int colength;
};

// Translates x + K(H) contained in H, for x ∈ [0, 2c]. Beyond 2c the
// colength exceeds every bound used here, and the square condition pins x = e.
std::vector<CanonicalTranslate> canonical_translates(const NumericalSemigroup& h) {
  const RelativeIdeal k = canonical_ideal(h);
  const RelativeIdeal hs = semigroup_ideal(h);
  std::vector<CanonicalTranslate> out;
  for (int x = 0; x <= 2 * h.conductor(); ++x) {
    if (!h.contains(x)) continue;
    RelativeIdeal i = translate(k, x);
    if (!is_subset(i, hs)) continue;
    const int len = colength(h, i);
    out.push_back({x, std::move(i), len});
  }
  return out;
}

}  // namespace

std::vector<UesyCert> uesy_cores(const NumericalSemigroup& h) {
  std::vector<UesyCert> out;
  for (int a : h.min_generators()) {
    if (a <= h.frobenius()) continue;
    NumericalSemigroup core = h.without_generator(a);
    if (is_symmetric(core)) out.push_back({core.min_generators(), a});
  }
  return out;
}

std::optional<UesyCert> is_uesy(const NumericalSemigroup& h) {
  for (int a : h.min_generators()) {
    if (a <= h.frobenius()) continue;
    NumericalSemigroup core = h.without_generator(a);
    if (is_symmetric(core)) return UesyCert{core.min_generators(), a};
  }
  return std::nullopt;
}

bool max_ideal_self_dual(const NumericalSemigroup& h) {
  const bool via_uesy = is_uesy(h).has_value();
  const RelativeIdeal m = maximal_ideal(h);
  const bool via_dual = is_isomorphic(m, dual(h, m)).has_value();
  if (via_uesy != via_dual) {
    throw InternalDisagreement("self-duality of M for " + h.to_string() +
                               ": UESY route says " + (via_uesy ? "yes" : "no") +
                               ", duality route says " + (via_dual ? "yes" : "no"));
  }
  return via_dual;
}

bool is_almost_symmetric(const NumericalSemigroup& h) {
  if (h.is_full()) return true;
  const RelativeIdeal m = maximal_ideal(h);
  const RelativeIdeal b = quotient(semigroup_ideal(h), m);
  return is_isomorphic(dual(h, m), b).has_value();
}

bool is_nearly_gorenstein(const NumericalSemigroup& h) {
  return is_subset(maximal_ideal(h), trace_of_canonical(h));
}

bool minimal_multiplicity(const NumericalSemigroup& h) {
  const bool by_count = has_minimal_multiplicity(h);
  const RelativeIdeal m = maximal_ideal(h);
  const bool by_ideal = is_isomorphic(m, quotient(m, m)).has_value();
  if (by_count != by_ideal) {
    throw InternalDisagreement("minimal multiplicity of " + h.to_string() +
                               ": e = edim says " + (by_count ? "yes" : "no") +
                               ", M ≅ M−M says " + (by_ideal ? "yes" : "no"));
  }
  return by_count;
}

NumericalSemigroup endo_semigroup(const NumericalSemigroup& h) {
  if (h.is_full()) return h;
  const RelativeIdeal b = quotient(semigroup_ideal(h), maximal_ideal(h));
  boost::dynamic_bitset<> bits(static_cast<std::size_t>(b.tail()) + 1);
  for (int z = 0; z <= b.tail(); ++z) {
    if (b.contains(z)) bits.set(static_cast<std::size_t>(z));
  }
  return NumericalSemigroup::from_members(bits);
}

std::pair<bool, bool> check_gmp_endo(const NumericalSemigroup& h) {
  if (h.is_full()) throw PreconditionFailed("check_gmp_endo needs H ≠ ℕ");
  return {is_symmetric(endo_semigroup(h)), is_almost_symmetric(h) && minimal_multiplicity(h)};
}

QdWitness quasi_decomposable_witness(const NumericalSemigroup& h) {
  const auto cert = is_uesy(h);
  if (!cert) throw PreconditionFailed(h.to_string() + " is not UESY");
  const auto& gens = cert->core_generators;
  if (gens.front() <= 2) {
    throw PreconditionFailed("core of " + h.to_string() + " has multiplicity " +
                             std::to_string(gens.front()));
  }
  const NumericalSemigroup core = NumericalSemigroup::from_generators(gens);
  QdWitness w;
  w.f = cert->removed;
  w.a1 = gens.front();
  for (std::size_t i = 1; i < gens.size(); ++i) w.checked.push_back(w.f + gens[i] - w.a1);
  w.checked.push_back(2 * w.f - w.a1);
  for (int v : w.checked) {
    if (!core.contains(v)) {
      throw TheoremViolation("quasi-decomposability check " + std::to_string(v) + " ∉ " +
                             core.to_string());
    }
  }
  return w;
}

HypersurfaceForms hypersurface_forms(const NumericalSemigroup& h) {
  HypersurfaceForms out;
  HypCert& cert = out.cert;
  cert.low_multiplicity = h.multiplicity() <= 2;
  cert.edim_three = h.embedding_dimension() == 3;

  const RelativeIdeal m = maximal_ideal(h);
  const RelativeIdeal m2 = add(m, m);
  const bool type_two = type(h) == 2;
  bool found_colength = false;
  for (const auto& t : canonical_translates(h)) {
    const RelativeIdeal sq = add(t.ideal, t.ideal);
    const bool eq_m2 = sq == m2;
    if (eq_m2 && !cert.m2_shift) cert.m2_shift = t.shift;
    if (!found_colength && type_two && t.colength == 2 && sq == add(m, t.ideal)) {
      found_colength = true;
      cert.shift = t.shift;
      cert.colength_two = true;
      cert.square_eq_mi = true;
      cert.square_eq_m2 = eq_m2;
    }
  }
  out.via_colength = cert.low_multiplicity || found_colength;
  out.via_square = cert.low_multiplicity || (cert.edim_three && cert.m2_shift.has_value());
  return out;
}

std::optional<HypCert> hypersurface_endo_check(const NumericalSemigroup& h) {
  HypersurfaceForms forms = hypersurface_forms(h);
  if (forms.via_colength != forms.via_square) {
    throw InternalDisagreement("hypersurface endomorphism forms disagree for " + h.to_string());
  }
  if (!forms.via_colength) return std::nullopt;
  return forms.cert;
}

TheoremAConditions theorem_a_conditions(const NumericalSemigroup& h) {
  TheoremAConditions c;
  const bool sym = is_symmetric(h);
  c.bg_at_most_one = symmetric_subsemigroup_search(h, 1).has_value();
  c.endo_of_gorenstein = sym || is_uesy(h).has_value();
  const RelativeIdeal m = maximal_ideal(h);
  c.max_self_dual = sym || is_isomorphic(m, dual(h, m)).has_value();
  bool in_max = false;
  bool small = false;
  for (const auto& t : canonical_translates(h)) {
    if (t.colength <= 2) small = true;
    if (t.colength == 2 && !t.ideal.contains(0)) in_max = true;
  }
  c.canonical_in_max = sym || in_max;
  c.canonical_colength_two = small;
  return c;
}

ClassificationReport classify(const NumericalSemigroup& h) {
  ClassificationReport r;
  r.generators = h.min_generators();
  r.core = h.invariants();
  r.symmetric = is_symmetric(h);
  r.uesy = is_uesy(h);
  r.self_dual_max = max_ideal_self_dual(h);
  r.almost_symmetric = is_almost_symmetric(h);
  r.nearly_gorenstein = is_nearly_gorenstein(h);
  r.minimal_multiplicity = minimal_multiplicity(h);
  r.canonical_index = canonical_index(h);
  r.endo_semigroup = endo_semigroup(h);
  r.endo_type = type(r.endo_semigroup);
  r.hypersurface_endo = hypersurface_endo_check(h);
  try {
    r.quasi_decomposable = quasi_decomposable_witness(h);
  } catch (const PreconditionFailed&) {
    r.quasi_decomposable.reset();
  }
  return r;
}

}  // namespace sgforge
