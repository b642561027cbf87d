#include "sgforge/ideal.hpp"

#include "sgforge/error.hpp"

#include <algorithm>
#include <sstream>

namespace sgforge {

std::vector<int> RelativeIdeal::elements_below_tail() const {
  std::vector<int> out;
  for (int z = min_; z < tail_; ++z) {
    if (bits_.test(static_cast<std::size_t>(z - min_))) out.push_back(z);
  }
  return out;
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  auto below = elements_below_tail();
  if (!below.empty()) {
    os << '{';
    for (std::size_t i = 0; i < below.size(); ++i) {
      if (i) os << ',';
      os << below[i];
    }
    os << "} ∪ ";
  }
  os << "{≥" << tail_ << '}';
  return os.str();
}

RelativeIdeal ideal_from_generators(const NumericalSemigroup& h, std::span<const int> gens) {
  if (gens.empty()) throw InvalidArgument("ideal needs at least one generator");
  auto [lo_it, hi_it] = std::minmax_element(gens.begin(), gens.end());
  const int lo = *lo_it;
  const int hi = *hi_it + h.conductor();
  return RelativeIdeal::from_window(lo, hi, [&](int z) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return h.contains(z - g); });
  });
}

RelativeIdeal ideal_from_generators(const NumericalSemigroup& h, std::initializer_list<int> gens) {
  return ideal_from_generators(h, std::span<const int>(gens.begin(), gens.size()));
}

RelativeIdeal semigroup_ideal(const NumericalSemigroup& h) {
  return RelativeIdeal::from_window(0, h.conductor(), [&](int z) { return h.contains(z); });
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& h) {
  return ideal_from_generators(h, h.min_generators());
}

RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
  const int lo = e.min_elt() + f.min_elt();
  const int hi = std::min(e.tail() + f.min_elt(), f.tail() + e.min_elt());
  return RelativeIdeal::from_window(lo, hi, [&](int z) {
    // Any witness e' lies in [min E, z − min F], which is below tail(E) here.
    for (int x = e.min_elt(); x <= z - f.min_elt(); ++x) {
      if (e.contains(x) && f.contains(z - x)) return true;
    }
    return false;
  });
}

RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  const int lo = e.min_elt() - f.min_elt();
  const int hi = e.tail() - f.min_elt();
  const auto finite_part = f.elements_below_tail();
  return RelativeIdeal::from_window(lo, hi, [&](int z) {
    if (z + f.tail() < e.tail()) return false;
    return std::all_of(finite_part.begin(), finite_part.end(),
                       [&](int x) { return e.contains(z + x); });
  });
}

RelativeIdeal translate(const RelativeIdeal& e, int c) {
  return RelativeIdeal::from_window(e.min_elt() + c, e.tail() + c,
                                    [&](int z) { return e.contains(z - c); });
}

bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.min_elt() < f.min_elt()) return false;
  const int hi = std::max(e.tail(), f.tail());
  for (int z = e.min_elt(); z < hi; ++z) {
    if (e.contains(z) && !f.contains(z)) return false;
  }
  return true;
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  const int frob = h.frobenius();
  return RelativeIdeal::from_window(0, h.conductor(), [&](int z) { return !h.contains(frob - z); });
}

RelativeIdeal dual(const NumericalSemigroup& h, const RelativeIdeal& e) {
  return quotient(canonical_ideal(h), e);
}

std::optional<int> is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f) {
  const int c = f.min_elt() - e.min_elt();
  if (e.tail() + c != f.tail()) return std::nullopt;
  if (translate(e, c) == f) return c;
  return std::nullopt;
}

int colength(const NumericalSemigroup& h, const RelativeIdeal& e) {
  const RelativeIdeal hs = semigroup_ideal(h);
  if (!is_subset(e, hs)) {
    throw NotContained(e.to_string() + " is not contained in " + h.to_string());
  }
  int count = 0;
  for (int z = 0; z < e.tail(); ++z) {
    if (h.contains(z) && !e.contains(z)) ++count;
  }
  return count;
}

RelativeIdeal trace_of_canonical(const NumericalSemigroup& h) {
  const RelativeIdeal k = canonical_ideal(h);
  return add(k, quotient(semigroup_ideal(h), k));
}

int reduction_number(const RelativeIdeal& e) {
  const RelativeIdeal base = translate(e, -e.min_elt());
  RelativeIdeal power = base;
  for (int r = 1;; ++r) {
    RelativeIdeal next = add(power, base);
    if (next == power) return r;
    power = std::move(next);
  }
}

int canonical_index(const NumericalSemigroup& h) { return reduction_number(canonical_ideal(h)); }

std::pair<NumericalSemigroup, RelativeIdeal> parse_ideal(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw InvalidArgument("ideal must look like 'gens@H': '" + std::string(text) + "'");
  }
  NumericalSemigroup h = parse_semigroup(text.substr(at + 1));
  const std::vector<int> gens = parse_int_list(text.substr(0, at));
  RelativeIdeal e = ideal_from_generators(h, gens);
  return {std::move(h), std::move(e)};
}

}  // namespace sgforge
