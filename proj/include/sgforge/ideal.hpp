#pragma once

// Relative ideals of a numerical semigroup: sets E ⊆ ℤ, bounded below, with
// E + H ⊆ E. They are the exponent sets of monomial fractional ideals of
// k[[H]]. Operations that need the ambient semigroup take it explicitly;
// set operations (add, quotient, translate) are ambient-free.

#include "sgforge/semigroup.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgforge {

class RelativeIdeal {
 public:
  /// Normalized set whose members in [lo, hi) are given by `member`; every
  /// integer >= hi is a member.
  template <class Pred>
  static RelativeIdeal from_window(int lo, int hi, Pred&& member) {
    RelativeIdeal e;
    int first = lo;
    while (first < hi && !member(first)) ++first;
    int tail = hi;
    while (tail > first && member(tail - 1)) --tail;
    e.min_ = first;
    e.tail_ = tail;
    e.bits_.resize(static_cast<std::size_t>(tail - first));
    for (int z = first; z < tail; ++z) {
      if (member(z)) e.bits_.set(static_cast<std::size_t>(z - first));
    }
    return e;
  }

  bool contains(int z) const {
    if (z < min_) return false;
    if (z >= tail_) return true;
    return bits_.test(static_cast<std::size_t>(z - min_));
  }

  int min_elt() const { return min_; }
  /// Smallest t with [t, ∞) ⊆ E.
  int tail() const { return tail_; }
  /// Members strictly below the tail, increasing.
  std::vector<int> elements_below_tail() const;

  /// "{0,3,4,5} ∪ {≥7}"
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.min_ == b.min_ && a.tail_ == b.tail_ && a.bits_ == b.bits_;
  }

 private:
  int min_ = 0;
  int tail_ = 0;
  boost::dynamic_bitset<> bits_;  // bit i <=> min_ + i ∈ E, for i < tail_ - min_
};

/// ⋃ (g + H) over g in gens.
RelativeIdeal ideal_from_generators(const NumericalSemigroup& h, std::span<const int> gens);
RelativeIdeal ideal_from_generators(const NumericalSemigroup& h, std::initializer_list<int> gens);

/// H viewed as the principal ideal (1).
RelativeIdeal semigroup_ideal(const NumericalSemigroup& h);

/// M = H ∖ {0}.
RelativeIdeal maximal_ideal(const NumericalSemigroup& h);

/// {e + f}
RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f);

/// E − F = {z ∈ ℤ | z + F ⊆ E}
RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f);

RelativeIdeal translate(const RelativeIdeal& e, int c);

bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f);

/// K(H) = {F(H) − z | z ∉ H}; min 0, H ⊆ K.
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);

/// E† = K − E.
RelativeIdeal dual(const NumericalSemigroup& h, const RelativeIdeal& e);

/// Some(c) with f = e + c, else nullopt.
std::optional<int> is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f);

/// #(H ∖ E); throws NotContained unless E ⊆ H.
int colength(const NumericalSemigroup& h, const RelativeIdeal& e);

/// K + (H − K), the trace of the canonical module in R.
RelativeIdeal trace_of_canonical(const NumericalSemigroup& h);

/// Least r >= 1 with (r+1)E = rE, after translating E to min 0.
int reduction_number(const RelativeIdeal& e);

/// reduction_number(K(H)).
int canonical_index(const NumericalSemigroup& h);

/// Parses "gens@H", e.g. "4,5@4,5,11". Returns the semigroup and the ideal.
std::pair<NumericalSemigroup, RelativeIdeal> parse_ideal(std::string_view text);

}  // namespace sgforge
