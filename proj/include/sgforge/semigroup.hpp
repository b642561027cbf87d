#pragma once

// Numerical semigroups H ⊆ ℕ with finite complement. A value of
// NumericalSemigroup is the combinatorial form of the monomial curve ring
// k[[t^h : h ∈ H]].

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgforge {

struct CoreInvariants {
  int multiplicity = 1;
  int embedding_dim = 1;
  int type = 1;
  int genus = 0;
  int frobenius = -1;
  int conductor = 0;
  int n_of_h = 0;  // #(H ∩ [0, conductor))

  friend bool operator==(const CoreInvariants&, const CoreInvariants&) = default;
};

class NumericalSemigroup {
 public:
  /// The semigroup ℕ = ⟨1⟩.
  NumericalSemigroup();

  /// Semigroup generated by `gens`; minimal generators are recomputed.
  /// Throws InvalidArgument on an empty list or a non-positive entry and
  /// GcdNotOne when the generators share a divisor.
  static NumericalSemigroup from_generators(std::span<const int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
  }

  /// Builds H from explicit membership of [0, bits.size()); every integer
  /// >= bits.size() is taken to be a member. Throws InvalidArgument when
  /// the set is not closed under addition or misses 0.
  static NumericalSemigroup from_members(const boost::dynamic_bitset<>& bits);

  bool contains(int z) const {
    if (z < 0) return false;
    if (z >= conductor_) return true;
    return members_.test(static_cast<std::size_t>(z));
  }

  const std::vector<int>& min_generators() const { return generators_; }
  int frobenius() const { return conductor_ - 1; }
  int conductor() const { return conductor_; }
  int genus() const { return genus_; }
  int multiplicity() const { return generators_.front(); }
  int embedding_dimension() const { return static_cast<int>(generators_.size()); }
  bool is_full() const { return conductor_ == 0; }

  /// Gaps in increasing order. This is also the path of H in the genus tree.
  std::vector<int> gaps() const;
  /// Elements of H below the conductor, increasing.
  std::vector<int> small_elements() const;

  /// H ∖ {a} for a minimal generator a. Throws NotMember otherwise.
  NumericalSemigroup without_generator(int a) const;

  CoreInvariants invariants() const;

  /// "<4,5,7>"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.members_ == b.members_;
  }

 private:
  // Bit z is set iff z ∈ H, for z in [0, conductor]; bit conductor is set.
  boost::dynamic_bitset<> members_;
  int conductor_ = 0;
  int genus_ = 0;
  std::vector<int> generators_;

  static NumericalSemigroup from_trusted_members(boost::dynamic_bitset<> bits);
};

/// Parses the semigroup grammar `\d+(,\d+)*`.
NumericalSemigroup parse_semigroup(std::string_view text);

/// Parses a comma-separated list of (possibly negative) integers.
std::vector<int> parse_int_list(std::string_view text);

/// w_i = least element of H congruent to i mod n, for i = 0..n-1.
std::vector<int> apery_set(const NumericalSemigroup& h, int n);

/// PF(H); by convention PF(ℕ) = {-1}.
std::vector<int> pseudo_frobenius(const NumericalSemigroup& h);

int type(const NumericalSemigroup& h);

bool is_symmetric(const NumericalSemigroup& h);

/// e(H) == embedding dimension. classify::minimal_multiplicity cross-checks
/// this against the ideal-theoretic route.
bool has_minimal_multiplicity(const NumericalSemigroup& h);

/// S ∪ {F(S)}. Throws AlreadyFull for S = ℕ.
NumericalSemigroup unitary_extension(const NumericalSemigroup& s);

}  // namespace sgforge
