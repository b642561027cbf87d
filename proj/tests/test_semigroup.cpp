#include "oracle.hpp"
#include "sgforge/error.hpp"
#include "sgforge/semigroup.hpp"

#include <gtest/gtest.h>

#include <random>

using sgforge::NumericalSemigroup;

namespace {

NumericalSemigroup ns(std::initializer_list<int> gens) { return NumericalSemigroup::from_generators(gens); }

TEST(Semigroup, NaturalsConventions) {
  const NumericalSemigroup n;
  EXPECT_TRUE(n.is_full());
  EXPECT_EQ(n.frobenius(), -1);
  EXPECT_EQ(n.conductor(), 0);
  EXPECT_EQ(n.genus(), 0);
  EXPECT_EQ(n.multiplicity(), 1);
  EXPECT_EQ(n.min_generators(), std::vector<int>{1});
  EXPECT_EQ(sgforge::pseudo_frobenius(n), std::vector<int>{-1});
  EXPECT_EQ(sgforge::type(n), 1);
  EXPECT_TRUE(sgforge::is_symmetric(n));
  EXPECT_EQ(ns({1, 5}), n);
}

TEST(Semigroup, FourFiveSeven) {
  const auto h = ns({4, 5, 7});
  EXPECT_EQ(h.frobenius(), 6);
  EXPECT_EQ(h.genus(), 4);
  EXPECT_EQ(h.gaps(), (std::vector<int>{1, 2, 3, 6}));
  EXPECT_EQ(sgforge::pseudo_frobenius(h), (std::vector<int>{3, 6}));
  EXPECT_EQ(sgforge::apery_set(h, 4), (std::vector<int>{0, 5, 10, 7}));
  EXPECT_FALSE(sgforge::is_symmetric(h));
  EXPECT_EQ(h.to_string(), "<4,5,7>");
  const auto inv = h.invariants();
  EXPECT_EQ(inv.multiplicity, 4);
  EXPECT_EQ(inv.embedding_dim, 3);
  EXPECT_EQ(inv.type, 2);
  EXPECT_EQ(inv.conductor, 7);
  EXPECT_EQ(inv.n_of_h, 3);
}

TEST(Semigroup, MoreSmallExamples) {
  EXPECT_EQ(sgforge::pseudo_frobenius(ns({5, 6, 7})), (std::vector<int>{8, 9}));
  EXPECT_EQ(sgforge::apery_set(ns({5, 6, 7}), 5), (std::vector<int>{0, 6, 7, 13, 14}));
  EXPECT_EQ(sgforge::pseudo_frobenius(ns({3, 4, 5})), (std::vector<int>{1, 2}));
  EXPECT_EQ(sgforge::pseudo_frobenius(ns({4, 5, 11})), (std::vector<int>{6, 7}));
  EXPECT_EQ(ns({4, 5, 11}).gaps(), (std::vector<int>{1, 2, 3, 6, 7}));
  EXPECT_EQ(sgforge::type(ns({4, 5, 6, 7})), 3);
  EXPECT_TRUE(sgforge::is_symmetric(ns({3, 4})));
  EXPECT_TRUE(sgforge::is_symmetric(ns({2, 3})));
}

TEST(Semigroup, MinimalGeneratorsAreRecomputed) {
  EXPECT_EQ(ns({8, 4, 5, 7, 9, 12}).min_generators(), (std::vector<int>{4, 5, 7}));
  EXPECT_EQ(ns({5, 6, 7, 8, 9}).min_generators(), (std::vector<int>{5, 6, 7, 8, 9}));
}

TEST(Semigroup, LargeConductorFromTwoGenerators) {
  const auto h = ns({10, 11});
  EXPECT_EQ(h.frobenius(), 89);
  EXPECT_EQ(h.genus(), 45);
  EXPECT_TRUE(sgforge::is_symmetric(h));
}

TEST(Semigroup, WithoutGenerator) {
  const auto h = ns({3, 4, 5});
  EXPECT_EQ(h.without_generator(5), ns({3, 4}));
  EXPECT_THROW(h.without_generator(6), sgforge::NotMember);
}

TEST(Semigroup, UnitaryExtension) {
  EXPECT_EQ(sgforge::unitary_extension(ns({3, 4})), ns({3, 4, 5}));
  EXPECT_EQ(sgforge::unitary_extension(ns({2, 3})), NumericalSemigroup());
  EXPECT_THROW(sgforge::unitary_extension(NumericalSemigroup()), sgforge::AlreadyFull);
}

TEST(Semigroup, FromMembers) {
  boost::dynamic_bitset<> bits(7);
  for (int z : {0, 4, 5}) bits.set(static_cast<std::size_t>(z));
  EXPECT_EQ(NumericalSemigroup::from_members(bits), ns({4, 5, 7}));
  boost::dynamic_bitset<> open(7);
  open.set(0);
  open.set(3);
  open.set(5);  // 3 + 3 = 6 is missing
  EXPECT_THROW(NumericalSemigroup::from_members(open), sgforge::InvalidArgument);
  boost::dynamic_bitset<> no_zero(3);
  no_zero.set(2);
  EXPECT_THROW(NumericalSemigroup::from_members(no_zero), sgforge::InvalidArgument);
}

TEST(Semigroup, InputErrors) {
  EXPECT_THROW(ns({4, 6}), sgforge::GcdNotOne);
  EXPECT_THROW(ns({0, 3}), sgforge::InvalidArgument);
  EXPECT_THROW(ns({-3, 4}), sgforge::InvalidArgument);
  EXPECT_THROW(NumericalSemigroup::from_generators(std::span<const int>()), sgforge::InvalidArgument);
  EXPECT_THROW(sgforge::parse_semigroup(""), sgforge::InvalidArgument);
  EXPECT_THROW(sgforge::parse_semigroup("4,,5"), sgforge::InvalidArgument);
  EXPECT_THROW(sgforge::parse_semigroup("4, 5"), sgforge::InvalidArgument);
  EXPECT_THROW(sgforge::parse_semigroup("a"), sgforge::InvalidArgument);
  EXPECT_THROW(sgforge::parse_semigroup("6,9"), sgforge::GcdNotOne);
  EXPECT_EQ(sgforge::parse_semigroup("4,5,7"), ns({4, 5, 7}));
  EXPECT_EQ(sgforge::parse_int_list("-3,0,4"), (std::vector<int>{-3, 0, 4}));
}

TEST(SemigroupOracle, RandomGeneratorsAgreeWithClosure) {
  std::mt19937 rng(20260214);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> value(2, 17);
  int checked = 0;
  while (checked < 400) {
    std::vector<int> gens(static_cast<std::size_t>(count(rng)));
    for (int& g : gens) g = value(rng);
    int gcd = 0;
    for (int g : gens) gcd = std::gcd(gcd, g);
    if (gcd != 1) continue;
    const auto h = NumericalSemigroup::from_generators(gens);
    const auto ref = oracle::semigroup(gens);
    if (oracle::frobenius(ref) >= oracle::kWindow / 2) continue;
    ++checked;
    ASSERT_EQ(h.gaps(), oracle::gaps(ref)) << h.to_string();
    EXPECT_EQ(h.frobenius(), oracle::frobenius(ref));
    EXPECT_EQ(h.min_generators(), oracle::min_generators(ref));
    EXPECT_EQ(sgforge::pseudo_frobenius(h), oracle::pseudo_frobenius(ref));
    EXPECT_EQ(sgforge::is_symmetric(h), oracle::symmetric(ref));
    EXPECT_EQ(sgforge::apery_set(h, h.multiplicity()), oracle::apery(ref, h.multiplicity()));
    for (int z = -3; z < h.conductor() + 5; ++z) EXPECT_EQ(h.contains(z), ref.has(z));
  }
}

}  // namespace
