#include <gtest/gtest.h>

#include <set>

#include "kohn/error.hpp"
#include "kohn/families.hpp"
#include "kohn/genfun.hpp"

using namespace kohn;
using families::PairParams;
using lens::LensSpace;

namespace {

// Members of G(n, k) straight from the definition, over all ordered tuples.
std::size_t brute_member_count(int n, long k) {
  std::size_t count = 0;
  std::vector<long> s(static_cast<std::size_t>(n), 1);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (s[a] == s[b]) return;
      bool free_of_negatives = false;
      for (int a = 0; a < n && !free_of_negatives; ++a) {
        bool hit = false;
        for (int b = 0; b < n; ++b) hit = hit || (s[a] + s[b]) % k == 0;
        free_of_negatives = !hit;
      }
      if (free_of_negatives) ++count;
      return;
    }
    for (long x = 1; x < k; ++x) {
      if (std::gcd(x, k) != 1) continue;
      s[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
  return count;
}

}  // namespace

TEST(Families, GersonMembership) {
  EXPECT_TRUE(families::is_gerson_member(LensSpace(7, {1, 2, 3, 4})));
  EXPECT_FALSE(families::is_gerson_member(LensSpace(7, {1, 6, 2, 5})));
  EXPECT_FALSE(families::is_gerson_member(LensSpace(7, {1, 1, 2, 3})));
  EXPECT_TRUE(families::gerson_members(6, 7).empty());
  EXPECT_TRUE(families::gerson_members(4, 8).empty());
}

TEST(Families, GersonStreamRespectsDefinition) {
  for (long k : {5L, 7L, 9L, 11L, 12L, 13L}) {
    for (int n = 2; n <= 4; ++n) {
      std::size_t visited = 0;
      std::set<std::vector<long>> seen;
      families::for_each_gerson_member(n, k, [&](const LensSpace& L) {
        ++visited;
        EXPECT_TRUE(families::is_gerson_member(L));
        EXPECT_TRUE(std::is_sorted(L.weights().begin(), L.weights().end()));
        EXPECT_TRUE(seen.insert(L.weights()).second);
      });
      std::size_t factorial = 1;
      for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
      EXPECT_EQ(visited * factorial, brute_member_count(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Families, GersonClassesAtSeven) {
  auto census = families::gerson_census(4, 7);
  EXPECT_EQ(census.classes,
            (std::vector<LensSpace>{lens::cr_canonical_form(LensSpace(7, {1, 2, 3, 4})),
                                    lens::cr_canonical_form(LensSpace(7, {1, 2, 3, 5}))}));
  EXPECT_EQ(census.ordered_members, Integer(census.weight_sets) * 24);
}

TEST(Families, GersonCounts) {
  const std::vector<std::pair<long, long>> expect{{5, 1}, {7, 2}, {11, 4}, {13, 5}};
  for (auto [k, count] : expect) {
    EXPECT_EQ(families::gerson_class_count(k), count);
    EXPECT_EQ(families::gerson_class_count(k, true), count);
    EXPECT_EQ(static_cast<long>(families::gerson_census(static_cast<int>(k - 3), k).classes.size()), count);
    EXPECT_TRUE(families::verify_gerson_isospectral(k)) << k;
  }
  EXPECT_THROW(families::gerson_class_count(4), std::invalid_argument);
  EXPECT_THROW(families::gerson_class_count(9), std::invalid_argument);
  EXPECT_THROW(families::gerson_class_count(3), std::invalid_argument);
}

TEST(Families, PairParamValidation) {
  EXPECT_NO_THROW(PairParams::make(7, {0, 1, 3}));
  EXPECT_THROW(PairParams::make(3, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(PairParams::make(8, {0, 1, 3}), std::invalid_argument);
  EXPECT_THROW(PairParams::make(7, {0, 1}), std::invalid_argument);
  EXPECT_THROW(PairParams::make(7, {0, 3, 1}), std::invalid_argument);
  EXPECT_THROW(PairParams::make(9, {0, 1, 4}), std::invalid_argument);  // a_3 - a_2 = 3
  EXPECT_THROW(PairParams::make(7, {0, 1, 7}), std::invalid_argument);
}

TEST(Families, SevenPair) {
  auto P = PairParams::make(7, {0, 1, 3});
  auto [plus, minus] = families::make_pair(P);
  EXPECT_EQ(plus, LensSpace(49, {1, 8, 22}));
  EXPECT_EQ(minus, LensSpace(49, {1, 43, 29}));
  EXPECT_TRUE(lens::are_cr_equivalent(minus, LensSpace(49, {1, 8, 36})));
  EXPECT_FALSE(families::pair_equivalent(P));
  EXPECT_FALSE(lens::are_cr_equivalent(plus, minus));
  EXPECT_EQ(genfun::p_poly_direct(plus), genfun::p_poly_direct(minus));
}

TEST(Families, FivePairIsEquivalent) {
  auto P = PairParams::make(5, {0, 1, 2});
  EXPECT_TRUE(families::pair_equivalent(P));
  auto [plus, minus] = families::make_pair(P);
  EXPECT_TRUE(lens::are_cr_equivalent(plus, minus));
}

TEST(Families, PowersOfTwoFamily) {
  for (int n = 3; n <= 4; ++n) {
    std::vector<long> a;
    for (int i = 1; i <= n; ++i) a.push_back((1L << (i - 1)) - 1);
    for (long r = 1L << n; r <= 40; ++r) {
      if (!arith::is_prime(r)) continue;
      EXPECT_FALSE(families::pair_equivalent(PairParams::make(r, a))) << "r=" << r;
    }
  }
}

TEST(Families, CriterionAgreesWithBruteForce) {
  int total = 0, equivalent = 0;
  for (long r : {5L, 7L, 9L}) {
    for (int n = 3; n <= 4; ++n) {
      for (const auto& P : families::all_pair_params(r, n)) {
        auto [plus, minus] = families::make_pair(P);
        const bool brute = lens::are_cr_equivalent(plus, minus);
        EXPECT_EQ(families::pair_equivalent(P), brute) << "r=" << r;
        EXPECT_EQ(genfun::p_poly_direct(plus), genfun::p_poly_direct(minus)) << "r=" << r;
        ++total;
        equivalent += brute;
      }
    }
  }
  EXPECT_GT(total, 0);
  EXPECT_GT(equivalent, 0);
  EXPECT_LT(equivalent, total);
}

TEST(Families, AllPairParamsAreValid) {
  for (const auto& P : families::all_pair_params(11, 4)) EXPECT_NO_THROW(PairParams::make(P.r, P.a));
  EXPECT_TRUE(families::all_pair_params(5, 6).empty());
}
