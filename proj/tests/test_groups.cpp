#include <gtest/gtest.h>

#include "kohn/error.hpp"
#include "kohn/groups.hpp"

using namespace kohn;
using groups::MonomialElement;
using groups::MonomialGroup;
using groups::TypeIParams;

namespace {

MonomialElement power(const MonomialElement& g, long e) {
  auto r = MonomialElement::identity(g.dim(), g.root_order());
  for (long i = 0; i < e; ++i) r = r * g;
  return r;
}

// Valid (m, n, r) with m*n <= limit, including the cyclic case d = 1.
std::vector<TypeIParams> all_params(long limit) {
  std::vector<TypeIParams> out;
  for (long m = 1; m <= limit; ++m) {
    for (long n = 1; m * n <= limit; ++n) {
      for (long r = 1; r <= std::max(1L, m - 1); ++r) {
        // Cheap necessary conditions first; make() decides the rest.
        if (std::gcd(r, m) != 1 || std::gcd(n * (r - 1), m) != 1) continue;
        if (n % arith::multiplicative_order(r, m) != 0) continue;
        try {
          out.push_back(TypeIParams::make(m, n, r));
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(Groups, ElementAlgebra) {
  MonomialElement a(12, {1, 2, 0}, {1, 5, 7});
  MonomialElement b(12, {2, 0, 1}, {3, 0, 11});
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_TRUE((a.inverse() * a).is_identity());
  EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  EXPECT_THROW(MonomialElement(12, {0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(MonomialElement(12, {0, 1}, {1}), std::invalid_argument);
}

TEST(Groups, TypeIParamValidation) {
  auto P = TypeIParams::make(11, 25, 3);
  EXPECT_EQ(P.d, 5);
  EXPECT_EQ(P.n_prime, 5);
  EXPECT_THROW(TypeIParams::make(11, 24, 3), std::invalid_argument);  // d does not divide n
  EXPECT_THROW(TypeIParams::make(7, 6, 2), std::invalid_argument);    // 3 does not divide n/d = 2
  EXPECT_THROW(TypeIParams::make(9, 6, 4), std::invalid_argument);    // gcd(n(r-1), m) = 3
  EXPECT_THROW(TypeIParams::make(0, 6, 4), std::invalid_argument);
}

TEST(Groups, FiveDimensionalExample) {
  auto P = TypeIParams::make(11, 25, 3);
  auto [A, B] = groups::type_one_generators(P, 1, 1);
  const long N = A.root_order();
  ASSERT_EQ(N % 11, 0);
  const std::vector<long> pows{1, 3, 9, 5, 4};
  for (int j = 0; j < 5; ++j) EXPECT_EQ(A.exps()[j], pows[j] * (N / 11));

  auto G = groups::type_one_group(P, 1, 1);
  EXPECT_EQ(G.order(), 275u);
  EXPECT_EQ(G.dim(), 5);
  EXPECT_EQ(G.label(), "GammaI(11,25,3;1,1)");
  EXPECT_TRUE(groups::acts_freely(G));

  auto B5 = power(B, 5);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(B5.perm()[i], i);
    EXPECT_EQ(B5.exps()[i], N / 5);
  }

  auto f = groups::char_poly_factors(B);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].length, 5);
  EXPECT_EQ(f[0].value, cyclotomic::CycInt::root(N, N / 5));
}

TEST(Groups, CharPolyFactorsOfDiagonal) {
  auto id = MonomialElement::identity(3, 7);
  auto f = groups::char_poly_factors(id);
  ASSERT_EQ(f.size(), 3u);
  for (const auto& c : f) {
    EXPECT_EQ(c.length, 1);
    EXPECT_EQ(c.value, cyclotomic::CycInt::constant(7, 1));
  }
  auto d = MonomialElement::diagonal(5, {1, 2});
  auto g = groups::char_poly_factors(d);
  ASSERT_EQ(g.size(), 2u);
  const auto z1 = cyclotomic::CycInt::root(5, 1), z2 = cyclotomic::CycInt::root(5, 2);
  EXPECT_TRUE((g[0].value == z1 && g[1].value == z2) || (g[0].value == z2 && g[1].value == z1));
}

TEST(Groups, CharPolyOfCommutingDiagonalProduct) {
  for (long N : {6L, 10L, 12L}) {
    for (long a = 0; a < N; ++a) {
      for (long b = 0; b < N; b += 3) {
        auto x = MonomialElement::diagonal(N, {a, b, a + b});
        auto y = MonomialElement::diagonal(N, {b, 2 * a, 1});
        std::vector<cyclotomic::CycInt> expect;
        for (int i = 0; i < 3; ++i) expect.push_back(cyclotomic::CycInt::root(N, x.exps()[i] + y.exps()[i]));
        auto got = groups::char_poly_factors(x * y);
        ASSERT_EQ(got.size(), 3u);
        std::vector<bool> used(3, false);
        for (const auto& f : got) {
          bool hit = false;
          for (int i = 0; i < 3 && !hit; ++i)
            if (!used[i] && f.value == expect[i]) used[i] = hit = true;
          EXPECT_TRUE(hit);
        }
      }
    }
  }
}

TEST(Groups, Spectrum) {
  auto d = MonomialElement::diagonal(10, {5, 4});
  EXPECT_EQ(groups::spectrum(d), (groups::Spectrum{{1, 2}, {2, 5}}));
  // A 2-cycle with product zeta_4^1 has eigenvalues +-zeta_8.
  MonomialElement c(4, {1, 0}, {1, 0});
  EXPECT_EQ(groups::spectrum(c), (groups::Spectrum{{1, 8}, {5, 8}}));
}

TEST(Groups, Relations) {
  std::size_t checked = 0;
  for (const auto& P : all_params(2000)) {
    auto [A, B] = groups::type_one_generators(P, 1, 1);
    EXPECT_TRUE(power(A, P.m).is_identity());
    EXPECT_TRUE(power(B, P.n).is_identity());
    EXPECT_EQ(B * A * B.inverse(), power(A, P.r)) << P.m << "," << P.n << "," << P.r;
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Groups, OrdersAndFreeness) {
  for (const auto& P : all_params(2000)) {
    auto G = groups::type_one_group(P, 1, 1);
    EXPECT_EQ(G.order(), static_cast<std::size_t>(P.m * P.n)) << P.m << "," << P.n << "," << P.r;
    EXPECT_TRUE(groups::acts_freely(G)) << P.m << "," << P.n << "," << P.r;
  }
}

TEST(Groups, RepresentationPreconditions) {
  auto P = TypeIParams::make(11, 25, 3);
  EXPECT_THROW(groups::type_one_generators(P, 11, 1), std::invalid_argument);
  EXPECT_THROW(groups::type_one_generators(P, 1, 5), std::invalid_argument);
  EXPECT_THROW(groups::type_one_generators(P, 2, 1), std::invalid_argument);  // 2 is not 1 mod 5
}

TEST(Groups, GenerateLimit) {
  auto g = MonomialElement::diagonal(100, {1, 3});
  EXPECT_THROW(MonomialGroup::generate({g}, 50), std::length_error);
  EXPECT_EQ(MonomialGroup::generate({g}, 100).order(), 100u);
}

TEST(Groups, FreeAction) {
  auto bad = MonomialGroup::generate({MonomialElement::diagonal(3, {0, 1})}, 10);
  EXPECT_FALSE(groups::acts_freely(bad));
  auto good = groups::diagonal_group(lens::LensSpace(9, {1, 2, 4}));
  EXPECT_EQ(good.order(), 9u);
  EXPECT_TRUE(groups::acts_freely(good));
}

TEST(Groups, AlmostConjugateExamples) {
  auto P5 = TypeIParams::make(11, 25, 3);
  auto g1 = groups::type_one_group(P5, 1, 1), g2 = groups::type_one_group(P5, 1, 2);
  EXPECT_TRUE(groups::almost_conjugate(g1, g2));
  EXPECT_TRUE(groups::almost_conjugate(g1, g1));

  auto P7 = TypeIParams::make(29, 49, 7);
  std::vector<MonomialGroup> seven;
  for (long l : {1, 2, 3}) seven.push_back(groups::type_one_group(P7, 1, l));
  for (const auto& x : seven) {
    EXPECT_EQ(x.order(), 1421u);
    EXPECT_TRUE(groups::acts_freely(x));
    for (const auto& y : seven) EXPECT_TRUE(groups::almost_conjugate(x, y));
  }
}

namespace {

// Reflexive, symmetric and transitive on the given groups; returns the relation.
std::vector<std::vector<bool>> check_equivalence(const std::vector<MonomialGroup>& gs) {
  const std::size_t n = gs.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = groups::almost_conjugate(gs[i], gs[j]);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(rel[i][j], rel[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[i][j] && rel[j][k]) {
          EXPECT_TRUE(rel[i][k]);
        }
      }
    }
  }
  return rel;
}

}  // namespace

TEST(Groups, AlmostConjugacyIsAnEquivalence) {
  using lens::LensSpace;
  auto four = check_equivalence(
      {groups::diagonal_group(LensSpace(7, {1, 2, 3, 4})), groups::diagonal_group(LensSpace(7, {1, 2, 3, 5})),
       groups::diagonal_group(LensSpace(7, {2, 4, 6, 1})), groups::diagonal_group(LensSpace(7, {1, 1, 1, 1})),
       groups::diagonal_group(LensSpace(5, {1, 2, 3, 4})), groups::diagonal_group(LensSpace(5, {1, 2, 4, 3}))});
  EXPECT_TRUE(four[0][2]);  // same group, different generator
  EXPECT_FALSE(four[0][1]);
  EXPECT_FALSE(four[0][4]);  // different orders
  EXPECT_TRUE(four[4][5]);

  const auto P = TypeIParams::make(7, 9, 2);
  std::vector<MonomialGroup> three;
  for (long l : {1, 2, 4}) three.push_back(groups::type_one_group(P, 1, l));
  three.push_back(groups::diagonal_group(LensSpace(63, {1, 4, 16})));
  three.push_back(groups::diagonal_group(LensSpace(63, {1, 2, 4})));
  check_equivalence(three);

  EXPECT_THROW(groups::almost_conjugate(three[0], groups::diagonal_group(LensSpace(7, {1, 2}))),
               std::invalid_argument);
}

TEST(Groups, ParseAndFormat) {
  auto rep = groups::parse_type_one("GammaI(11, 25, 3; 1, 2)");
  EXPECT_EQ(rep.params.m, 11);
  EXPECT_EQ(rep.params.n, 25);
  EXPECT_EQ(rep.l, 2);
  EXPECT_EQ(groups::format_type_one(rep), "GammaI(11,25,3;1,2)");
  EXPECT_THROW(groups::parse_type_one("GammaI(11,25,3;1)"), ParseError);
  EXPECT_THROW(groups::parse_type_one("GammaI(11,24,3;1,1)"), ParseError);
}
