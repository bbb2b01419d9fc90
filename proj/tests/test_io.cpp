#include <gtest/gtest.h>

#include "generators.hpp"
#include "kohn/io.hpp"

using namespace kohn;
using harmonic::Quotient;
using lens::LensSpace;

TEST(Io, DimTableCsvRoundTrip) {
  testkit::Gen g(61);
  for (int iter = 0; iter < 20; ++iter) {
    auto L = g.lens(2, 5, 2, 40);
    auto T = harmonic::dim_table(Quotient(L), 6, 4);
    const auto csv = io::dim_table_to_csv(T);
    EXPECT_EQ(io::dim_table_from_csv(csv, T.descriptor(), T.n()), T);
    EXPECT_EQ(io::dim_table_from_json(nlohmann::json::parse(io::dim_table_to_json(T).dump())), T);
  }
}

TEST(Io, DimTableCsvShape) {
  auto T = harmonic::dim_table(Quotient(LensSpace(5, {1, 2})), 1, 2);
  EXPECT_EQ(io::dim_table_to_csv(T), "p\\q,0,1,2\n0,1,0,0\n1,0,1,1\n");
  EXPECT_THROW(io::dim_table_from_csv("x,0\n0,1\n", "d", 2), std::invalid_argument);
  EXPECT_THROW(io::dim_table_from_csv("p\\q,0,1\n0,1\n", "d", 2), std::invalid_argument);
}

TEST(Io, BigValuesSurviveJson) {
  harmonic::DimTable T("big", 2, 0, 0);
  T.at(0, 0) = Integer("123456789012345678901234567890");
  auto back = io::dim_table_from_json(nlohmann::json::parse(io::dim_table_to_json(T).dump()));
  EXPECT_EQ(back.at(0, 0), T.at(0, 0));
}

TEST(Io, PolyRoundTrip) {
  auto P = genfun::p_poly_direct(LensSpace(9, {1, 2, 4}));
  auto j = io::poly_to_json(P);
  EXPECT_EQ(io::poly_from_json(nlohmann::json::parse(j.dump())), P);
  EXPECT_THROW(io::poly_from_json(nlohmann::json::parse("[[1,2]]")), std::invalid_argument);
}

TEST(Io, FamiliesRoundTrip) {
  auto fams = search::search_isospectral(5, 16);
  ASSERT_FALSE(fams.empty());
  auto back = io::families_from_jsonl(io::families_to_jsonl(fams));
  ASSERT_EQ(back.size(), fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) {
    EXPECT_EQ(back[i].n, fams[i].n);
    EXPECT_EQ(back[i].k, fams[i].k);
    EXPECT_EQ(back[i].members, fams[i].members);
  }
  EXPECT_THROW(io::families_from_jsonl("{\"n\":3,\"k\":7,\"members\":[[1,2]]}\n"), std::invalid_argument);
}

TEST(Io, FamiliesCsv) {
  search::IsospectralFamily f{3, 49, {LensSpace(49, {1, 8, 22}), LensSpace(49, {1, 8, 36})}, ""};
  EXPECT_EQ(io::families_csv_header() + io::families_to_csv_rows({f}), "2n-1,k,family\n5,49,\"[1,8,22] [1,8,36]\"\n");
}

TEST(Io, BergerCsvRoundTrip) {
  auto lines = berger::berger_spectrum(Quotient(LensSpace(7, {1, 2, 3})), 8);
  EXPECT_EQ(io::berger_from_csv(io::berger_to_csv(lines)), lines);
  EXPECT_EQ(io::berger_to_json(lines).size(), lines.size());
  EXPECT_THROW(io::berger_from_csv("a,b\n"), std::invalid_argument);
}
