#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kohn/io.hpp"

using namespace kohn;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kohn-cli-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Dims) {
  auto r = run({"dims", "L(5;1,2)", "3", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto T = io::dim_table_from_csv(r.out, "L(5; 1,2)", 2);
  EXPECT_EQ(T.pmax(), 3);
  EXPECT_EQ(T.qmax(), 3);
  EXPECT_EQ(T.at(0, 0), 1);
  EXPECT_EQ(T.at(1, 1), 1);

  auto j = run({"dims", "GammaI(11,25,3;1,1)", "2", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  auto G = io::dim_table_from_json(json::parse(j.out));
  EXPECT_EQ(G.pmax(), 2);
  EXPECT_EQ(G.at(0, 0), 1);
}

TEST(Cli, DimsRejectsBadInput) {
  auto r = run({"dims", "L(7;0,1)", "3", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"dims", "L(7;1,2)", "3"}).code, 2);
  EXPECT_EQ(run({"dims", "L(7;1,2)", "3", "-1"}).code, 2);
  EXPECT_EQ(run({"dims", "L(7;1,2)", "3", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(Cli, SearchStreams) {
  auto r = run({"search", "3", "49..49"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto fams = io::families_from_jsonl(r.out);
  ASSERT_EQ(fams.size(), 1u);
  EXPECT_TRUE(lens::are_cr_equivalent(fams[0].members[0], lens::LensSpace(49, {1, 8, 22})) ||
              lens::are_cr_equivalent(fams[0].members[1], lens::LensSpace(49, {1, 8, 22})));

  auto seven = run({"search", "4", "7"});
  ASSERT_EQ(seven.code, 0);
  EXPECT_EQ(io::families_from_jsonl(seven.out).size(), 1u);

  auto empty = run({"search", "2", "2..100"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");

  auto csv = run({"search", "4", "7..8", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("2n-1,k,family\n7,7,", 0), 0u);

  EXPECT_EQ(run({"search", "3", "9..5"}).code, 2);
  EXPECT_EQ(run({"search", "3", "x"}).code, 2);
  EXPECT_EQ(run({"search", "3", "5", "--workers", "0"}).code, 2);
}

TEST(Cli, SearchWritesFileAndResumes) {
  auto dir = scratch_dir("resume");
  const auto out = (dir / "families.jsonl").string();
  auto first = run({"search", "4", "13..14", "--out", out, "--workers", "2"});
  ASSERT_EQ(first.code, 0) << first.err;
  const std::string content = slurp(out);
  EXPECT_FALSE(content.empty());

  const auto ckdir = std::filesystem::path(out + ".ckpt");
  ASSERT_TRUE(std::filesystem::exists(cli::Checkpoint::path(ckdir, 4, 14)));
  auto cached = cli::Checkpoint::read(ckdir, 4, 14);
  ASSERT_TRUE(cached.has_value());
  EXPECT_EQ(io::families_to_jsonl(*cached), io::families_to_jsonl(search::search_isospectral(4, 14)));

  // Appending breaks the checksum: the cell is discarded and recomputed.
  {
    std::ofstream f(cli::Checkpoint::path(ckdir, 4, 14), std::ios::app);
    f << "{\"n\":4,\"k\":14,\"members\":[[1,3,5,9],[1,3,5,9]]}\n";
  }
  EXPECT_FALSE(cli::Checkpoint::read(ckdir, 4, 14).has_value());
  auto second = run({"search", "4", "13..14", "--out", out, "--resume"});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(slurp(out), content);
  EXPECT_TRUE(cli::Checkpoint::read(ckdir, 4, 14).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Cli, CheckpointKeyDependsOnCell) {
  EXPECT_NE(cli::Checkpoint::key(3, 49), cli::Checkpoint::key(3, 50));
  EXPECT_NE(cli::Checkpoint::key(3, 49), cli::Checkpoint::key(4, 49));
  EXPECT_EQ(cli::Checkpoint::key(3, 49), cli::Checkpoint::key(3, 49));
  auto dir = scratch_dir("ckpt");
  EXPECT_FALSE(cli::Checkpoint::read(dir, 3, 49).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutput) {
  EXPECT_EQ(run({"search", "3", "5", "--out", "/nonexistent-dir/x/y.jsonl"}).code, 2);
}

TEST(Cli, Workers) {
  EXPECT_EQ(cli::resolve_workers(3), 3);
  ::setenv("KOHN_WORKERS", "5", 1);
  EXPECT_EQ(cli::resolve_workers(std::nullopt), 5);
  EXPECT_EQ(cli::resolve_workers(2), 2);
  ::setenv("KOHN_WORKERS", "zero", 1);
  EXPECT_THROW(cli::resolve_workers(std::nullopt), std::invalid_argument);
  EXPECT_EQ(run({"search", "3", "5"}).code, 2);
  ::unsetenv("KOHN_WORKERS");
  EXPECT_EQ(cli::resolve_workers(std::nullopt), 0);
  EXPECT_THROW(cli::resolve_workers(0), std::invalid_argument);
}

TEST(Cli, Ranges) {
  EXPECT_EQ(cli::parse_range("2..100"), std::make_pair(2L, 100L));
  EXPECT_EQ(cli::parse_range("7"), std::make_pair(7L, 7L));
  EXPECT_THROW(cli::parse_range("7.."), std::invalid_argument);
  EXPECT_THROW(cli::parse_range("a..b"), std::invalid_argument);
}

TEST(Cli, CheckPairRiemannian) {
  auto r = run({"check-pair", "L(3;1,1)", "L(3;1,2)", "--mode", "riem"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["isometric"], true);
  EXPECT_EQ(j["cr_equivalent"], false);
  EXPECT_TRUE(j["isometry_witness"].is_object());
  EXPECT_EQ(j["isometry_witness"]["sigma"].size(), 2u);
  EXPECT_EQ(run({"check-pair", "L(3;1,1)", "L(3;1,2)", "--mode", "cr"}).code, 1);
}

TEST(Cli, CheckPairSame) {
  auto r = run({"check-pair", "L(9;1,2,4)", "L(9;2,4,1)", "--mode", "cr"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["cr_equivalent"], true);
  EXPECT_EQ(j["isometric"], true);
  EXPECT_EQ(j["f_equal"]["equal"], true);
  EXPECT_EQ(j["berger_equal"], true);
}

TEST(Cli, CheckPairKohn) {
  auto r = run({"check-pair", "L(49;1,8,22)", "L(49;1,8,36)", "--mode", "kohn-F"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["f_equal"]["verdict"], "equal");
  EXPECT_EQ(j["cr_equivalent"], false);
  EXPECT_EQ(j["verdict"], true);
  auto b = run({"check-pair", "L(49;1,8,22)", "L(49;1,8,36)", "--mode", "berger", "--cutoff", "12"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(b.out)["berger_cutoff"], 12);
}

TEST(Cli, CheckPairGroups) {
  auto r = run({"check-pair", "GammaI(11,25,3;1,1)", "GammaI(11,25,3;1,2)", "--mode", "kohn-F", "--cutoff", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["f_equal"]["almost_conjugate"], true);
  EXPECT_EQ(j["f_equal"]["bound"], 3);
  EXPECT_TRUE(j["cr_equivalent"].is_null());
  EXPECT_EQ(run({"check-pair", "GammaI(11,25,3;1,1)", "GammaI(11,25,3;1,2)", "--mode", "cr"}).code, 2);
}

TEST(Cli, CheckPairErrors) {
  EXPECT_EQ(run({"check-pair", "L(5;1,2)", "L(5;1,2,3)"}).code, 2);
  EXPECT_EQ(run({"check-pair", "L(5;1,2)", "L(5;1,2)", "--mode", "other"}).code, 2);
  EXPECT_EQ(run({"check-pair", "L(5;1,2)", "L(5;1,1)", "--mode", "kohn-F"}).code, 1);
}

TEST(Cli, FamilyGerson) {
  auto r = run({"family", "gerson", "7"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["class_count"], 2);
  EXPECT_EQ(j["isospectral"], true);
  EXPECT_EQ(run({"family", "gerson", "4"}).code, 2);
  EXPECT_EQ(run({"family", "gerson", "7", "8"}).code, 2);
}

TEST(Cli, FamilyPair) {
  auto r = run({"family", "pair", "7", "0", "1", "3"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["f_equal"], true);
  EXPECT_EQ(j["cr_equivalent"], false);
  EXPECT_EQ(j["L+"], "L(49; 1,8,22)");
  EXPECT_EQ(run({"family", "pair", "8", "0", "1", "3"}).code, 2);
  EXPECT_EQ(run({"family", "other", "8"}).code, 2);
}

TEST(Cli, Berger) {
  auto r = run({"berger", "L(7;1,2,3)", "--cutoff", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::berger_from_csv(r.out), berger::berger_spectrum(harmonic::Quotient(lens::LensSpace(7, {1, 2, 3})), 6));
}

TEST(Cli, Deterministic) {
  auto a = run({"search", "5", "16", "--workers", "1"});
  auto b = run({"search", "5", "16", "--workers", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
