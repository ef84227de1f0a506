#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coc_tools/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coc::tools::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  fs::create_directories(COC_TEST_TMPDIR);
  const auto path = (fs::path(COC_TEST_TMPDIR) / name).string();
  std::ofstream(path) << content;
  return path;
}

const char* kDiag = R"({"q": 2,
  "blocks": [{"poly": "1 1 0 0 1", "exp": 1}, {"poly": "1 1 0 0 0 0 1", "exp": 1}],
  "start": ["1000000000", "0110000000", "0000100000", "0000010111"],
  "shape": "diag"})";

}  // namespace

TEST(Cli, SpreadThenAnalyze) {
  const auto s = cli({"spread", "--q", "2", "--n", "6", "--k", "3"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto path = tmp_file("spread63.json", s.out);
  const auto a = cli({"analyze", "--code", path});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["cardinality"], 9);
  EXPECT_EQ(j["min_distance"], 6);
  EXPECT_EQ(j["distribution"], json({1, 0, 0, 8}));
  EXPECT_EQ(j["regime"], "primitive");
}

TEST(Cli, AnalyzeBlockDiagonalExample) {
  const auto a = cli({"analyze", "--code", tmp_file("diag.json", kDiag)});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["cardinality"], 105);
  EXPECT_EQ(j["min_distance"], 4);
  EXPECT_EQ(j["bounds"]["cardinality"], 105);
  EXPECT_EQ(j["bounds"]["distance_is_exact"], true);
  const auto n = cli({"analyze", "--code", tmp_file("diag.json", kDiag), "--naive", "--format", "csv"});
  EXPECT_EQ(n.out, "cardinality,min_distance,regime\n105,4,completely_reducible\n");
}

TEST(Cli, EmittedSpecsRoundTripThroughEveryConsumer) {
  const auto s = cli({"spread", "--q", "2", "--n", "6", "--k", "2"});
  ASSERT_EQ(s.code, 0);
  const auto path = tmp_file("spread62.json", s.out);
  EXPECT_EQ(cli({"analyze", "--code", path}).code, 0);
  EXPECT_EQ(cli({"classify", "--code", path}).code, 0);
  EXPECT_EQ(cli({"search", "--code", path, "--k", "2", "--seed", "1", "--trials", "20"}).code, 0);
  EXPECT_EQ(cli({"simulate", "--code", path, "--seed", "1", "--trials", "5"}).code, 0);
  const auto r = tmp_file("r62.txt", "100000\n110111\n");
  const auto d = cli({"decode", "--code", path, "--received", r});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["distance"], 0);
  const auto again = cli({"spread", "--q", "2", "--n", "6", "--k", "2"});
  EXPECT_EQ(again.out, s.out);
}

TEST(Cli, NonprimitiveSpread) {
  const auto s = cli({"spread", "--q", "2", "--n", "4", "--k", "2", "--poly", "1 1 1 1 1", "--nonprimitive"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto a = cli({"analyze", "--code", tmp_file("np.json", s.out)});
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["cardinality"], 5);
  EXPECT_EQ(j["analyzer"], "irreducible");
}

TEST(Cli, Classify) {
  const auto c = cli({"classify", "--q", "2", "--poly", "1 1 0 0 0 0 1"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["type"], "e=((1)) o=(63)");
  const auto m = cli({"classify", "--q", "2", "--matrix", tmp_file("m.txt", "0100\n0010\n0001\n1010\n")});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(json::parse(m.out)["type"], "e=((2)) o=(3)");
  EXPECT_EQ(cli({"classify", "--q", "2"}).code, 2);
  EXPECT_EQ(cli({"classify", "--q", "2", "--poly", "1 0 1"}).code, 0);
}

TEST(Cli, SearchCsv) {
  const auto s = cli({"search", "--q", "2", "--n", "4", "--k", "2", "--seed", "1", "--trials", "500", "--format", "csv"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("2,2,4,15,2,15\n"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("2,2,4,15,4,5\n"), std::string::npos) << s.out;
  const auto again = cli({"search", "--q", "2", "--n", "4", "--k", "2", "--seed", "1", "--trials", "500", "--format", "csv", "--jobs", "2"});
  EXPECT_EQ(again.out, s.out);
}

TEST(Cli, DecodeLf) {
  const auto path = tmp_file("spread63b.json", cli({"spread", "--q", "2", "--n", "6", "--k", "3"}).out);
  const auto r = tmp_file("r63.txt", "100000\n000110\n010000\n");
  const auto d = cli({"decode", "--code", path, "--received", r, "--lf", "auto"});
  ASSERT_EQ(d.code, 0) << d.err;
  const auto j = json::parse(d.out);
  EXPECT_EQ(j["distance"], 2);
  EXPECT_EQ(j["unique"], true);
  EXPECT_EQ(j["codeword"], json({"100000", "011010", "000110"}));
  EXPECT_LE(j["candidates_examined"].get<int>(), 42);
  EXPECT_EQ(cli({"decode", "--code", path, "--received", r, "--lf", "x"}).code, 2);
  EXPECT_EQ(cli({"decode", "--code", path, "--received", r, "--lf", "3"}).code, 1);
}

TEST(Cli, LoopTable) {
  const auto t = cli({"decode", "--loop-table", "--q", "2", "--kmax", "6"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "k,f,exhaustive,lf\n4,0,15,4\n5,0,31,5\n6,1,63,21\n");
}

TEST(Cli, SelftestPasses) {
  const auto s = cli({"selftest"});
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_NE(s.out.find("all anchors passed"), std::string::npos);
  EXPECT_EQ(s.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"selftest", "--frobnicate"}).code, 2);
  EXPECT_EQ(cli({"spread", "--q", "2", "--n", "6"}).code, 2);
  EXPECT_EQ(cli({"analyze", "--code", "/nonexistent.json"}).code, 2);
  const auto path = tmp_file("diag2.json", kDiag);
  const auto s = cli({"search", "--code", path, "--k", "2"});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("--seed"), std::string::npos);
  EXPECT_EQ(cli({"simulate", "--code", path}).code, 2);
  EXPECT_EQ(cli({"search", "--q", "2", "--n", "4", "--k", "2", "--seed", "1", "--format", "xml"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(cli({"spread", "--q", "2", "--n", "6", "--k", "4"}).code, 1);
  const auto bad = tmp_file("bad.json", R"({"q": 2, "blocks": [{"poly": "1 1 0 0 1"}], "start": ["1000", "01z0"]})");
  const auto a = cli({"analyze", "--code", bad});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.err.find("start[1]"), std::string::npos) << a.err;
  const auto b = tmp_file("bad2.json", R"({"q": 2, "blocks": [{"poly": "1 1 0 0 1", "exp": "one"}], "start": ["1000"]})");
  const auto e = cli({"analyze", "--code", b});
  EXPECT_EQ(e.code, 1);
  EXPECT_NE(e.err.find("blocks[0].exp"), std::string::npos) << e.err;
  const auto notjson = tmp_file("bad3.json", "{ not json");
  EXPECT_EQ(cli({"analyze", "--code", notjson}).code, 1);
}
