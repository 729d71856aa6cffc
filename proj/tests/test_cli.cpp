#include <sstream>

#include <gtest/gtest.h>

#include <grasscw/cli.hpp>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "grasscw");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = grasscw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, CellsListing) {
  const auto r = run({"cells", "--n", "3", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 9);
  EXPECT_EQ(r.out.substr(0, 7), "0 (~1)\n");
  const auto j = nlohmann::json::parse(run({"cells", "--n", "3", "--k", "1", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 9u);
  EXPECT_EQ(j[8]["dim"], 2);
}

TEST(Cli, HomologyOfProjectiveSpace) {
  const auto r = run({"homology", "--n", "5", "--k", "1", "--variant", "plain", "--coeff", "mod2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("betti 1 1 1 1 1\n"), std::string::npos);
  const auto z = run({"homology", "--n", "5", "--k", "1"});
  EXPECT_NE(z.out.find("H1 = Z/2\n"), std::string::npos);
}

TEST(Cli, ComplexTablesAreDeterministic) {
  const auto a = run({"complex", "--n", "4", "--k", "2", "--variant", "oriented", "--format", "text"});
  const auto b = run({"complex", "--n", "4", "--k", "2", "--variant", "oriented", "--format", "text"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("(14)(23)^+ -> "), std::string::npos);
  const auto j = nlohmann::json::parse(run({"complex", "--n", "3", "--k", "1", "--format", "json"}).out);
  EXPECT_EQ(j["variant"], "plain");
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("golden tables (36 rows): exact"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const auto bad = run({"verify", "--n", "4", "--k", "2", "--fixtures", "/nonexistent"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, Oracle) {
  const auto a = run({"oracle", "--n", "4", "--k", "2", "--seed", "3", "--samples", "50"});
  const auto b = run({"oracle", "--n", "4", "--k", "2", "--seed", "3", "--samples", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CoversListing) {
  const auto r = run({"covers", "--n", "3", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 16);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"cells", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"complex", "--n", "5", "--k", "2", "--variant", "projective"}).code, 2);
  EXPECT_EQ(run({"complex", "--n", "3", "--k", "1", "--variant", "weird"}).code, 2);
  const auto r = run({"cells", "--n", "3", "--k", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("hint"), std::string::npos);
}
