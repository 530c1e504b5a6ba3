#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skewmorph");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = skewmorph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const fs::path& census_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "skewmorph_cli_census";
    fs::remove_all(d);
    const Result r = run({"census", "--max-n", "48", "--out", d.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    return d;
  }();
  return dir;
}

}  // namespace

TEST(Cli, InfoOnZ6) {
  const Result r = run({"info", "--n", "6", "--perm", "0,3,2,5,4,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n: 6\n"
            "images: 0,3,2,5,4,1\n"
            "order: 3\n"
            "powers: 1,2,1,2,1,2\n"
            "kernel: <2> of size 3\n"
            "automorphism: no\n"
            "complexity: 2\n"
            "auto-order: 2\n"
            "chain: 6,3,2\n"
            "derived: 0,2,1\n"
            "reduction: even complexity, h=3, alpha=0,2,1 on Z_3, beta=0,1,2 on Z_3 "
            "(restriction to <2>)\n");
}

TEST(Cli, InfoOnIdentity) {
  const Result r = run({"info", "--n", "4", "--perm", "0,1,2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("complexity: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("reduction: none (not proper)\n"), std::string::npos);
}

TEST(Cli, InfoRejectsNonSkew) {
  const Result r = run({"info", "--n", "4", "--perm", "0,2,1,3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.rfind("not a skew morphism: NotSkew", 0), 0u) << r.out;
  EXPECT_EQ(run({"info", "--n", "4", "--perm", "0,2,1"}).code, 1);
  EXPECT_EQ(run({"info", "--n", "4", "--perm", "0,x,1,2"}).code, 1);
}

TEST(Cli, ShowAndBrute) {
  const Result show = run({"show", "--n", "6", "--order", "3"});
  EXPECT_EQ(show.code, 0);
  EXPECT_EQ(show.out, "0,3,2,5,4,1\n0,5,2,1,4,3\n");
  const Result by_c = run({"show", "--n", "9", "--complexity", "3", "--census", census_dir().string()});
  EXPECT_EQ(by_c.code, 0);
  EXPECT_EQ(line_count(by_c.out), 4u);
  const Result brute = run({"brute", "--n", "5"});
  EXPECT_EQ(brute.code, 0);
  EXPECT_EQ(line_count(brute.out), 4u);
}

TEST(Cli, CensusWithVerification) {
  const fs::path d = fs::temp_directory_path() / "skewmorph_cli_verify";
  fs::remove_all(d);
  const Result r = run({"census", "--max-n", "12", "--out", d.string(), "--verify-upto", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("wrote 12 files to " + d.string() + " (", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("verify n=6: ok (4)\n"), std::string::npos);
  const Result v = run({"verify", "--census", d.string(), "--upto", "8"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(line_count(v.out), 8u);
  fs::remove_all(d);
}

TEST(Cli, CensusIntoUnwritableDirectory) {
  const fs::path blocker = fs::temp_directory_path() / "skewmorph_cli_blocker";
  fs::remove_all(blocker);
  { std::ofstream(blocker.string()) << "x"; }
  const Result r = run({"census", "--max-n", "5", "--out", (blocker / "d").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("IoFailure"), std::string::npos);
  fs::remove(blocker);
}

TEST(Cli, VerifyDetectsMismatch) {
  const fs::path d = fs::temp_directory_path() / "skewmorph_cli_mismatch";
  fs::remove_all(d);
  ASSERT_EQ(run({"census", "--max-n", "7", "--out", d.string()}).code, 0);
  {
    std::ofstream out(d / "n7.sm", std::ios::trunc);
    out << "skewmorph-census 1 n=7 count=1\n0,1,2,3,4,5,6\n";
  }
  const Result r = run({"verify", "--census", d.string(), "--upto", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("verify n=7: MISMATCH"), std::string::npos);
  fs::remove_all(d);
}

TEST(Cli, CheckTheorems) {
  const Result r = run({"check-theorems", census_dir().string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("prime-order (p=3,n=48): 2/2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("order-4 @48: 8/8"), std::string::npos);
  EXPECT_NE(r.out.find("Comp(Z_9) = {0,1,3}"), std::string::npos);
  EXPECT_NE(r.out.find("max complexity @27 = 5"), std::string::npos);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("all checks passed\n"), std::string::npos);
}

TEST(Cli, Stats) {
  const Result csv = run({"stats", "--max-n", "6"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out,
            "n,total,automorphisms,proper,max_complexity\n1,1,1,0,0\n2,1,1,0,0\n3,2,2,0,1\n"
            "4,2,2,0,1\n5,4,4,0,1\n6,4,2,2,2\n");
  const Result table = run({"stats", "--census", census_dir().string(), "--format", "table"});
  EXPECT_EQ(table.code, 0);
  EXPECT_EQ(line_count(table.out), 49u);
  EXPECT_EQ(run({"stats"}).code, 1);
  EXPECT_EQ(run({"stats", "--max-n", "5", "--format", "xml"}).code, 1);
}

TEST(Cli, DerivedClosure) {
  const Result r = run({"derived-closure", "--census", census_dir().string(), "--bound", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z_3 0,2,1: realized, smallest host n=6\n"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"brute"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "--census", "/nonexistent/skewmorph"}).code, 1);
  EXPECT_EQ(run({"brute", "--n", "40"}).code, 1);
}
