#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run nilsys_run(std::vector<std::string> args) {
  args.insert(args.begin(), "nilsys");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = nilsys::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &file) { return std::string(NILSYS_TEST_DATA) + "/" + file; }

bool has(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, InfoL55) {
  auto r = nilsys_run({"info", "--catalog", "l55"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "series          123/4/5"));
  EXPECT_TRUE(has(r.out, "D               8\n"));
  EXPECT_TRUE(has(r.out, "class           3\n"));
  EXPECT_TRUE(has(r.out, "k_c             3/2\n"));
}

TEST(Cli, InfoWitt) {
  auto r = nilsys_run({"info", "--catalog", "witt", "--param", "n=6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "D               16\n"));
}

TEST(Cli, JacobiViolationIsInputError) {
  auto r = nilsys_run({"info", data("bad.alg")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out + r.err, "JacobiViolation"));
  EXPECT_TRUE(has(r.out + r.err, "(e1, e2, e3)"));
}

TEST(Cli, UnknownCatalogEntry) {
  EXPECT_EQ(nilsys_run({"info", "--catalog", "nope"}).code, 2);
  EXPECT_EQ(nilsys_run({"info", "--catalog", "witt", "--param", "n=40"}).code, 2);
}

TEST(Cli, Bounds) {
  auto f = nilsys_run({"bounds", "--catalog", "filiform7"});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_TRUE(has(f.out, "h_lower         3/2\n"));
  EXPECT_TRUE(has(f.out, "h_upper         3/2\n"));
  EXPECT_TRUE(has(f.out, "witness         r=4 subring yes"));

  auto h = nilsys_run({"bounds", "--catalog", "heisenberg", "--param", "n=1"});
  EXPECT_EQ(h.code, 0);
  EXPECT_TRUE(has(h.out, "h_lower         0\n"));
  EXPECT_TRUE(has(h.out, "h_upper         0\n"));

  auto c = nilsys_run({"bounds", "--catalog", "central_product", "--param", "k=4,n=3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(has(c.out, "h_lower         3\n"));
  EXPECT_TRUE(has(c.out, "h_upper         3\n"));
}

TEST(Cli, BoundsJson) {
  auto r = nilsys_run({"bounds", "--catalog", "filiform7", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_TRUE(has(r.out, "\"3/2\""));
}

TEST(Cli, VerifyDiagonalLattice) {
  auto r = nilsys_run({"verify", "--catalog", "l55", "--lattice", data("l55_xi16.lat"), "--r", "16"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "subring         yes"));
  EXPECT_TRUE(has(r.out, "systole         16\n"));
  EXPECT_TRUE(has(r.out, "covolume        68719476736\n"));  // 16^9
}

TEST(Cli, VerifyReportsClosureFailure) {
  auto r = nilsys_run({"verify", "--catalog", "l55", "--lattice", data("identity5.lat"), "--r", "16"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "ClosureFailure: [e2,e3]"));
}

TEST(Cli, VerifyBadR) {
  EXPECT_EQ(nilsys_run({"verify", "--catalog", "l55", "--lattice", data("identity5.lat"), "--r", "-2"})
                .code,
            2);
}

TEST(Cli, Report) {
  auto ok = nilsys_run({"report", "--filter", "heisenberg"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_TRUE(has(ok.out, "heisenberg(n=3)"));
  EXPECT_FALSE(has(ok.out, "NO"));

  auto ablated = nilsys_run({"report", "--filter", "central_product", "--disable-constraints", "D"});
  EXPECT_EQ(ablated.code, 1);
  EXPECT_TRUE(has(ablated.out, "NO"));

  auto empty = nilsys_run({"report", "--filter", "no-such-entry"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(has(empty.out, "entry"));
}

TEST(Cli, CatalogListing) {
  auto r = nilsys_run({"catalog", "--list"});
  EXPECT_EQ(r.code, 0);
  for (const char *name : {"heisenberg", "l55", "l56", "filiform7", "witt", "central_product"})
    EXPECT_TRUE(has(r.out, name)) << name;
}
