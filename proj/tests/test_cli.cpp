#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run xprod(const std::string& args) {
  const std::string cmd = std::string(XPROD_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("xprod-test-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ValidateFixtures) {
  for (const char* name : {"flip", "finite-shift", "trivial", "free-product", "cyclic-shift3", "matrix-flip"})
    EXPECT_EQ(xprod("validate -q " + fixture(name)).code, 0) << name;
  EXPECT_EQ(xprod("validate -q " + fixture("corrupted-flip")).code, 1);
}

TEST_F(Cli, NonmultiplicativeWitness) {
  const auto r = xprod("validate " + fixture("nonmult-z") + " --check multiplicative --json " + path("r.json"));
  EXPECT_EQ(r.code, 1);
  const auto j = Json::parse(slurp(path("r.json")));
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["verdict"] == "fail") found = found || c["witness"] == "D_2 ⊄ D_1";
  EXPECT_TRUE(found) << j.dump(2);
  EXPECT_EQ(j["summary"]["verdict"], "fail");
}

TEST_F(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(xprod("validate " + write("bad.json", "{ not json")).code, 2);
  EXPECT_EQ(xprod("validate " + path("missing.json")).code, 2);
  auto j = Json::parse(slurp(fixture("flip")));
  j["extra"] = 1;
  EXPECT_EQ(xprod("validate " + write("extra.json", j.dump())).code, 2);
  EXPECT_EQ(xprod("symbolic cuntz --n 0").code, 2);
  EXPECT_EQ(xprod("symbolic wh --qlo nope").code, 2);
  EXPECT_EQ(xprod("frobnicate").code, 2);
}

TEST_F(Cli, BuildDims) {
  auto r = xprod("build " + fixture("flip") + " --out " + path("flip.graded.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("dims {algebra: 4, 0: 2, 1: 2}"), std::string::npos) << r.out;
  r = xprod("build " + fixture("finite-shift") + " --out " + path("fs.graded.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("dims {algebra: 3, 0: 2, 1: 1}"), std::string::npos) << r.out;
  r = xprod("build " + fixture("trivial") + " --out " + path("t.graded.json"));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, LandstadRoundTripDeterministic) {
  ASSERT_EQ(xprod("build -q " + fixture("flip") + " --out " + path("flip.graded.json")).code, 0);
  const auto a = xprod("landstad " + path("flip.graded.json") + " --json " + path("a.json") + " --out " + path("rec.json"));
  EXPECT_EQ(a.code, 0) << a.out;
  const auto b = xprod("landstad -q " + path("flip.graded.json") + " --seed 7 --json " + path("b.json"));
  EXPECT_EQ(b.code, 0) << b.out;
  const auto ja = Json::parse(slurp(path("a.json"))), jb = Json::parse(slurp(path("b.json")));
  ASSERT_EQ(ja["checks"].size(), jb["checks"].size());
  for (std::size_t i = 0; i < ja["checks"].size(); ++i) EXPECT_EQ(ja["checks"][i]["verdict"], jb["checks"][i]["verdict"]);
  EXPECT_EQ(xprod("validate -q " + path("rec.json")).code, 0);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  ASSERT_EQ(xprod("build -q " + fixture("matrix-flip") + " --out " + path("m.graded.json")).code, 0);
  ASSERT_EQ(xprod("landstad -q " + path("m.graded.json") + " --json " + path("1.json")).code, 0);
  ASSERT_EQ(xprod("landstad -q " + path("m.graded.json") + " --json " + path("2.json")).code, 0);
  EXPECT_EQ(slurp(path("1.json")), slurp(path("2.json")));
}

TEST_F(Cli, DroppedDegreeFailsGeneration) {
  ASSERT_EQ(xprod("build -q " + fixture("free-product") + " --out " + path("fp.graded.json")).code, 0);
  EXPECT_EQ(xprod("landstad -q " + path("fp.graded.json")).code, 0);
  const auto r = xprod("landstad " + path("fp.graded.json") + " --drop g1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("generation"), std::string::npos) << r.out;
}

TEST_F(Cli, Symbolic) {
  EXPECT_EQ(xprod("symbolic cuntz --n 2 --depth 3 -q").code, 0);
  const auto r = xprod("symbolic wh --qlo z2n2 --window 3 --json " + path("wh.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = Json::parse(slurp(path("wh.json")));
  bool nica = false;
  for (const auto& c : j["checks"])
    if (c["name"].get<std::string>().find("W_{p∨q}") != std::string::npos) nica = c["verdict"] == "pass";
  EXPECT_TRUE(nica);
}

TEST_F(Cli, Version) {
  const auto r = xprod("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("xprod 1.0.0"), std::string::npos);
}
