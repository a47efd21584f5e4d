#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "latknot/io.hpp"
#include "latknot/torus.hpp"

namespace latknot {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latknot_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto path = (dir_ / name).string();
    write_text_file(path, content);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kSquareCsv = "0,0,0\n1,0,0\n1,1,0\n0,1,0\n";

TEST_F(CliTest, GenerateTrefoil) {
  const auto r = run({"generate", "--p", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, tabulation_to_json(generate_torus_tabulation(2)));
}

TEST_F(CliTest, GenerateToFileHasSixPTypes) {
  EXPECT_EQ(run({"generate", "--p", "7", "-o", path("t7.json")}).code, 0);
  EXPECT_EQ(tabulation_from_json(read_text_file(path("t7.json"))).types.size(), 42U);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"generate", "--p", "1"}).code, 2);
  EXPECT_EQ(run({"generate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"export", path("missing.csv"), "--format", "png"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ValidateTorus) {
  run({"generate", "--p", "5", "-o", path("t5.json")});
  const auto r = run({"validate", path("t5.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("simple, closed, 30 sticks, length 138"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, ValidateTamperedTable) {
  auto tab = generate_torus_tabulation(2);
  std::swap(tab.lengths[0][0], tab.lengths[0][1]);
  const auto r = run({"validate", file("bad.json", tabulation_to_json(tab))});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("SelfIntersection"), std::string::npos);
  EXPECT_NE(r.err.find("(3,1,2)"), std::string::npos);
}

TEST_F(CliTest, ValidateEmptyAndMalformed) {
  const auto empty = run({"validate", file("empty.csv", "")});
  EXPECT_EQ(empty.code, 2);
  EXPECT_NE(empty.err.find("parse error"), std::string::npos);
  const auto bad = run({"validate", file("bad.json", "{\"types\": [\n}")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, DistortionValues) {
  EXPECT_EQ(run({"distortion", file("sq.csv", kSquareCsv)}).out, "1/1\n");
  run({"generate", "--p", "4", "-o", path("t4.json")});
  const auto r = run({"distortion", path("t4.json"), "--oracle", "--pairs"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "41/1");
  EXPECT_NE(r.out.find("oracle agrees"), std::string::npos);
  EXPECT_NE(r.out.find("pair "), std::string::npos);
  run({"generate", "--p", "14", "-o", path("t14.json")});
  EXPECT_EQ(run({"distortion", path("t14.json"), "--threads", "4"}).out, "485/1\n");
}

TEST_F(CliTest, ReduceRectangle) {
  const auto r = run({"reduce", file("rect.csv", "0,0,0\n3,0,0\n3,1,0\n0,1,0\n"), "--stick", "0", "--direction",
                      "with", "--amount", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x,y,z,critical\n1,0,0,1\n2,0,0,0\n3,0,0,1\n3,1,0,1\n2,1,0,0\n1,1,0,1\n");
}

TEST_F(CliTest, ReduceCollision) {
  run({"generate", "--p", "3", "-o", path("t3.json")});
  const auto r = run({"reduce", path("t3.json"), "--stick", "0", "--amount", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("CollisionDetected"), std::string::npos);
  EXPECT_NE(r.err.find("(0,2,1)"), std::string::npos);
}

TEST_F(CliTest, CheckIrreducible) {
  run({"generate", "--p", "3", "-o", path("t3.json")});
  EXPECT_EQ(run({"reduce", path("t3.json"), "--check-irreducible"}).out, "irreducible\n");
  const auto r = run({"reduce", file("rect.csv", "0,0,0\n3,0,0\n3,1,0\n0,1,0\n"), "--check-irreducible"});
  EXPECT_EQ(r.out.substr(0, 10), "reducible\n");
  EXPECT_EQ(run({"reduce", path("t3.json")}).code, 2);
}

TEST_F(CliTest, ExportFormats) {
  const auto sq = file("sq.csv", kSquareCsv);
  EXPECT_EQ(run({"export", sq, "--format", "obj"}).out, "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nl 1 2 3 4 1\n");
  const auto csv = run({"export", sq, "--format", "csv"}).out;
  const auto again = run({"export", file("sq2.csv", csv), "--format", "csv"}).out;
  EXPECT_EQ(csv, again);
  const auto json = run({"export", sq, "--format", "json"}).out;
  EXPECT_EQ(json, R"({"types":["x+","y+","x-","y-"],"lengths":{"x":[1,1],"y":[1,1],"z":[]},"origin":[0,0,0]})"
                  "\n");
  run({"generate", "--p", "7", "-o", path("t7.json")});
  run({"export", path("t7.json"), "--format", "obj", "-o", path("t7.obj")});
  const auto obj = read_text_file(path("t7.obj"));
  EXPECT_EQ(std::count(obj.begin(), obj.end(), 'v'), 264);
}

TEST_F(CliTest, SurveyRows) {
  const auto r = run({"survey", "--max-p", "12", "--min-p", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n6,196,36,89,89,MATCH,"), std::string::npos);
  EXPECT_NE(r.out.find("\n9,430,54,211,779/4,MISMATCH,211,MATCH,"), std::string::npos);
  EXPECT_NE(r.out.find("\n12,754,72,349,341,MISMATCH,1525/4,MISMATCH,349,MATCH\n"), std::string::npos);
  const auto even = run({"survey", "--max-p", "8", "--even-formulas"});
  EXPECT_EQ(std::count(even.out.begin(), even.out.end(), '\n'), 5);  // header + p = 2, 4, 6, 8
  EXPECT_EQ(run({"survey", "--max-p", "30"}).code, 2);
}

TEST_F(CliTest, EnumerateCountsAndGolden) {
  EXPECT_EQ(run({"enumerate", "--max-length", "8"}).out, "length,classes\n4,1\n6,3\n8,11\n");
  const auto r = run({"enumerate", "--max-length", "12", "--distortion-one", "--out-dir", path("g")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "length,index,sticks,structure,file\n4,1,4,ok,delta_one_len04_1.csv\n6,1,6,ok,delta_one_len06_1.csv\n");
  for (const auto& name : {"delta_one_len04_1.csv", "delta_one_len06_1.csv"}) {
    EXPECT_EQ(read_text_file(path("g") + "/" + name),
              read_text_file(std::string(LATKNOT_GOLDEN_DIR) + "/distortion_one/" + name));
  }
  EXPECT_EQ(run({"enumerate", "--max-length", "18"}).code, 2);
}

}  // namespace
}  // namespace latknot
