#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "metricvote/cli.hpp"
#include "metricvote/json_io.hpp"

namespace metricvote {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "metricvote");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("metricvote_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, AggregatePlurality) {
  const auto in = write("e.json", R"({"setting":"plurality","alternatives":["a","b"],"voters":["a","a","b"]})");
  const auto out = (dir_ / "r.json").string();
  const auto r = cli({"aggregate", "--input", in, "--method", "lp", "--p", "1", "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto result = Json::parse(read("r.json"));
  EXPECT_EQ(result["winners"], Json::parse(R"(["a"])"));
  EXPECT_EQ(result["objective"], 1.0);
  EXPECT_EQ(result["unique"], true);
  EXPECT_TRUE(result["witness"].is_null());
}

TEST_F(CliTest, AggregateWritesToStdoutAndIsDeterministic) {
  const auto in = write("e.json", R"({"setting":"budget","voters":[{"a":0.7,"b":0.3},{"b":0.5,"c":0.5},{"c":1}]})");
  const auto first = cli({"aggregate", "--input", in, "--method", "condorcet", "--seed", "9"});
  const auto second = cli({"aggregate", "--input", in, "--method", "condorcet", "--seed", "9"});
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_FALSE(Json::parse(first.out)["witness"].is_null());
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
  const auto bad = write("bad.json", R"({"setting":"ranking","alternatives":["a","b"],"voters":[["a","b","a"]]})");
  EXPECT_EQ(cli({"aggregate", "--input", bad, "--method", "lp"}).code, kExitValidation);
  const auto good = write("good.json", R"({"setting":"line","voters":[0,1]})");
  EXPECT_EQ(cli({"aggregate", "--input", good, "--method", "lp", "--p", "0.5"}).code, kExitValidation);
  EXPECT_EQ(cli({"aggregate", "--input", good, "--method", "median"}).code, kExitValidation);
  EXPECT_EQ(cli({"aggregate", "--input", (dir_ / "missing.json").string(), "--method", "lp"}).code,
            kExitValidation);
  EXPECT_EQ(cli({"aggregate", "--method", "lp"}).code, kExitValidation);
  EXPECT_EQ(write("junk.json", "{not json"), (dir_ / "junk.json").string());
  EXPECT_EQ(cli({"aggregate", "--input", (dir_ / "junk.json").string(), "--method", "lp"}).code, kExitValidation);
}

TEST_F(CliTest, GuardsExitThree) {
  std::string alts, voter;
  for (int i = 0; i < 10; ++i) {
    if (i) alts += ",", voter += ",";
    alts += "\"x" + std::to_string(i) + "\"";
    voter += "\"x" + std::to_string(9 - i) + "\"";
  }
  const auto in = write("big.json", R"({"setting":"ranking","alternatives":[)" + alts + R"(],"voters":[[)" +
                                        voter + "]]}");
  const auto r = cli({"aggregate", "--input", in, "--method", "lp", "--p", "inf"});
  EXPECT_EQ(r.code, kExitGuard);
  EXPECT_NE(r.err.find("limit"), std::string::npos);
}

TEST_F(CliTest, VerifyMatchesOracle) {
  const auto in = write("c.json", R"({"setting":"committee","alternatives":["a","b","c"],
      "voters":[[],[],["a","b"],["a","c"],["b","c"]]})");
  for (const char* method : {"condorcet", "lp", "reduced-lp"})
    for (const char* p : {"1", "2", "inf"})
      EXPECT_EQ(cli({"verify", "--input", in, "--method", method, "--p", p}).code, kExitOk) << method << " " << p;
  const auto line = write("l.json", R"({"setting":"line","voters":[0,0.5,3]})");
  EXPECT_EQ(cli({"verify", "--input", line, "--method", "lp", "--p", "3"}).code, kExitOk);
}

TEST_F(CliTest, VerifyReportsPipelineMismatch) {
  // Phase 2 ties two orders that differ in the document metric at p = 2.
  const auto in = write("d.json", R"({"setting":"legislation","voters":[["c","b"],["a","c","b"],["c","a"]]})");
  const auto r = cli({"verify", "--input", in, "--method", "lp", "--p", "2"});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_EQ(Json::parse(r.out)["match"], false);
  EXPECT_EQ(cli({"verify", "--input", in, "--method", "lp", "--p", "1"}).code, kExitOk);
}

TEST_F(CliTest, DistanceQueries) {
  auto r = cli({"distance", "--setting", "legislation", "--x", R"(["s1","s2","s3"])", "--y", R"(["s3","s1"])",
                "--ell", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.1111111111111112\n");
  r = cli({"distance", "--setting", "ranking", "--x", R"(["a","b","c"])", "--y", R"(["c","b","a"])"});
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(cli({"distance", "--setting", "budget", "--x", "[1,0]", "--y", "[0,0,1]"}).code, kExitValidation);
}

TEST_F(CliTest, OutlierCurveRows) {
  const auto r = cli({"figure1", "--n", "101", "--p-grid", "1.5:3:0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "p,consensus_outlier,polarized");
  std::vector<std::string> rows;
  while (std::getline(lines, row)) rows.push_back(row);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1], "2,0.009900990099,0.009900990099");
  EXPECT_EQ(cli({"figure1", "--n", "100"}).code, kExitValidation);
}

TEST_F(CliTest, AxiomsSuiteWritesJson) {
  const auto out = (dir_ / "t.json").string();
  const auto r = cli({"axioms", "--suite", "table1", "--trials", "20", "--seed", "3", "--output", out});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto report = Json::parse(read("t.json"));
  EXPECT_TRUE(report.contains("cells"));
  EXPECT_EQ(cli({"axioms", "--suite", "table2"}).code, kExitValidation);
}

TEST_F(CliTest, BinaryExitCodes) {
  const auto in = write("e.json", R"({"setting":"plurality","alternatives":["a","b"],"voters":["a","a","b"]})");
  const auto run = [](const std::string& args) {
    const std::string cmd = std::string(METRICVOTE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  EXPECT_EQ(run("aggregate --input " + in + " --method lp"), 0);
  EXPECT_EQ(run("aggregate --input " + in + " --method nope"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
}

}  // namespace
}  // namespace metricvote
