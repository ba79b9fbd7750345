#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rperm_cli/app.hpp"
#include "rperm_cli/verify.hpp"

using namespace rperm::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const Outcome r = invoke(std::move(args));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, GenfunIncreasingThree) {
  const json j = invoke_json({"genfun", "--tau", "1,2,3"});
  EXPECT_EQ(j["F"]["num"], json::array({"1", "-1"}));
  EXPECT_EQ(j["F"]["den"], json::array({"1", "-2"}));
  EXPECT_EQ(j["M"]["num"], json::array({"1", "1"}));
  EXPECT_TRUE(j.contains("E"));
  EXPECT_TRUE(j.contains("O"));
  EXPECT_EQ(j["series"]["F"][3], "4");
}

TEST(Cli, OracleEvenCount) {
  const json j = invoke_json({"oracle", "--n", "3", "--avoid", "1,3,2", "--parity", "even"});
  EXPECT_EQ(j["even"], 3);
  EXPECT_FALSE(j.contains("odd"));
}

TEST(Cli, OracleBothAndContain) {
  const json j = invoke_json({"oracle", "--n", "3", "--contain", "123:1"});
  EXPECT_EQ(j["even"], 1);
  EXPECT_EQ(j["odd"], 0);
  EXPECT_EQ(j["total"], 1);
  const json k = invoke_json({"oracle", "--n", "3", "--avoid", "123"});
  EXPECT_EQ(k["total"], 4);
}

TEST(Cli, OracleCsvDistribution) {
  const Outcome r = invoke({"--format", "csv", "oracle", "--n", "3", "--stat", "rlm"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "value,even,odd,total\n1,1,1,2\n2,2,0,2\n3,0,1,1\n");
}

TEST(Cli, Decompose) {
  const json j = invoke_json({"decompose", "--tau", "3412"});
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["prefixes"], json::array({"", "1", "3412"}));
  EXPECT_EQ(j["suffixes"], json::array({"3412", "12", ""}));
  EXPECT_EQ(invoke({"decompose", "--tau", "132"}).code, kExitUsage);
}

TEST(Cli, Chebyshev) {
  const json j = invoke_json({"chebyshev", "--n", "2", "--k", "3"});
  EXPECT_EQ(j["U"], json::array({"-1", "0", "4"}));
  EXPECT_EQ(j["W"], json::array({"1", "-1"}));
  const json v = invoke_json({"chebyshev", "verify", "--max-k", "10", "--max-pq", "4"});
  EXPECT_EQ(v["summary"]["fail"], 0);
}

TEST(Cli, Series) {
  const json c = invoke_json({"series", "--of", "catalan", "--order", "5"});
  EXPECT_EQ(c["C"], json::array({"1", "1", "2", "5", "14", "42"}));
  const json f = invoke_json({"series", "--of", "ratfunc", "--num", "1", "--den", "1,-1", "--order", "3"});
  EXPECT_EQ(f["f"], json::array({"1", "1", "1", "1"}));
}

TEST(Cli, VerifyIncreasingAllPass) {
  const Outcome r = invoke({"verify", "--family", "increasing", "--max-k", "4", "--max-n", "12"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_GT(j["summary"]["pass"].get<int>(), 0);
  for (const auto& c : j["checks"]) EXPECT_FALSE(c.contains("runtime_ms"));
}

TEST(Cli, SeedReportKeepsTimings) {
  const auto path = std::filesystem::temp_directory_path() / "rperm_seed_report.json";
  const Outcome r = invoke({"verify", "--family", "rlm", "--max-n", "6", "--seed-report", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::ifstream f(path);
  const json j = json::parse(f);
  ASSERT_FALSE(j["checks"].empty());
  EXPECT_TRUE(j["checks"][0].contains("runtime_ms"));
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "--n", "15"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "--n", "3", "--parity", "sideways"}).code, kExitUsage);
  EXPECT_EQ(invoke({"genfun", "--tau", "1,2,3,4,5,6,7,8,9,10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"genfun", "--tau", "12", "--order", "31"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--family", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "yaml", "series", "--of", "catalan"}).code, kExitUsage);
}

TEST(Cli, UnsafeBoundsLiftsLimits) {
  EXPECT_EQ(invoke({"--unsafe-bounds", "genfun", "--tau", "12", "--order", "31"}).code, kExitOk);
}

TEST(Cli, ExitCodeForFailingReport) {
  Report report;
  report.add({"demo", json::object(), "source", "1", "1", Verdict::kPass, 0});
  EXPECT_EQ(exit_code_for(report), kExitOk);
  report.add({"demo", json::object(), "source", "1", "2", Verdict::kPaperDiscrepancy, 0});
  EXPECT_EQ(exit_code_for(report), kExitOk);
  report.add({"demo", json::object(), "source", "1", "2", Verdict::kFail, 0});
  EXPECT_EQ(exit_code_for(report), kExitVerificationFailed);
  EXPECT_EQ(report.to_json(false)["summary"]["fail"], 1);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--family", "kd", "--max-k", "5", "--max-n", "8"},
        std::vector<std::string>{"--format", "csv", "verify", "--family", "wedge", "--max-k", "5", "--max-n", "8"},
        std::vector<std::string>{"genfun", "--tau", "2,1,3"}}) {
    const Outcome a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, NoFloatsInJson) {
  const json j = invoke_json({"verify", "--family", "contain-once", "--max-k", "2", "--max-n", "8"});
  std::function<void(const json&)> walk = [&](const json& v) {
    EXPECT_FALSE(v.is_number_float());
    if (v.is_structured())
      for (const auto& c : v) walk(c);
  };
  walk(j);
}

TEST(Cli, Families) {
  const auto& names = family_names();
  for (const char* want : {"increasing", "kd", "wedge", "213k", "contain-once", "contain-eqs", "rlm", "two-restrict",
                           "gk-xy"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

#ifdef RPERM_CLI_BINARY
TEST(CliBinary, ExitCodesFromProcess) {
  auto status_of = [](const std::string& args) {
    const std::string cmd = std::string(RPERM_CLI_BINARY) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status_of("oracle --n 3 --avoid 1,3,2 --parity even"), kExitOk);
  EXPECT_EQ(status_of("oracle --n 99"), kExitUsage);
  EXPECT_EQ(status_of("verify --family increasing --max-k 3 --max-n 10"), kExitOk);
}

TEST(CliBinary, PrintsJson) {
  const std::string cmd = std::string(RPERM_CLI_BINARY) + " oracle --n 3 --avoid 1,3,2 --parity even";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  ASSERT_TRUE(pipe);
  std::string text;
  std::array<char, 256> buf{};
  while (fgets(buf.data(), buf.size(), pipe.get())) text += buf.data();
  EXPECT_EQ(json::parse(text)["even"], 3);
}
#endif
