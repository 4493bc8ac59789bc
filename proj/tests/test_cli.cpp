#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pscode/cli.hpp"
#include "pscode/report.hpp"

using namespace pscode;

namespace {

RunConfig code_config(Command c, std::size_t nu, std::size_t s, std::size_t m0, std::size_t s0) {
  RunConfig cfg;
  cfg.command = c;
  cfg.nu = nu;
  cfg.s = s;
  cfg.m0 = m0;
  cfg.s0 = s0;
  return cfg;
}

struct Outcome {
  int code;
  std::string out;
  std::string log;
};

Outcome run_capture(const RunConfig& cfg) {
  std::ostringstream out, log;
  const int code = run(cfg, out, log);
  return {code, out.str(), log.str()};
}

}  // namespace

TEST_CASE("attack on PS-B") {
  const auto r = run_capture(code_config(Command::Attack, 3, 2, 6, 2));
  CHECK(r.code == exit_code::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["schemaVersion"] == 1);
  const auto& t2 = doc["theorem2"];
  CHECK(t2["pass"] == true);
  CHECK(t2["P_I"]["value"] == "1/4");
  CHECK(t2["P_S"]["value"] == "1/2");
  CHECK(t2["P_T"]["value"] == "1/2");
  CHECK(t2["P_R0"]["value"] == "1/4");
  CHECK(t2["P_R1"]["value"] == "1/2");
  CHECK(t2["P_S"]["witnessK"] == 3);
  CHECK(r.log.find("FAIL") == std::string::npos);
}

TEST_CASE("attack on PS-A reports nulls as not applicable") {
  const auto r = run_capture(code_config(Command::Attack, 2, 2, 4, 1));
  CHECK(r.code == exit_code::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["theorem2"]["P_I"]["value"] == "1/1");
  CHECK(doc["theorem2"]["P_S"]["value"].is_null());
  CHECK(doc["theorem2"]["P_S"]["match"].is_null());
  CHECK(r.log.find("N/A") != std::string::npos);
}

TEST_CASE("count") {
  RunConfig cfg;
  cfg.command = Command::Count;
  cfg.m = 2;
  cfg.s = 1;
  cfg.n = 4;
  const auto r = run_capture(cfg);
  CHECK(r.code == exit_code::kOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["N"] == "20");
  CHECK(doc["oracle"] == "20");
  CHECK(doc["gaussianBinomial"] == "35");
  CHECK(doc["match"] == true);

  cfg.n = 3;
  CHECK(run_capture(cfg).code == exit_code::kUsage);
}

TEST_CASE("validate") {
  const auto bad = run_capture(code_config(Command::Validate, 3, 2, 5, 2));
  CHECK(bad.code == exit_code::kUsage);
  const auto doc = Json::parse(bad.out);
  CHECK(doc["valid"] == false);
  CHECK(doc["errors"][0]["rule"] == "m0>=2s0+2");

  const auto good = run_capture(code_config(Command::Validate, 3, 2, 6, 2));
  CHECK(good.code == exit_code::kOk);
  CHECK(Json::parse(good.out)["valid"] == true);

  CHECK(run_capture(code_config(Command::Build, 3, 2, 5, 2)).code == exit_code::kUsage);
}

TEST_CASE("invalid modulus is a usage error") {
  auto cfg = code_config(Command::Validate, 3, 2, 6, 2);
  cfg.qExp = 2;
  cfg.modulus = 0b101;  // x^2 + 1 = (x + 1)^2
  const auto r = run_capture(cfg);
  CHECK(r.code == exit_code::kUsage);
  CHECK_FALSE(r.log.empty());
}

TEST_CASE("report layout and determinism") {
  const auto cfg = code_config(Command::Report, 3, 2, 6, 2);
  const auto a = run_capture(cfg);
  const auto b = run_capture(cfg);
  CHECK(a.code == exit_code::kOk);
  auto da = Json::parse(a.out);
  auto db = Json::parse(b.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : da.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schemaVersion", "params", "theorem1", "lemma6", "lemma8", "lemma9",
                                         "lemma10", "theorem2", "runtimeMillis"});
  CHECK(da["runtimeMillis"].is_number());
  da.erase("runtimeMillis");
  db.erase("runtimeMillis");
  CHECK(da.dump() == db.dump());
}

TEST_CASE("build output is byte-identical across runs") {
  const auto cfg = code_config(Command::Build, 3, 2, 6, 2);
  const auto a = run_capture(cfg);
  const auto b = run_capture(cfg);
  CHECK(a.code == exit_code::kOk);
  CHECK(a.out == b.out);
  const auto doc = Json::parse(a.out);
  CHECK(doc["sizes"]["M"] == "320");
  CHECK(doc["M"].size() == 320);
}

TEST_CASE("verify exits zero iff every check passes") {
  auto cfg = code_config(Command::Verify, 3, 2, 6, 2);
  cfg.format = Format::Csv;
  const auto r = run_capture(cfg);
  CHECK(r.code == exit_code::kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "section,item,expected,observed,pass");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "true");
  }
  CHECK(rows > 10);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "pscode_cli_test.json";
  auto cfg = code_config(Command::Attack, 2, 2, 4, 1);
  cfg.outputPath = path.string();
  const auto r = run_capture(cfg);
  CHECK(r.code == exit_code::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = Json::parse(in);
  CHECK(doc["theorem2"]["pass"] == true);
  std::filesystem::remove(path);
}
