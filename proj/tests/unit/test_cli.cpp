#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using recurring::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("analyze") {
  const Run r = run({"analyze", "--t", "1,1", "--p", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  CHECK(j.at("period") == 20);
  CHECK(j.at("classification") == "ramified");
  CHECK(j.at("thm67_agree") == true);

  const Run one = run({"analyze", "--t", "1", "--p", "7", "--format", "json"});
  CHECK(nlohmann::json::parse(one.out).at("period") == 1);

  const Run degenerate = run({"analyze", "--t", "1,0", "--p", "5"});
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("DegenerateCore") != std::string::npos);

  CHECK(run({"analyze", "--t", "1,1", "--p", "6"}).code == 3);
  CHECK(run({"analyze", "--t", "1,1"}).code == 2);
  CHECK(run({"analyze", "--t", "1,x", "--p", "5"}).code == 2);
  CHECK(run({"analyze", "--t", "1,1", "--p", "5", "--format", "xml"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--t", "1,1", "--pmax", "31", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 11);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    CHECK((j.at("classification") == "ramified") == (j.at("p") == 5));
  }
  CHECK(r.err.find("agreement 11/11") != std::string::npos);

  for (const auto& l : lines(run({"sweep", "--t", "1", "--pmax", "10", "--format", "json"}).out))
    CHECK(nlohmann::json::parse(l).at("period") == 1);

  for (const auto& l : lines(run({"sweep", "--t", "0,-1", "--pmax", "13", "--format", "json"}).out)) {
    const auto j = nlohmann::json::parse(l);
    CHECK((j.at("classification") == "ramified") == (j.at("p") == 2));
  }

  const Run csv = run({"sweep", "--t", "1,1", "--pmax", "13", "--format", "csv"});
  CHECK(lines(csv.out).size() == 7);
  CHECK(run({"sweep", "--t", "1,1", "--pmax", "2000000"}).code == 2);
}

TEST_CASE("verify") {
  const Run a = run({"verify", "--k", "2", "--coeff-bound", "5", "--pmax", "31", "--trials", "100", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out.find(" 0 failed") != std::string::npos);
  CHECK(run({"verify", "--k", "1", "--coeff-bound", "3", "--pmax", "13", "--trials", "10", "--seed", "1"}).code == 0);

  const std::vector<std::string> args{"verify", "--k", "3", "--coeff-bound", "4", "--pmax", "19",
                                      "--trials", "30", "--seed", "9", "--format", "json"};
  setenv("RECURRING_THREADS", "1", 1);
  const Run one = run(args);
  setenv("RECURRING_THREADS", "4", 1);
  const Run four = run(args);
  unsetenv("RECURRING_THREADS");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(nlohmann::json::parse(one.out).at("failed") == 0);
}

TEST_CASE("sequence") {
  const Run r = run({"sequence", "--t", "1,1", "--from", "0", "--to", "5", "--format", "csv"});
  CHECK(r.out == "n,F,G\n0,1,2\n1,1,1\n2,2,3\n3,3,4\n4,5,7\n5,8,11\n");

  const Run cp4 = run({"sequence", "--t", "0,-1", "--from", "-4", "--to", "4", "--format", "json"});
  const auto ls = lines(cp4.out);
  REQUIRE(ls.size() == 9);
  for (std::size_t i = 0; i + 4 < ls.size(); ++i)
    CHECK(nlohmann::json::parse(ls[i]).at("F") == nlohmann::json::parse(ls[i + 4]).at("F"));

  const Run nonunit = run({"sequence", "--t", "1,2", "--from", "-2", "--to", "2"});
  CHECK(nonunit.code == 3);
  CHECK(nonunit.err.find("NonUnitTrailing") != std::string::npos);
  const Run singular = run({"sequence", "--t", "1,2", "--from", "-2", "--to", "2", "--mod", "2"});
  CHECK(singular.code == 3);
  CHECK(singular.err.find("SingularCompanion") != std::string::npos);
  CHECK(run({"sequence", "--t", "1,2", "--from", "-2", "--to", "2", "--mod", "3"}).code == 0);
  CHECK(run({"sequence", "--t", "1,1", "--from", "3", "--to", "1"}).code == 2);
}

TEST_CASE("orbit") {
  const Run r = run({"orbit", "--t", "1,1", "--p", "2", "--m", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1, 0)\n(0, 1)\n(1, 1)\nlength 3\n");
  const Run s = run({"orbit", "--t", "1,2", "--p", "2", "--m", "1,0"});
  CHECK(s.out == "(1, 0)\n(0, 1)\nlength 2\npreperiod 1\nperiod 1\n");
  CHECK(run({"orbit", "--t", "1,1", "--p", "2", "--m", "1"}).code == 2);
}

TEST_CASE("--out redirects machine output") {
  const auto path = std::filesystem::temp_directory_path() / "recurring_cli_test.jsonl";
  const Run r = run({"analyze", "--t", "1,1", "--p", "2,3", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(lines(buf.str()).size() == 2);
  std::filesystem::remove(path);
}
