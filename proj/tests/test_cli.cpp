#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numbergate/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = numbergate::cli::run(args, out, err);
  Run r{code, out.str(), err.str(), {}};
  if (!r.out.empty() && r.out.front() == '{') r.j = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("cli value: the canonical half") {
  Run r = cli({"value", "--game", "{0|1}"});
  CHECK(r.code == 0);
  CHECK(r.j["schema"] == "numbergate/1");
  CHECK(r.j["status"] == "ok");
  CHECK(r.j["result"]["value"] == "1/2");
  CHECK(r.j["result"]["outcome"] == "L");
  CHECK(r.j["result"]["canonical"] == "{0|1}");
}

TEST_CASE("cli value on a ruleset position") {
  Run r = cli({"value", "--ruleset", "hackenbush", "--seed", "br"});
  CHECK(r.code == 0);
  CHECK(r.j["result"]["position"] == "br");
  CHECK(r.j["result"]["value"] == "1/2");
  CHECK(r.j["result"]["outcome"] == "L");
}

TEST_CASE("cli outcome and canonical") {
  Run r = cli({"outcome", "--game", "{0|0}"});
  CHECK(r.code == 0);
  CHECK(r.j["result"]["outcome"] == "N");

  Run c = cli({"canonical", "--game", "{-2|0}"});
  CHECK(c.code == 0);
  CHECK(c.j["result"]["canonical"] == "{|0}");
}

TEST_CASE("cli sum") {
  Run r = cli({"sum", "--game", "{1|0}", "--game", "0"});
  CHECK(r.code == 0);
  CHECK(r.j["result"]["outcome"] == "N");
  CHECK(r.j["result"]["value"].is_null());
}

TEST_CASE("cli classify-pairs on the integer example") {
  Run r = cli({"classify-pairs", "--game", "{-2|0}"});
  CHECK(r.code == 0);
  REQUIRE(r.j["result"]["pairs"].size() == 1);
  const json& p = r.j["result"]["pairs"][0];
  CHECK(p["left"] == "-2");
  CHECK(p["right"] == "0");
  CHECK(p["f1"] == true);
  CHECK(p["f2"] == false);
  CHECK(p["f1_witness"]["option"] == "-1");
}

TEST_CASE("cli classify-pairs on the subtraction N-position") {
  Run r = cli({"classify-pairs", "--ruleset", "subtraction", "--seed", "n=2;L=1;R=2"});
  CHECK(r.code == 0);
  REQUIRE(r.j["result"]["pairs"].size() == 1);
  const json& p = r.j["result"]["pairs"][0];
  CHECK(p["f1"] == false);
  CHECK(p["f2"] == false);
  CHECK(p["left_position"] == "n=1;L=1;R=2");
  CHECK(p["right_position"] == "n=0;L=1;R=2");
}

TEST_CASE("cli closure-check: cutcake 3x3 is ok with the integer claim") {
  Run r = cli({"closure-check", "--ruleset", "cutcake", "--seed", "3x3"});
  CHECK(r.code == 0);
  CHECK(r.j["status"] == "ok");
  CHECK(r.j["result"]["all_integers_claim"] == true);
  CHECK(r.j["result"]["all_f2"] == true);
  CHECK(r.j["result"]["con_probe"]["verdict"] == "no-n-sum-found");
}

TEST_CASE("cli confirm-con: the subtraction witness makes the run 'violated'") {
  Run r = cli({"confirm-con", "--ruleset", "subtraction", "--seed", "n=2;L=1;R=2"});
  CHECK(r.code == 1);
  CHECK(r.j["status"] == "violated");
  CHECK(r.j["kind"] == "predicted-witness");
  CHECK(r.j["result"]["con_probe"]["verdict"] == "witness-found");
  CHECK(r.j["result"]["con_probe"]["witness"]["position"] == "n=2;L=1;R=2");
  CHECK(r.j["result"]["con_probe"]["witness"]["x"] == "0");
}

TEST_CASE("cli avoidance-probe") {
  Run r = cli({"avoidance-probe", "--number", "0", "--game", "*"});
  CHECK(r.code == 0);
  CHECK(r.j["result"]["passed"] == true);
}

TEST_CASE("cli parse errors exit with 3") {
  Run r = cli({"value", "--game", "{0|"});
  CHECK(r.code == 3);
  CHECK(r.j["status"] == "parse-error");

  Run s = cli({"value", "--ruleset", "nosuch", "--seed", "x"});
  CHECK(s.code == 3);

  Run t = cli({"value", "--game", "3/6"});
  CHECK(t.code == 3);
}

TEST_CASE("cli budget errors exit with 2") {
  Run r = cli({"closure-check", "--ruleset", "hackenbush", "--seed", "bbbbbb", "--max-positions",
               "3"});
  CHECK(r.code == 2);
  CHECK(r.j["status"] == "budget-exceeded");
}

TEST_CASE("cli reports are byte-deterministic") {
  auto args = std::vector<std::string>{"closure-check", "--ruleset", "subtraction", "--seed",
                                       "n=4;L=1,2;R=2"};
  Run a = cli(args);
  Run b = cli(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);

  Run c = cli({"value", "--game", "{0,*,{1|0}|{0|1/2}}"});
  Run d = cli({"value", "--game", "{0,*,{1|0}|{0|1/2}}"});
  CHECK(c.out == d.out);
}

TEST_CASE("cli emit-positions writes the closure in seed grammar") {
  std::string path = "emit_positions_test.txt";
  Run r = cli({"closure-check", "--ruleset", "subtraction", "--seed", "n=2;L=1;R=2",
               "--emit-positions", path});
  CHECK(r.code == 1);  // predicted witness
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(f, line)) lines.push_back(line);
  f.close();
  std::remove(path.c_str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "n=2;L=1;R=2");
  CHECK(lines[1] == "n=1;L=1;R=2");
  CHECK(lines[2] == "n=0;L=1;R=2");
}

TEST_CASE("cli text format") {
  Run r = cli({"value", "--game", "{0|1}", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.value: 1/2") != std::string::npos);
  CHECK(r.out.find("status: ok") != std::string::npos);
}

TEST_CASE("cli witnesses re-validate when fed back through the commands") {
  Run r = cli({"classify-pairs", "--game", "{-2|0}"});
  std::string witness = r.j["result"]["pairs"][0]["f1_witness"]["option"];
  std::string right = r.j["result"]["pairs"][0]["right"];
  CHECK(witness == "-1");
  CHECK(right == "0");
  // the recorded inequality is witness <= 0: its outcome must be R or P
  Run v = cli({"outcome", "--game", witness});
  CHECK(v.code == 0);
  CHECK((v.j["result"]["outcome"] == "R" || v.j["result"]["outcome"] == "P"));
}
