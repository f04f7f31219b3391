#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "spinfold/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = spinfold::cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("decompose json output") {
  auto r = run_cli({"decompose", "--mu", "2,1", "--nu", "2,1", "--format", "json"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == "spinfold/1");
  REQUIRE(j["constituents"].size() == 1);
  CHECK(j["constituents"][0]["lambda"] == json::array({4, 2}));
  CHECK(j["constituents"][0]["variant"] == "self");
  CHECK(j["constituents"][0]["mult"] == 2);
}

TEST_CASE("decompose text output with unresolved constituent") {
  auto r = run_cli({"decompose", "--mu", "2,1", "--nu", "3", "--ascii"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "<5,1>  x1\n<4,2>  x1\n<3,2,1> or <3,2,1>a  x1\n");
}

TEST_CASE("decompose csv output") {
  auto r = run_cli({"decompose", "--mu", "2,1", "--nu", "2,1", "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "lambda,variant,mult\n\"4,2\",self,2\n");
}

TEST_CASE("branch up and down") {
  auto r = run_cli({"branch", "--lambda", "3,2", "--ascii"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "<4,2>  x1\n<3,2,1>  x1\n");

  r = run_cli({"branch", "--lambda", "3,2", "--variant", "a", "--ascii"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "<4,2>  x1\n<3,2,1>a  x1\n");

  r = run_cli({"branch", "--lambda", "3,1", "--down", "--ascii"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "<3>  x1\n<2,1>  x1\n<2,1>a  x1\n");

  // An even shape is self-associate; every variant spelling is the same label.
  CHECK(run_cli({"branch", "--lambda", "4,2", "--variant", "a", "--ascii"}).out ==
        run_cli({"branch", "--lambda", "4,2", "--ascii"}).out);
}

TEST_CASE("stcoeff and degree") {
  auto r = run_cli({"stcoeff", "--lambda", "4,2", "--mu", "2,1", "--nu", "2,1"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "1\n");

  r = run_cli({"stcoeff", "--lambda", "4,2", "--mu", "2,1", "--nu", "2,1", "--print-tableaux"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "1\n.  .  1  1\n   .  2\n\n");

  r = run_cli({"degree", "--lambda", "6,2,1"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "240\n");

  r = run_cli({"degree", "--lambda", "6,2,1", "--format", "json"});
  json j = json::parse(r.out);
  CHECK(j["degree"] == 240);
}

TEST_CASE("classify") {
  auto r = run_cli({"classify", "--mu", "4,3,2,1", "--nu", "2,1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("multiplicity-free: yes") == 0);

  r = run_cli({"classify", "--mu", "2,1", "--nu", "2,1"});
  CHECK(r.out == "multiplicity-free: no\n");

  r = run_cli({"classify", "--lambda", "6,5,2,1"});
  CHECK(r.out == "hook_staircase(fat=(6,5), stair=(2,1))\n");

  r = run_cli({"classify", "--lambda", "5,4,3"});
  CHECK(r.out == "fat_staircase(k=3, r=2)\n");
}

TEST_CASE("triples table contains the exceptional row") {
  auto r = run_cli({"triples", "--group", "sn", "--n", "9", "--format", "text", "--ascii"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("2xL2(8):3") != std::string::npos);
  CHECK(r.out.find("linear character of order six") != std::string::npos);
  CHECK(r.out.find("<6,2,1>") != std::string::npos);

  auto j = json::parse(run_cli({"triples", "--group", "sn", "--n", "9", "--format", "json"}).out);
  bool found = false;
  for (const auto& t : j["triples"]) {
    if (t["stabilizer"] == "2xL2(8):3") {
      found = true;
      CHECK(t["group"] == "Sn");
      CHECK(t["n"] == 9);
      CHECK(t["chi"]["lambda"] == json::array({6, 2, 1}));
      CHECK(t["chi"]["variant"] == "self");
    }
  }
  CHECK(found);
}

TEST_CASE("empty triple lists render as none") {
  auto r = run_cli({"triples", "--group", "an", "--n", "7"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "(none)\n");
}

TEST_CASE("stabilizers, monomial, exceptional") {
  auto r = run_cli({"stabilizers", "--group", "sn", "--lambda", "4,2"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("A~6") != std::string::npos);
  CHECK(r.out.find("3^2:Q8:2") != std::string::npos);

  r = run_cli({"monomial", "--group", "sn", "--max-n", "9", "--ascii"});
  CHECK(r.out == "n=4: <3,1>\nn=6: <4,2>\nn=9: <6,2,1>\n");

  r = run_cli({"exceptional", "--group", "6.A7"});
  CHECK(r.out == "(none)\n");

  r = run_cli({"exceptional", "--group", "3.A6"});
  CHECK(r.out.find("3xS4") != std::string::npos);
}

TEST_CASE("json surfaces for the list subcommands") {
  auto j = json::parse(run_cli({"monomial", "--group", "an", "--max-n", "9", "--format", "json"}).out);
  REQUIRE(j["monomial"].size() == 2);
  CHECK(j["monomial"][0]["n"] == 6);
  CHECK(j["monomial"][0]["chi"]["lambda"] == json::array({4, 2}));
  CHECK(j["monomial"][0]["chi"]["constituent"] == "either");

  j = json::parse(run_cli({"exceptional", "--group", "6.A7", "--format", "json"}).out);
  CHECK(j["exceptional"] == json::array());

  j = json::parse(run_cli({"classify", "--mu", "4,3,2,1", "--nu", "2,1", "--format", "json"}).out);
  CHECK(j["multiplicity_free"] == true);
  CHECK(j["case"].get<std::string>().find("(ii)") == 0);

  j = json::parse(run_cli({"triples", "--group", "an", "--n", "11", "--format", "json"}).out);
  REQUIRE(j["triples"].size() == 1);
  CHECK(j["triples"][0]["chi"]["lambda"] == json::array({5, 3, 2, 1}));
  CHECK(j["triples"][0]["chi"]["constituent"] == "whole");
  CHECK(j["triples"][0]["phi"] == "either constituent of <4,3,2,1>|An");
}

TEST_CASE("verify runs a small budget") {
  auto r = run_cli({"verify", "--max-weight", "5"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("OK: ") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"decompose", "--mu", "3,3", "--nu", "1"}).status == 2);   // not strict
  CHECK(run_cli({"stcoeff", "--lambda", "4,2", "--mu", "2,1", "--nu", "2"}).status == 2); // size mismatch
  CHECK(run_cli({"triples", "--group", "sn", "--n", "3"}).status == 2);    // unsupported n
  CHECK(run_cli({"triples", "--group", "xy", "--n", "5"}).status == 2);    // bad group
  CHECK(run_cli({"decompose", "--mu", "2,1"}).status == 2);                // missing flag
  CHECK(run_cli({"branch", "--lambda", "2,1", "--variant", "self"}).status == 2); // odd shape
  CHECK(run_cli({"nonsense"}).status == 2);
  CHECK(run_cli({}).status == 0);                                          // help
  CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("json output is stable across runs") {
  auto a = run_cli({"decompose", "--mu", "3,1", "--nu", "3,2", "--format", "json"});
  auto b = run_cli({"decompose", "--mu", "3,1", "--nu", "3,2", "--format", "json"});
  CHECK(a.out == b.out);
}
