#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospkw/cli.hpp"
#include "ospkw/serialize.hpp"

#include <vector>

using namespace ospkw;

namespace {

Response cli(std::vector<const char*> args) {
  args.insert(args.begin(), "ospkw");
  return run_command_line(static_cast<int>(args.size()), args.data());
}

Json payload(const Response& r) { return Json::parse(r.payload); }

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  auto p = LaurentPolynomial::monomial(Weight::from_doubled({1}, {-1}), 2) +
           LaurentPolynomial::monomial(Weight::from_ints({-3}, {0}), BigInt("123456789012345678901234567890"));
  Json j = to_json(p);
  CHECK(j["terms"][0]["exp"] == Json::array({1, -1}));
  CHECK(j["terms"][0]["coef"] == "2");
  CHECK(j["terms"][1]["coef"] == "123456789012345678901234567890");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
  CHECK_THROWS_AS(polynomial_from_json(Json{{"n", 1}}), Error);
}

TEST_CASE("character command") {
  auto r = cli({"character", "--algebra", "B:3:3", "--partition", "5"});
  REQUIRE(r.exit_code == 0);
  Json j = payload(r);
  CHECK(j["k"] == 2);
  CHECK(j["j"] == 8);
  CHECK(j["T"] == Json::array({"e2-d2", "e3-d3"}));
  CHECK(BigInt(j["dim"].get<std::string>()) >= 1);
  CHECK(polynomial_from_json(j["character"]).evaluate_at_one() == BigInt(j["dim"].get<std::string>()));
}

TEST_CASE("bottom command") {
  auto r = cli({"bottom", "--algebra", "B:3:3", "--partition", "6,6,5,2,1,1"});
  REQUIRE(r.exit_code == 0);
  Json j = payload(r);
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["after"] == "(11/2, 9/2, -3/2 | 11/2, 3/2, 1/2)");
  CHECK(j["steps"][0]["partition"] == "6,6,1,1,1,1");
  CHECK(j["steps"][1]["after"] == "(9/2, -3/2, -5/2 | 5/2, 3/2, 1/2)");
  CHECK(j["result"] == "5");
}

TEST_CASE("verify command") {
  auto r = cli({"verify", "--algebra", "B:1:1"});
  CHECK(r.exit_code == 0);
  Json j = payload(r);
  CHECK(j["passed"] == true);
  bool saw_trivial = false;
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    saw_trivial = saw_trivial || c["name"] == "trivial KW = 1";
  }
  CHECK(saw_trivial);
  CHECK(cli({"verify", "--algebra", "B:3:3"}).exit_code == 1);
  CHECK(cli({"verify", "--max-rank", "1"}).exit_code == 0);
}

TEST_CASE("classify and block-family") {
  Json c = payload(cli({"classify", "--algebra", "D:3:2", "--partition", "3,3,3,2,2,2,1", "--minus"}));
  CHECK(c["tame"] == true);
  CHECK(c["k"] == 1);
  CHECK(c["T"] == Json::array({"d2-e3"}));
  CHECK(c["e"].is_null());
  Json f = payload(cli({"block-family", "--algebra", "D:3:2", "--partition", "3,3,3,2,2,2,1"}));
  std::vector<std::int64_t> xs;
  for (const auto& m : f["family"]) xs.push_back(m["x"]);
  CHECK(xs == std::vector<std::int64_t>{0, 1, 3, 4});
  CHECK(f["family"][3]["partition"] == "5,4,3,3,3,3,1");
}

TEST_CASE("error payloads") {
  struct Case {
    std::vector<const char*> args;
    const char* code;
  };
  for (const Case& c : {Case{{"classify", "--algebra", "B:1:1", "--partition", "3,2"}, "HookViolation"},
                        Case{{"character", "--algebra", "B:3:3", "--partition", "6,6,5,2,1,1"}, "NotTame"},
                        Case{{"block-family", "--algebra", "B:2:2", "--partition", "1"}, "WrongRegime"},
                        Case{{"classify", "--algebra", "B:2:2", "--partition", "1", "--minus"}, "FamilyMismatch"},
                        Case{{"classify", "--algebra", "X:2:2", "--partition", "1"}, "ParseError"},
                        Case{{"classify", "--algebra", "B:2:2", "--partition", "1,x"}, "ParseError"},
                        Case{{"character"}, "ParseError"}}) {
    auto r = cli(c.args);
    CAPTURE(r.payload);
    CHECK(r.exit_code == 1);
    Json j = payload(r);
    CHECK(j["error"]["code"] == c.code);
    CHECK_FALSE(j["error"]["message"].get<std::string>().empty());
  }
  Request req;
  req.command = "character";
  req.algebra = Algebra::make(Family::B, 1, 1);
  req.partition = "2";
  CHECK(run(req).exit_code == 0);
  req.output = OutputFormat::Text;
  CHECK(run(req).payload.find("dim 12") != std::string::npos);
}

TEST_CASE("output is identical across threads and strategies") {
  const auto base = cli({"character", "--algebra", "D:2:2", "--partition", "3,2,2", "--weyl-sum", "naive"}).payload;
  CHECK(cli({"character", "--algebra", "D:2:2", "--partition", "3,2,2", "--threads", "4"}).payload == base);
  CHECK(cli({"character", "--algebra", "D:2:2", "--partition", "3,2,2", "--threads", "3", "--weyl-sum", "naive"})
            .payload == base);
  CHECK(cli({"character", "--algebra", "D:2:2", "--partition", "3,2,2"}).payload == base);
  CHECK(cli({"verify", "--threads", "2"}).payload == cli({"verify"}).payload);
}

TEST_CASE("text output") {
  auto r = cli({"bottom", "--algebra", "B:1:1", "--partition", "1", "--output", "text"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload.find("bottom ()") != std::string::npos);
  auto t = cli({"character", "--algebra", "B:1:1", "--partition", "", "--output", "text"});
  CHECK(t.payload.find("dim 1\n1\n") != std::string::npos);
  CHECK(cli({"--help"}).exit_code == 0);
}
