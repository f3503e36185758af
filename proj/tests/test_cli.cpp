#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "seidel/json_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = seidel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("det reports the determinant and pivots") {
  const Run r = run({"det", "001111", "--pivots"});
  REQUIRE(r.code == 0);
  const json report = r.report();
  CHECK(report["command"] == "det");
  CHECK(report["input"] == "001111");
  CHECK(report["elapsed_ms"].is_number());
  CHECK(report["result"]["det"] == 11);
  CHECK(report["result"]["pivots"] == json({"-2", "5/2", "8/5", "11/8", "14/11", "-11/14"}));
  CHECK_FALSE(run({"det", "001111"}).report()["result"].contains("pivots"));
}

TEST_CASE("cospectral-pair") {
  const Run r = run({"cospectral-pair", "--n", "4"});
  REQUIRE(r.code == 0);
  const json result = r.report()["result"];
  CHECK(result["members"] == json({"0011", "0101"}));
  CHECK(result["charpoly"] == json({"5", "0", "-6", "0", "1"}));
  CHECK(result["degree_sequences"][0] != result["degree_sequences"][1]);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "4", "--count-only"}).report()["result"]["count"] == 4);
  const json listed = run({"enumerate", "--n", "4"}).report()["result"];
  CHECK(listed["sequences"] == json({"0001", "0011", "0101", "0111"}));
  CHECK(run({"enumerate", "--n", "40", "--count-only"}).report()["result"]["count"] == (1ull << 38));
  CHECK(run({"enumerate", "--n", "40"}).code == seidel::cli::kValidation);
}

TEST_CASE("sequence commands") {
  const json spectrum = run({"spectrum", "0011"}).report()["result"];
  CHECK(spectrum["spectrum"]["minus_one"] == 1);
  CHECK(spectrum["spectrum"]["plus_one"] == 1);
  CHECK(spectrum["spectrum"]["n"] == 4);
  CHECK(spectrum["spectrum"]["quotient"].size() == 2);
  CHECK(spectrum["multiplicities"] == json({{"minus_one", 1}, {"plus_one", 1}}));

  const json charpoly = run({"charpoly", "0^1 1 0 1"}).report()["result"];
  CHECK(charpoly["sequence"] == "0101");
  CHECK(charpoly["text"] == "x^4 - 6*x^2 + 5");

  const json quotient = run({"quotient", "0011"}).report()["result"];
  CHECK(quotient["quotient"]["entries"] == json({{1, -2}, {-2, -1}}));
  CHECK(quotient["quotient"]["cell_sizes"] == json({2, 2}));

  const json eig = run({"eigvecs", "01100111"}).report()["result"];
  CHECK(eig["minus_one"] == json({{0, 0, 0, 1, -1, 0, 0, 0}}));
  CHECK(eig["lifted"][0]["vector"] == json({2, -1, -1, 0, 0, 0, 0, 0}));

  const Run cls = run({"classify", "0101"});
  CHECK(cls.code == 0);
  CHECK(cls.report()["result"]["predicted"] == "Four_TypeA");
  CHECK(cls.report()["result"]["observed_count"] == 4);
}

TEST_CASE("cospectral-search") {
  const Run r = run({"cospectral-search", "--n", "4", "--jobs", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"] == json::parse(R"([{"fingerprint":["5","0","-6","0","1"],"members":["0011","0101"]}])"));
  CHECK(run({"cospectral-search", "--n", "19"}).code == seidel::cli::kValidation);
  CHECK(run({"cospectral-search", "--n", "6", "--cap", "5"}).code == seidel::cli::kValidation);
  CHECK(run({"cospectral-search", "--n", "6", "--cap", "6"}).code == 0);
}

TEST_CASE("verify --n 8 passes") {
  const Run r = run({"verify", "--n", "8", "--jobs", "2"});
  CHECK(r.code == 0);
  const json result = r.report()["result"];
  CHECK(result["ok"] == true);
  CHECK(result["failures"].empty());
  CHECK(result["sequences"] == 1 + 1 + 2 + 4 + 8 + 16 + 32 + 64);
  CHECK(result["passed"]["char_poly"] == 128);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == seidel::cli::kUsage);
  CHECK(run({"frobnicate"}).code == seidel::cli::kUsage);
  CHECK(run({"det"}).code == seidel::cli::kUsage);
  CHECK(run({"det", "0011", "--format", "xml"}).code == seidel::cli::kUsage);
  CHECK(run({"det", "0110"}).code == seidel::cli::kValidation);
  CHECK(run({"det", "01a1"}).code == seidel::cli::kValidation);
  CHECK(run({"spectrum", "0"}).code == seidel::cli::kValidation);
  CHECK(run({"cospectral-pair", "--n", "3"}).code == seidel::cli::kValidation);
  CHECK(run({"verify", "--n", "99"}).code == seidel::cli::kValidation);
  const Run mismatch = run({"classify", "01011"});
  CHECK(mismatch.code == seidel::cli::kMismatch);
  CHECK(mismatch.report()["result"]["agrees"] == false);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("text format") {
  const Run r = run({"det", "001111", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("det") != std::string::npos);
  CHECK(r.out.find(": 11") != std::string::npos);
}

TEST_CASE("reported sequences round-trip through every command") {
  const json listed = run({"enumerate", "--n", "6"}).report()["result"]["sequences"];
  for (const auto& seq : listed) {
    for (const std::string cmd : {"spectrum", "charpoly", "det", "quotient", "eigvecs"}) {
      const json first = run({cmd, seq.get<std::string>()}).report()["result"];
      const json again = run({cmd, first["sequence"].get<std::string>()}).report()["result"];
      CHECK(first == again);
    }
  }
}

TEST_CASE("polynomial JSON schema") {
  const seidel::IntPoly p({mpz_class("123456789012345678901234567890"), -3, 0, 1});
  const json j = seidel::json_io::poly_to_json(p);
  CHECK(j[0] == "123456789012345678901234567890");
  CHECK(seidel::json_io::poly_from_json(j) == p);
  CHECK(seidel::json_io::integer_to_json(mpz_class("99999999999999999999999")) == "99999999999999999999999");
  CHECK(seidel::json_io::integer_to_json(mpz_class(-7)) == -7);
  CHECK_THROWS(seidel::json_io::poly_from_json(json::parse(R"(["1x"])")));
}
