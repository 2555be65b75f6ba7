#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3gon/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = k3gon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check reports the genus-23 instance") {
  RunResult r = run({"check", "18", "23", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rho"] == "-9");
  CHECK(j["expected_gonality"] == "13");
  CHECK(j["thm3_ok"] == true);
  CHECK(j["alpha"] == "14");
  CHECK(j["minimizers"][0]["m"] == "1");
  CHECK(j["minimizers"][0]["n"] == "0");
  CHECK(j["h1_vanishes"] == true);
  CHECK(j["very_ample"] == "NoViolatorFound");
}

TEST_CASE("check omits alpha when the hypotheses fail") {
  RunResult r = run({"check", "16", "31", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["thm3_flags"]["no_elliptic_pencils"] == false);
  CHECK(j["alpha"].is_null());
}

TEST_CASE("check rejects invalid parameters with exit 2") {
  CHECK(run({"check", "0", "5", "3"}).code == 2);
  CHECK(run({"check", "5", "-1", "3"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("bn-divisors") {
  RunResult r = run({"bn-divisors", "23"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "(1,12) rho=-1\n(2,17) rho=-1\n(3,20) rho=-1\n");

  RunResult empty = run({"bn-divisors", "4"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  CHECK(run({"bn-divisors", "1"}).code == 2);
}

TEST_CASE("qform command renders verdicts") {
  RunResult r1 = run({"qform", "18", "23", "3", "--target", "-1"});
  REQUIRE(r1.code == 0);
  CHECK(r1.out == "No(parity), D=148, square=false\n");

  RunResult r2 = run({"qform", "6", "5", "3", "--target", "0"});
  REQUIRE(r2.code == 0);
  CHECK(r2.out == "Yes(-1,1), D=4, square=true\n");

  RunResult r3 = run({"qform", "16", "29", "3", "--target", "0"});
  REQUIRE(r3.code == 0);
  CHECK(r3.out == "No(square-test), D=32, square=false\n");

  CHECK(run({"qform", "0", "5", "3"}).code == 2);
}

TEST_CASE("scan: determinism, filters, ranges") {
  std::vector<std::string> args{"scan", "--d", "14..20", "--g", "15..33",
                                "--r", "3", "--filter-thm1", "--format", "csv"};
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("16,29,3") != std::string::npos);
  CHECK(a.out.find("18,23,3") != std::string::npos);

  // Empty filter intersection leaves just the header.
  RunResult empty = run({"scan", "--d", "5..6", "--g", "2..3", "--r", "3",
                         "--filter-thm1", "--format", "csv"});
  CHECK(empty.code == 0);
  CHECK(empty.out ==
        "d,g,r,rho,expected_gonality,thm3_ok,alpha,minimizers,h1_vanishes,thm1_ok\n");

  CHECK(run({"scan", "--d", "20..14", "--g", "15..33", "--format", "csv"}).code == 2);
}

TEST_CASE("scan --out writes atomically") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "k3gon_test_scan.csv";
  fs::remove(path);
  RunResult r = run({"scan", "--d", "16..18", "--g", "23..29", "--r", "3",
                     "--format", "csv", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "d,g,r,rho,expected_gonality,thm3_ok,alpha,minimizers,h1_vanishes,thm1_ok");
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove(path);
}

TEST_CASE("alpha and h1 commands") {
  RunResult a = run({"alpha", "16", "29", "3", "--format", "json"});
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["alpha"] == "12");
  CHECK(j["guaranteed"] == true);
  CHECK(j["enumerated"].size() == 2);

  RunResult h = run({"h1", "18", "23"});
  CHECK(h.code == 0);
  CHECK(h.out == "true\n");
  RunResult h2 = run({"h1", "20", "49"});
  CHECK(h2.out == "false\n");
}
