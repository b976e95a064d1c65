#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "rrg/cli.hpp"
#include "rrg/report.hpp"

using namespace rrg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("alpha command") {
  const auto r = run({"alpha", "16", "--format", "csv"});
  REQUIRE(r.code == cli::kSuccess);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "d,alpha,alpha_hat,gw_margin,smm_margin");
  CHECK(ls[1].rfind("16,", 0) == 0);
  CHECK(ls[1].find(",0.204101,") != std::string::npos);

  const auto d3 = run({"alpha", "3", "--format", "json", "--precision", "5"});
  REQUIRE(d3.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(d3.out);
  CHECK(j["alpha"].get<double>() == 0.41418);
  CHECK(j["alpha_hat"].get<double>() == 0.42718);

  const auto pretty = run({"alpha", "10"});
  CHECK(pretty.code == cli::kSuccess);
  CHECK(pretty.out.find("alpha_hat (augmented)     0.258371") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"alpha", "2"}).code == cli::kUsageError);
  CHECK(run({"alpha", "500001"}).code == cli::kUsageError);
  CHECK(run({"alpha", "abc"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  CHECK(run({"alpha", "5", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"alpha", "5", "--tol", "1e-15"}).code == cli::kUsageError);
  CHECK(run({"table", "10", "5"}).code == cli::kUsageError);
  CHECK(run({"stars", "33", "--dhat", "8..40"}).code == cli::kUsageError);
  CHECK(run({"stars", "33", "--dhat", "eight"}).code == cli::kUsageError);
  CHECK(run({"verify", "10", "--samples", "0"}).code == cli::kUsageError);
  const auto e = run({"alpha", "2"});
  CHECK(e.err.find("degree 2") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("table command") {
  const auto single = run({"table", "3", "3", "--format", "csv"});
  REQUIRE(single.code == cli::kSuccess);
  CHECK(lines(single.out).size() == 2);

  const auto csv = run({"table", "10", "19", "--format", "csv"});
  const auto json = run({"table", "10", "19", "--format", "json", "--jobs", "3"});
  REQUIRE(csv.code == cli::kSuccess);
  REQUIRE(json.code == cli::kSuccess);
  const auto csv_lines = lines(csv.out);
  const auto json_lines = lines(json.out);
  REQUIRE(csv_lines.size() == 11);
  REQUIRE(json_lines.size() == 10);
  CHECK(csv_lines[0] == kRecordCsvHeader);
  const double published[] = {0.258371, 0.246775, 0.236447, 0.227167, 0.218767,
                              0.211113, 0.204101, 0.197645, 0.191674, 0.186131};
  for (int i = 0; i < 10; ++i) {
    const auto from_csv = record_from_csv(csv_lines[i + 1]);
    const auto from_json = record_from_json(json_lines[i]);
    CHECK(from_csv.d == 10 + i);
    CHECK(from_csv.alpha_hat == doctest::Approx(published[i]).epsilon(1e-12));
    CHECK(from_csv.alpha == from_json.alpha);
    CHECK(from_csv.alpha_hat == from_json.alpha_hat);
    CHECK(from_csv.gw_margin == from_json.gw_margin);
  }
}

TEST_CASE("table output does not depend on the thread count") {
  const auto one = run({"table", "3", "12", "--format", "csv", "--jobs", "1"});
  const auto many = run({"table", "3", "12", "--format", "csv", "--jobs", "4"});
  CHECK(one.out == many.out);
}

TEST_CASE("timing column is opt-in") {
  const auto r = run({"table", "3", "4", "--format", "csv", "--timing"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(lines(r.out)[0] == "d,alpha,alpha_hat,gw_margin,elapsed_ms");
}

TEST_CASE("stars command") {
  const auto r = run({"stars", "33", "--dhat", "8..14", "--alpha", "0.13195395", "--format", "json"});
  REQUIRE(r.code == cli::kSuccess);
  std::vector<nlohmann::json> thinning, stars;
  nlohmann::json summary;
  for (const auto& line : lines(r.out)) {
    auto j = nlohmann::json::parse(line);
    if (j["type"] == "thinning") thinning.push_back(j);
    if (j["type"] == "star") stars.push_back(j);
    if (j["type"] == "summary") summary = j;
  }
  REQUIRE(thinning.size() == 7);
  CHECK(thinning[0]["dhat"] == 8);
  CHECK(thinning[0]["deleted"].get<double>() == 0.073901);
  CHECK(thinning[0]["alpha_thin"].get<double>() == 0.058052);
  CHECK(thinning[5]["deleted"].get<double>() == 0.000177);
  CHECK(summary["necessary_k_max"] == 19);
  for (const auto& s : stars) {
    const int k = s["k"];
    CHECK((s["status"] == "density-met") == (k >= 17 && k <= 19));
    CHECK(s["note"].get<std::string>().find("unchecked") != std::string::npos);
  }

  const auto computed = run({"stars", "33"});
  REQUIRE(computed.code == cli::kSuccess);
  CHECK(computed.out.find("necessary condition: k <= 19") != std::string::npos);

  const auto d4 = run({"stars", "4", "--format", "csv"});
  REQUIRE(d4.code == cli::kSuccess);
  CHECK(d4.out.find("\n3,0.333333333333,") != std::string::npos);

  const auto user_bound = run({"stars", "4", "--alpha-upper", "0.42", "--format", "json"});
  CHECK(nlohmann::json::parse(lines(user_bound.out)[0])["necessary_k_max"] == 3);
}

TEST_CASE("verify command") {
  const auto a = run({"verify", "3", "--samples", "200000", "--seed", "7", "--grid", "100000"});
  const auto b = run({"verify", "3", "--samples", "200000", "--seed", "7", "--grid", "100000"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const auto c = run({"verify", "3", "--samples", "200000", "--seed", "8", "--grid", "100000"});
  CHECK(c.out != a.out);
}
