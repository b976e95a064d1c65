#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "rrg/augmentation.hpp"
#include "rrg/errors.hpp"
#include "rrg/report.hpp"
#include "rrg/star_thinning.hpp"

using namespace rrg;

namespace {

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

// Direct evaluation with exact small binomial coefficients, no log-gamma.
double deleted_by_products(int d, double alpha, int dhat) {
  const double p = (1 - 2 * alpha) / (1 - alpha);
  double sum = 0.0;
  double choose = 1.0;  // C(d, l)
  for (int l = 0; l <= d; ++l) {
    if (l > dhat) sum += (l - dhat) * choose * std::pow(1 - p, l) * std::pow(p, d - l);
    choose = choose * (d - l) / (l + 1);
  }
  return (1 - alpha) * sum;
}

constexpr double kAlpha33 = 0.13195395;

}  // namespace

TEST_CASE("thinning table for d = 33 matches the published (truncated) columns") {
  struct Row { int dhat; double deleted, alpha_thin; };
  const Row published[] = {{8, 0.073901, 0.058052},  {9, 0.027726, 0.104227},
                           {10, 0.009286, 0.122667}, {11, 0.002778, 0.129175},
                           {12, 0.000743, 0.131210}, {13, 0.000177, 0.131776},
                           {14, 0.000038, 0.131915}};
  const auto rows = thinning_table(33, kAlpha33, 8, 14);
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].dhat);
    CHECK(rows[i].dhat == published[i].dhat);
    CHECK(near(truncate_decimals(rows[i].deleted, 6), published[i].deleted, 5e-7));
    CHECK(near(truncate_decimals(rows[i].alpha_thin, 6), published[i].alpha_thin, 5e-7));
    CHECK(near(rows[i].deleted, deleted_by_products(33, kAlpha33, rows[i].dhat), 1e-15));
    CHECK(rows[i].alpha_thin == doctest::Approx(kAlpha33 - rows[i].deleted).epsilon(1e-15));
  }
}

TEST_CASE("thinning is monotone and converges to alpha") {
  for (int d : {5, 33, 200}) {
    const double a = 0.8 / std::sqrt(static_cast<double>(d)) * 0.5;
    const ThinningCalculator calc(d, a);
    double previous = -1e9;
    for (int dhat = 1; dhat < d; ++dhat) {
      const auto row = calc.row(dhat);
      CHECK(row.deleted >= 0.0);
      CHECK(row.alpha_thin >= previous);
      previous = row.alpha_thin;
      if (d <= 60) CHECK(row.deleted == doctest::Approx(deleted_by_products(d, a, dhat)).epsilon(1e-12));
    }
    const double p = conditional_p(a);
    CHECK(a - calc.row(d - 1).alpha_thin <= (1 - a) * std::pow(1 - p, d) * (1 + 1e-12));
    CHECK(calc.row(d - 1).deleted == doctest::Approx((1 - a) * std::pow(1 - p, d)).epsilon(1e-12));
  }
  CHECK(alpha_thin(33, kAlpha33, 14).alpha_thin >= alpha_thin(33, kAlpha33, 13).alpha_thin);
}

TEST_CASE("deleted density is the expected binomial excess") {
  const int d = 33, dhat = 9;
  const double p = conditional_p(kAlpha33);
  std::mt19937_64 gen(33);
  std::binomial_distribution<int> ones(d, 1 - p);
  const int n = 1'000'000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double x = (1 - kAlpha33) * std::max(0, ones(gen) - dhat);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
  CHECK(std::abs(mean - alpha_thin(d, kAlpha33, dhat).deleted) <= 3 * se);
}

TEST_CASE("thinning handles the largest degree") {
  const int d = 500000;
  const double a = 4.3e-5;
  const ThinningCalculator calc(d, a);
  const auto row = calc.row(30);
  CHECK(std::isfinite(row.deleted));
  CHECK(row.deleted >= 0.0);
  CHECK(row.alpha_thin <= a);
  CHECK(calc.row(d - 1).deleted == 0.0);
}

TEST_CASE("thinning argument checks") {
  CHECK_THROWS_AS(alpha_thin(33, kAlpha33, 0), DomainError);
  CHECK_THROWS_AS(alpha_thin(33, kAlpha33, 33), DomainError);
  CHECK_THROWS_AS(thinning_table(33, kAlpha33, 10, 9), DomainError);
}

TEST_CASE("star candidates for d = 33") {
  const auto rows = star_candidates(33, kAlpha33);
  REQUIRE(rows.size() == 16);  // k = 17..32
  CHECK(rows.front().k == 17);
  CHECK(rows.back().k == 32);
  for (const auto& r : rows) {
    CAPTURE(r.k);
    CHECK(r.alpha_req == doctest::Approx(1 - 33.0 / (2 * r.k)));
    CHECK(r.alpha_req > 0.0);
    CHECK(r.alpha_req < 0.5);
    CHECK(r.external_conditions_note == kExternalConditionsNote);
    const bool expected_met = r.k <= 19;
    CHECK((r.status == StarStatus::DensityMet) == expected_met);
    if (r.dhat_min) {
      CHECK(*r.dhat_min < r.k);
      CHECK(*r.alpha_thin >= r.alpha_req);
      if (*r.dhat_min > 1) CHECK(alpha_thin(33, kAlpha33, *r.dhat_min - 1).alpha_thin < r.alpha_req);
    }
  }
  CHECK(rows[0].dhat_min == 8);
  CHECK(rows[1].dhat_min == 9);
  CHECK(rows[2].dhat_min == 13);
  CHECK(near(truncate_decimals(*rows[0].alpha_thin, 6), 0.058052, 5e-7));
}

TEST_CASE("star candidates for d = 4 list k = 3") {
  const auto rows = star_candidates(4, 0.3658);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].k == 3);
  CHECK(rows[0].alpha_req == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("necessary bound on k") {
  CHECK(necessary_bound_k(33, 0.14401) == 19);
  CHECK(necessary_bound_k(4, 0.42) == 3);
  CHECK(necessary_bound_k(33, 0.0) == 16);
  CHECK(necessary_bound_k(10, 0.0) == 5);
  CHECK_THROWS_AS(necessary_bound_k(33, 0.5), DomainError);
}

TEST_CASE("upper-bound table") {
  SUBCASE("bundled asset") {
    const auto table = UpperBoundTable::load(RRG_DATA_DIR "/upper_bounds.csv");
    CHECK(table.version() == "1");
    CHECK(table.lookup(33) == 0.14401);
    CHECK(table.lookup(10) == 0.281105);
    CHECK(table.lookup(10000) == 0.001498);
    CHECK_FALSE(table.lookup(34).has_value());
  }
  SUBCASE("parse errors") {
    std::istringstream bad_header("d,ub\n3,0.4\n");
    CHECK_THROWS_AS(UpperBoundTable::parse(bad_header), DomainError);
    std::istringstream bad_line("degree,upper_bound\n3;0.4\n");
    CHECK_THROWS_AS(UpperBoundTable::parse(bad_line), DomainError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(UpperBoundTable::parse(empty), DomainError);
    CHECK_THROWS_AS(UpperBoundTable::load("/nonexistent/upper.csv"), DomainError);
  }
}
