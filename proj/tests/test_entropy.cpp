#include <cmath>
#include <random>

#include <doctest.h>

#include "rrg/entropy.hpp"
#include "rrg/errors.hpp"

using namespace rrg;

TEST_CASE("entropy_term at fixed points") {
  CHECK(entropy_term(0.0) == 0.0);
  CHECK(entropy_term(1.0) == 0.0);
  // mpmath: -0.5 ln 0.5
  CHECK(entropy_term(0.5) == doctest::Approx(0.34657359027997265471).epsilon(1e-15));
}

TEST_CASE("entropy_term clamps rounding noise and rejects the rest") {
  CHECK(entropy_term(-1e-13) == 0.0);
  CHECK(entropy_term(-1e-12) == 0.0);
  CHECK(entropy_term(1.0 + 5e-13) == 0.0);
  CHECK_THROWS_AS(entropy_term(-1e-9), DomainError);
  CHECK_THROWS_AS(entropy_term(1.1), DomainError);
  CHECK_THROWS_AS(entropy_term(std::nan("")), DomainError);
}

TEST_CASE("entropy_term_complement keeps precision near one") {
  // mpmath: h(1 - 1e-7)
  CHECK(std::abs(entropy_term_complement(1e-7) - 9.9999994999999833333e-8) <= 1e-22);
  CHECK(entropy_term_complement(0.0) == 0.0);
  CHECK(entropy_term_complement(1.0) == 0.0);
  CHECK(std::abs(entropy_term_complement(0.3) - entropy_term(0.7)) <= 1e-16);
  CHECK_THROWS_AS(entropy_term_complement(1.5), DomainError);
}

TEST_CASE("entropy_term is concave") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(gen), y = u(gen);
    CHECK(entropy_term(0.5 * (x + y)) >= 0.5 * (entropy_term(x) + entropy_term(y)) - 1e-12);
  }
}

TEST_CASE("edge_entropy") {
  CHECK(edge_entropy({1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(edge_entropy(EdgeDistribution::independent_set(0.25)) ==
        doctest::Approx(1.0397207708399179641).epsilon(1e-15));
  CHECK(edge_entropy(EdgeDistribution::independent_set(0.41418)) ==
        doctest::Approx(1.0326525336471024308).epsilon(1e-15));

  SUBCASE("matches 2h(a) + h(1-2a) for random densities") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    for (int i = 0; i < 1000; ++i) {
      const double a = u(gen);
      const double expected = 2 * entropy_term(a) + entropy_term(1 - 2 * a);
      CHECK(std::abs(edge_entropy(EdgeDistribution::independent_set(a)) - expected) <= 1e-14);
    }
  }

  SUBCASE("invalid distributions") {
    CHECK_THROWS_AS(edge_entropy({0.5, 0.3, 0.2, 0.0}), DomainError);
    CHECK_THROWS_AS(edge_entropy({0.5, 0.3, 0.3, 0.0}), DomainError);
    CHECK_THROWS_AS(edge_entropy({1.2, -0.1, -0.1, 0.0}), DomainError);
  }
}

TEST_CASE("independent-set edge distribution") {
  const auto pi = EdgeDistribution::independent_set(0.3);
  CHECK(pi.is_independent_set());
  CHECK(pi.prob_one() == doctest::Approx(0.3));
  CHECK(pi.prob_zero() == doctest::Approx(0.7));
  CHECK_THROWS_AS(EdgeDistribution::independent_set(0.6), DomainError);
}

TEST_CASE("vertex_entropy") {
  CHECK(vertex_entropy(0.0) == 0.0);
  CHECK(vertex_entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(vertex_entropy(0.41418) == doctest::Approx(0.67834384404051569228).epsilon(1e-15));
}

TEST_CASE("RateParams validation") {
  CHECK_NOTHROW(RateParams::make(3, 0.1));
  CHECK_NOTHROW(RateParams::make(500000, 1e-5));
  CHECK_THROWS_AS(RateParams::make(2, 0.1), DomainError);
  CHECK_THROWS_AS(RateParams::make(500001, 0.1), DomainError);
  CHECK_THROWS_AS(RateParams::make(3, 0.5), DomainError);
  CHECK_THROWS_AS(RateParams::make(3, 0.0), DomainError);
}

TEST_CASE("sigma_rate") {
  CHECK(std::abs(sigma_rate({3, 1e-300})) < 1e-290);
  // mpmath reference values; both densities sit below their thresholds
  CHECK(sigma_rate({3, 0.41418}) == doctest::Approx(0.19229111238962226163).epsilon(1e-13));
  CHECK(sigma_rate({10, 0.24552}) == doctest::Approx(0.15051137550165359233).epsilon(1e-13));
  CHECK(sigma_rate({3, 0.41418}) >= 0.0);
  CHECK_THROWS_AS(sigma_rate({3, 0.5}), DomainError);

  SUBCASE("continuity") {
    for (int d : {3, 10, 50, 100}) {
      for (double a = 0.01; a <= 0.45; a += 0.01) {
        CHECK(std::abs(sigma_rate({d, a + 1e-9}) - sigma_rate({d, a})) <= 1e-6);
      }
    }
  }
}
