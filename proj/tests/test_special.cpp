#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "fpme/special.hpp"
#include "support.hpp"

using namespace fpme;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("gamma at classical points") {
    CHECK(special::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(special::gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rel_err(special::gamma_fn(0.5), 1.7724538509055160273) < 1e-12);
  }

  TEST_CASE("gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(special::gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(special::gamma_fn(-1.5), std::domain_error);
    CHECK_THROWS_AS(special::log_gamma(-0.1), std::domain_error);
  }

  TEST_CASE("gamma recurrence on random arguments") {
    std::mt19937_64 rng(2024001);
    for (int i = 0; i < 100; ++i) {
      const double x = test::uniform(rng, 0.1, 30.0);
      CHECK(rel_err(special::gamma_fn(x + 1.0), x * special::gamma_fn(x)) <
            1e-12);
    }
  }

  TEST_CASE("complete beta identities") {
    CHECK(rel_err(special::complete_beta(1.0, 1.0), 1.0) < 1e-12);
    CHECK(rel_err(special::complete_beta(2.0, 1.0), 0.5) < 1e-12);
    // Gamma(5) Gamma(0.5) / Gamma(5.5) = 256/315.
    CHECK(rel_err(special::complete_beta(5.0, 0.5), 0.812698412698412698413) <
          1e-12);
    CHECK_THROWS_AS(special::complete_beta(0.0, 1.0), std::domain_error);
  }

  TEST_CASE("incomplete beta with unit first parameter is x^b/b") {
    for (double x : {0.0, 0.1, 0.37, 0.8, 1.0}) {
      for (double b : {0.3, 1.0, 2.5}) {
        CHECK(rel_err(special::incomplete_beta(x, 1.0, b),
                      std::pow(x, b) / b) < 1e-12);
      }
    }
  }

  TEST_CASE("incomplete beta pinned values") {
    // int_0^0.5 (1-t) dt
    CHECK(rel_err(special::incomplete_beta(0.5, 2.0, 1.0), 0.375) < 1e-12);
    // High-precision reference for (x, a, b) = (0.3, 9, 0.5).
    CHECK(rel_err(special::incomplete_beta(0.3, 9.0, 0.5),
                  0.591635078854953354251) < 1e-11);
  }

  TEST_CASE("incomplete beta endpoints and monotonicity") {
    std::mt19937_64 rng(2024002);
    for (int i = 0; i < 30; ++i) {
      const double a = test::uniform(rng, 0.2, 45.0);
      const double b = test::uniform(rng, 0.05, 3.0);
      CHECK(special::incomplete_beta(0.0, a, b) == 0.0);
      CHECK(rel_err(special::incomplete_beta(1.0, a, b),
                    special::complete_beta(a, b)) < 1e-12);
      double prev = 0.0;
      for (double x = 0.05; x <= 1.0; x += 0.05) {
        const double v = special::incomplete_beta(x, a, b);
        CHECK(v >= prev);
        prev = v;
      }
    }
  }

  TEST_CASE("incomplete beta against quadrature oracle") {
    std::mt19937_64 rng(2024003);
    for (int i = 0; i < 120; ++i) {
      const double a = test::uniform(rng, 1.0, 50.0);
      const double b = test::uniform(rng, 0.02, 1.0);
      const double x = test::uniform(rng, 0.01, 0.99);
      const double want = test::incomplete_beta_quad(x, a, b);
      CHECK(rel_err(special::incomplete_beta(x, a, b), want) < 1e-8);
      const double tail_want = test::beta_tail_quad(x, a, b);
      CHECK(rel_err(special::incomplete_beta_tail(x, a, b), tail_want) < 1e-8);
    }
  }

  TEST_CASE("incomplete beta equals complete minus tail") {
    std::mt19937_64 rng(2024004);
    for (int i = 0; i < 100; ++i) {
      const double a = test::uniform(rng, 1.0, 50.0);
      const double b = test::uniform(rng, 0.02, 1.0);
      const double x = test::uniform(rng, 0.01, 0.99);
      const double whole = special::complete_beta(a, b);
      const double direct = special::incomplete_beta(x, a, b);
      const double tail = special::incomplete_beta_tail(x, a, b);
      CHECK(rel_err(direct + tail, whole) < 1e-11);
    }
  }

  TEST_CASE("regularized complement avoids cancellation near x = 1") {
    // Tail of the kernel regime: p ~ 4/alpha + 1, q = 1 - alpha, x -> 1.
    const double p = 41.0, q = 0.5;
    for (double eps : {1e-3, 1e-6, 1e-9}) {
      const double x = 1.0 - eps;
      const double complement =
          special::regularized_incomplete_beta_complement(p, q, x);
      const double tail_ref =
          test::beta_tail_quad(x, q, p) / special::complete_beta(q, p);
      CHECK(rel_err(complement, tail_ref) < 1e-8);
    }
  }

  TEST_CASE("domain validation") {
    CHECK_THROWS_AS(special::incomplete_beta(-0.1, 2.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(special::incomplete_beta(1.1, 2.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(special::incomplete_beta(0.5, -1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(special::incomplete_beta(0.5, 1.0, 0.0),
                    std::domain_error);
    special::AccuracyPolicy bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(special::validate(bad), std::domain_error);
    bad.rel_tol = 1e-12;
    bad.max_iter = 0;
    CHECK_THROWS_AS(special::validate(bad), std::domain_error);
  }
}
