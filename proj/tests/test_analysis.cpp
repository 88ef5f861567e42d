#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "fpme/analysis.hpp"
#include "fpme/errors.hpp"
#include "support.hpp"

using namespace fpme;

namespace {

// v(h) = c + b h^p sampled at h, h/2, h/4.
void synthetic_triple(double p, double& v1, double& v2, double& v3) {
  const double c = 2.3, b = 0.7;
  v1 = c + b;
  v2 = c + b * std::pow(0.5, p);
  v3 = c + b * std::pow(0.25, p);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("aitken recovers synthetic power laws") {
    for (double p : {0.3, 0.6, 0.83, 1.0, 1.5}) {
      double v1, v2, v3;
      synthetic_triple(p, v1, v2, v3);
      CHECK(std::fabs(analysis::aitken_order(v1, v2, v3) - p) < 1e-10);
    }
  }

  TEST_CASE("aitken degenerate and sentinel cases") {
    CHECK_THROWS_AS(analysis::aitken_order(1.0, 2.0, 2.0),
                    degenerate_differences_error);
    CHECK(std::isinf(analysis::aitken_order(2.0, 2.0, 3.0)));
    CHECK(analysis::aitken_order(2.0, 2.0, 3.0) < 0.0);
  }

  TEST_CASE("order study fills every field") {
    analysis::StudyConfig config;
    config.n_base = 16;
    const auto report = analysis::empirical_order_study({0.8, 10.0}, config);
    CHECK(report.N_base == 16);
    CHECK(report.evaluation_point == 1.0);
    CHECK(std::isfinite(report.empirical_order));
    CHECK(std::isfinite(report.theoretical_order));
    CHECK(report.diffs[0] != 0.0);
    CHECK(report.diffs[1] != 0.0);
    CHECK(report.runtime_seconds >= 0.0);
    CHECK(report.error.empty());
  }

  TEST_CASE("order study rejects off-node evaluation points") {
    analysis::StudyConfig config;
    config.n_base = 16;
    config.evaluation_point = 0.123;
    CHECK_THROWS_AS(analysis::empirical_order_study({0.8, 10.0}, config),
                    std::domain_error);
    config.evaluation_point = 0.5;  // node 8 of 16
    CHECK_NOTHROW(analysis::empirical_order_study({0.8, 10.0}, config));
    config.n_base = 4;
    CHECK_THROWS_AS(analysis::empirical_order_study({0.8, 10.0}, config),
                    std::domain_error);
  }

  TEST_CASE("table harness: empty, single, and failing cells") {
    analysis::StudyConfig config;
    config.n_base = 16;
    CHECK(analysis::table_harness({}, config).empty());

    const auto single = analysis::table_harness({{0.8, 10.0}}, config);
    REQUIRE(single.size() == 1);
    const auto direct = analysis::empirical_order_study({0.8, 10.0}, config);
    CHECK(single[0].empirical_order == direct.empirical_order);
    CHECK(single[0].theoretical_order == direct.theoretical_order);
    CHECK(single[0].diffs[0] == direct.diffs[0]);

    // An invalid cell is recorded, not fatal.
    const auto mixed =
        analysis::table_harness({{0.8, 10.0}, {1.7, 2.0}}, config);
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].error.empty());
    CHECK_FALSE(mixed[1].error.empty());
    CHECK(std::isnan(mixed[1].empirical_order));
  }

  TEST_CASE("table harness sorts by (alpha, m) regardless of input order") {
    analysis::StudyConfig config;
    config.n_base = 16;
    const std::vector<ProblemParams> cells = {
        {0.9, 2.0}, {0.5, 10.0}, {0.9, 1.0}, {0.5, 3.0}};
    const auto a = analysis::table_harness(cells, config);
    auto shuffled = cells;
    std::reverse(shuffled.begin(), shuffled.end());
    const auto b = analysis::table_harness(shuffled, config, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].params.alpha == b[i].params.alpha);
      CHECK(a[i].params.m == b[i].params.m);
      CHECK(a[i].empirical_order == b[i].empirical_order);
    }
    CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) {
      return x.params.alpha < y.params.alpha ||
             (x.params.alpha == y.params.alpha && x.params.m <= y.params.m);
    }));
  }

  TEST_CASE("bound check edge cases") {
    // Zero solution violates the lower envelope at every interior node.
    solver::DiscreteSolution zero;
    zero.params = {0.8, 10.0};
    zero.grid = solver::UniformGrid{10};
    zero.values.assign(11, 0.0);
    const auto bounds = theory::bounds_coefficients(zero.params);
    const auto flagged = analysis::bound_check(zero, bounds, 1e-6);
    CHECK(flagged.size() == 10);  // all but z = 0
    for (const auto& v : flagged) CHECK(v.y < v.lower);

    const auto none = analysis::bound_check(
        zero, bounds, std::numeric_limits<double>::infinity());
    CHECK(none.empty());
  }

  TEST_CASE("reference table") {
    CHECK(analysis::reference_table().size() == 20);
    CHECK(analysis::standard_cells().size() == 20);
    const auto hit = analysis::reference_lookup({0.6, 1.0});
    REQUIRE(hit.has_value());
    CHECK(hit->theoretical == 0.16);
    CHECK(hit->empirical == 1.01);
    CHECK_FALSE(analysis::reference_lookup({0.55, 1.0}).has_value());
    // Cells are valid parameter sets and sorted.
    const auto cells = analysis::standard_cells();
    for (const auto& cell : cells) CHECK_NOTHROW(validate(cell));
    CHECK(std::is_sorted(cells.begin(), cells.end(),
                         [](const auto& a, const auto& b) {
                           return a.alpha < b.alpha ||
                                  (a.alpha == b.alpha && a.m <= b.m);
                         }));
  }
}
