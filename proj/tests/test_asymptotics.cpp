#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mdqi/asymptotics.hpp"
#include "mdqi/common.hpp"

using namespace mdqi;

namespace {
double sq(double x) { return std::sqrt(x * (1.0 - x)); }
}

TEST_CASE("phi_kappa closed form") {
  CHECK(phi_kappa(0.0, 3.0) == doctest::Approx(0.0));
  CHECK(phi_kappa(1.0, 3.0) == doctest::Approx(3.0));
  CHECK(phi_kappa(0.5, 0.0) == doctest::Approx(1.0));
  CHECK(phi_kappa(0.25, 2.0) == doctest::Approx(0.5 + 2.0 * sq(0.25)));
}

TEST_CASE("single block gamma") {
  for (double mu : {0.05, 0.1, 0.25, 0.4, 0.5}) {
    const auto sol = gamma_functional({1.0}, {1.0}, 0.0, mu);
    CHECK(sol.value == doctest::Approx(2.0 * sq(mu)).epsilon(1e-12));
    CHECK(sol.alpha[0] == doctest::Approx(mu).epsilon(1e-10));
    const auto scaled = gamma_functional({3.5}, {1.0}, 0.0, mu);
    CHECK(scaled.value == doctest::Approx(3.5 * sol.value).epsilon(1e-12));
  }
  // Positive kappa keeps the budget active at mu = 1/2.
  const auto up = gamma_functional({1.0}, {1.0}, 1.0, 0.5);
  CHECK(up.value == doctest::Approx(1.5));
  CHECK(up.budget_active);
  // Negative kappa: interior optimum, golden-ratio value at kappa = -1.
  const auto down = gamma_functional({1.0}, {1.0}, -1.0, 0.5);
  CHECK(down.value == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));
  CHECK_FALSE(down.budget_active);
  CHECK(down.alpha[0] == doctest::Approx(0.5 - 0.5 / std::sqrt(5.0)));
}

TEST_CASE("gamma input validation") {
  CHECK_THROWS_AS(gamma_functional({1.0}, {0.9}, 0.0, 0.25),
                  invariant_violation);
  CHECK_THROWS_AS(gamma_functional({1.0}, {1.0}, 0.0, 0.0),
                  invariant_violation);
  CHECK_THROWS_AS(gamma_functional({1.0}, {1.0}, 0.0, 0.6),
                  invariant_violation);
  CHECK_THROWS_AS(gamma_functional({1.0, 2.0}, {0.5}, 0.0, 0.25),
                  invariant_violation);
}

TEST_CASE("water filling matches grid search on two blocks") {
  for (double g : {0.2, 0.8, 1.0, 2.0, 7.0})
    for (double th : {0.2, 0.5, 0.7})
      for (double kappa : {0.0, 0.7, -0.4})
        for (double mu : {0.08, 0.25, 0.5}) {
          const auto sol = gamma_functional({1.0, g}, {th, 1.0 - th}, kappa, mu);
          const double ref = gamma_grid_search({1.0, g}, {th, 1.0 - th}, kappa, mu);
          CHECK(sol.value == doctest::Approx(ref).epsilon(1e-7));
          // Feasibility of the reported allocation.
          double used = 0;
          for (std::size_t t = 0; t < 2; ++t)
            used += (t == 0 ? th : 1.0 - th) * sol.alpha[t];
          CHECK(used <= mu + 1e-9);
        }
}

TEST_CASE("coordinate ascent agrees for three blocks") {
  const std::vector<double> g{1.0, 2.0, 0.5};
  const std::vector<double> theta{0.3, 0.3, 0.4};
  for (double mu : {0.1, 0.3, 0.5}) {
    const auto sol = gamma_functional(g, theta, 0.25, mu);
    const double ref = gamma_coordinate_ascent(g, theta, 0.25, mu);
    CHECK(sol.value == doctest::Approx(ref).epsilon(1e-6));
  }
}

TEST_CASE("gamma monotone in the budget") {
  double prev = 0;
  for (int i = 1; i <= 25; ++i) {
    const double mu = std::min(0.02 * i, 0.5);
    const double v = gamma_functional({1.0, 3.0}, {0.5, 0.5}, 0.0, mu).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("normalized gain") {
  for (double mu : {0.01, 0.1, 0.25, 0.45})
    CHECK(normalized_gain(1.0, mu) == doctest::Approx(sq(mu)).epsilon(1e-10));
  // Inversion symmetry g <-> 1/g.
  for (double g : {0.125, 0.5, 2.0, 8.0})
    for (double mu : {0.05, 0.2, 0.4})
      CHECK(normalized_gain(g, mu) ==
            doctest::Approx(normalized_gain(1.0 / g, mu)).epsilon(1e-10));
  // g = 1 minimizes the normalized gain.
  for (double g : {0.25, 0.5, 2.0, 4.0, 16.0})
    CHECK(normalized_gain(g, 0.2) >= normalized_gain(1.0, 0.2) - 1e-12);
}

TEST_CASE("weight scaling identity") {
  for (double g : {0.1, 0.5, 2.0, 10.0})
    for (double mu : {0.1, 0.3, 0.5}) {
      const double a = gamma_functional({1.0, g}, {0.5, 0.5}, 0.0, mu).value;
      const double b = gamma_functional({1.0, 1.0 / g}, {0.5, 0.5}, 0.0, mu).value;
      CHECK(a == doctest::Approx(g * b).epsilon(1e-10));
    }
}

TEST_CASE("two block regimes") {
  const std::vector<double> theta{0.5, 0.5};
  CHECK(two_block_regimes(0.05, theta, 0.0, 0.25, 1000).label == Regime::Weak);
  CHECK(two_block_regimes(1.0, theta, 0.0, 0.25, 1000).label ==
        Regime::Crossover);
  CHECK(two_block_regimes(50.0, theta, 0.0, 0.25, 1000).label ==
        Regime::Strong);
  const auto rep = two_block_regimes(20.0, {0.4, 0.6}, 0.0, 0.25, 1000);
  CHECK(rep.ratio == doctest::Approx(20.0 * 0.6 / 0.4));
  CHECK(rep.leading_value > 0);
  CHECK(rep.delta_m ==
        doctest::Approx((std::pow(400.0, 0.75) + 20.0 * std::pow(600.0, 0.75)) /
                        1000.0));
}

TEST_CASE("univariate baseline and comparison curve") {
  CHECK(univariate_baseline({2.0}, 0.25) == doctest::Approx(4.0 * sq(0.25)));
  CHECK(univariate_baseline({1.0, 3.0}, 0.1) == doctest::Approx(4.0 * sq(0.1)));
  const std::vector<double> grid{0.05, 0.1, 0.2, 0.3, 0.4, 0.49};
  for (double g : {1.0, 2.0, 5.0}) {
    const auto curve = multivariate_vs_univariate_curve(g, grid);
    REQUIRE(curve.size() == grid.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
      CHECK(curve[i].mu == doctest::Approx(grid[i]));
      CHECK(curve[i].multi >= curve[i].uni - 1e-12);
      if (g == 1.0)
        CHECK(curve[i].multi == doctest::Approx(curve[i].uni).epsilon(1e-9));
    }
  }
  const auto gap = multivariate_vs_univariate_curve(3.0, {0.1});
  CHECK(gap[0].multi > gap[0].uni + 1e-3);
}
