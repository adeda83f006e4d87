#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mdqi/opi.hpp"

using namespace mdqi;

TEST_CASE("primitive roots") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 103u, 211u}) {
    const felem g = primitive_root(p);
    PrimeField F(p);
    // Order must be exactly p - 1: no proper divisor exponent hits 1.
    for (std::uint32_t d = 1; d < p - 1; ++d)
      if ((p - 1) % d == 0) CHECK(F.pow(g, d) != 1);
    CHECK(F.pow(g, p - 1) == 1);
  }
}

TEST_CASE("vandermonde matrix shape") {
  const auto B = vandermonde_matrix(7, 3);
  CHECK(B.rows == 6);
  CHECK(B.cols == 3);
  PrimeField F(7);
  const felem g = primitive_root(7);
  for (std::size_t i = 0; i < 6; ++i) {
    const felem y = F.pow(g, static_cast<std::uint32_t>(i));
    CHECK(B.at(i, 0) == 1);
    CHECK(B.at(i, 1) == y);
    CHECK(B.at(i, 2) == F.mul(y, y));
  }
  // Distinct evaluation points: all rows differ.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) CHECK(B.row(i) != B.row(j));
}

TEST_CASE("opi instance construction") {
  const auto inst = build_opi_instance(11, 3, 2.0, OpiBlockMode::EvenOdd, 5);
  inst.validate();
  CHECK(inst.m() == 10);
  CHECK(inst.n() == 3);
  CHECK(inst.r == 5);
  CHECK(inst.blocks.num_blocks() == 2);
  CHECK(inst.blocks.sizes() == std::vector<std::size_t>{5, 5});
  CHECK(inst.blocks.weights[0] == doctest::Approx(1.0));
  CHECK(inst.blocks.weights[1] == doctest::Approx(2.0));
  // Even rows land in block 0 under the round-robin split.
  for (std::size_t i = 0; i < 10; ++i)
    CHECK(inst.blocks.block_of[i] == i % 2);
  const auto rb = build_opi_instance(11, 3, 2.0, OpiBlockMode::RandomBalanced, 5);
  rb.validate();
  CHECK(rb.blocks.sizes() == std::vector<std::size_t>{5, 5});
}

TEST_CASE("dqi rate closed forms") {
  // g = 1 collapses to the unweighted rate 1/2 + sqrt(x/2 (1 - x/2)).
  for (double x : {0.1, 0.3, 0.5, 0.9}) {
    const double want = 0.5 + std::sqrt(x / 2.0 * (1.0 - x / 2.0));
    CHECK(r_dqi(1.0, x) == doctest::Approx(want).epsilon(1e-10));
  }
  // Weight inversion symmetry for both curves.
  for (double g : {0.1, 0.25, 0.5, 2.0, 4.0, 10.0})
    for (double x : {0.05, 0.25, 0.5, 0.75, 0.95}) {
      CHECK(r_dqi(g, x) == doctest::Approx(r_dqi(1.0 / g, x)).epsilon(1e-9));
      CHECK(r_prange(g, x) ==
            doctest::Approx(r_prange(1.0 / g, x)).epsilon(1e-9));
      CHECK(gamma_g_of_x(g, x) ==
            doctest::Approx(g * gamma_g_of_x(1.0 / g, x)).epsilon(1e-9));
    }
}

TEST_CASE("prange benchmarks") {
  CHECK(r_prange(2.0, 0.25) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(r_prange(2.0, 0.75) == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
  // Endpoints: half the weight at x = 0, everything at x = 1.
  for (double g : {0.5, 1.0, 3.0}) {
    CHECK(r_prange(g, 0.0) == doctest::Approx(0.5));
    CHECK(r_prange(g, 1.0) == doctest::Approx(1.0));
    // Continuity at the branch point.
    CHECK(r_prange(g, 0.5 - 1e-9) ==
          doctest::Approx(r_prange(g, 0.5 + 1e-9)).epsilon(1e-6));
  }
  // Monotone nondecreasing in x.
  for (double g : {0.25, 1.0, 5.0}) {
    double prev = 0;
    for (int i = 0; i <= 100; ++i) {
      const double v = r_prange(g, i / 100.0);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("curves and dominance") {
  const std::vector<double> xs{0.1, 0.25, 0.5, 0.75, 0.9};
  const auto curve = opi_curve(2.0, xs);
  REQUIRE(curve.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(curve[i].x == doctest::Approx(xs[i]));
    CHECK(curve[i].dqi == doctest::Approx(r_dqi(2.0, xs[i])));
    CHECK(curve[i].prange == doctest::Approx(r_prange(2.0, xs[i])));
  }
  const auto res = dominance_scan({0.5, 1.0, 2.0, 10.0}, xs);
  CHECK(res.dominated);
  CHECK(res.min_margin >= -1e-12);
  CHECK(res.points == 4 * xs.size());
  // The reported argmin actually achieves the margin.
  CHECK(r_dqi(res.arg_g, res.arg_x) - r_prange(res.arg_g, res.arg_x) ==
        doctest::Approx(res.min_margin).epsilon(1e-12));
}

TEST_CASE("end to end on a small field") {
  const auto rep = end_to_end_small(7, 3, 2.0, 25, 3);
  CHECK(rep.l == 1);
  CHECK(rep.lambda > 0);
  // Radius-l RS decoding is perfect on the retained layers, so the state
  // keeps full mass and the spectral prediction is exact.
  CHECK(rep.state_norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.exact == doctest::Approx(rep.expected).epsilon(1e-9));
  CHECK(rep.dqi_ratio > 0.5);
  CHECK(rep.dqi_ratio <= 1.0);
  CHECK(rep.prange_mean_ratio > 0.0);
  CHECK(rep.prange_best_ratio >= rep.prange_mean_ratio - 1e-12);
  // Deterministic under the seed.
  const auto rep2 = end_to_end_small(7, 3, 2.0, 25, 3);
  CHECK(rep2.exact == doctest::Approx(rep.exact).epsilon(1e-14));
  CHECK(rep2.prange_best_ratio == doctest::Approx(rep.prange_best_ratio));
  // Larger field, same pipeline.
  const auto rep11 = end_to_end_small(11, 3, 1.5, 15, 1);
  CHECK(rep11.l == 1);
  CHECK(rep11.exact == doctest::Approx(rep11.expected).epsilon(1e-9));
}
