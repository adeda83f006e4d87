#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mdqi {

// phi_kappa(alpha) = kappa*alpha + 2*sqrt(alpha(1-alpha)) on [0,1].
double phi_kappa(double alpha, double kappa);

struct GammaSolution {
  double value = 0;
  std::vector<double> alpha;  // optimal per-block fractions
  double lambda = 0;          // multiplier of the budget constraint
  bool budget_active = false;
};

// Gamma_{g,theta,kappa}(mu) = sup { sum_t theta_t g_t phi_kappa(alpha_t) :
// 0 <= alpha_t <= 1, sum_t theta_t alpha_t <= mu }, solved in closed form per
// block with a bisected multiplier. theta must sum to 1; mu in (0, 1/2].
GammaSolution gamma_functional(const std::vector<double>& g,
                               const std::vector<double>& theta, double kappa,
                               double mu);

// Derivative-free reference solver. N = 1 or 2: dense grid on the leading
// coordinate (step 1e-4) with two local refinement passes; larger N rejected.
double gamma_grid_search(const std::vector<double>& g,
                         const std::vector<double>& theta, double kappa,
                         double mu);

// Projected coordinate ascent; works for any N, used to validate N >= 3.
double gamma_coordinate_ascent(const std::vector<double>& g,
                               const std::vector<double>& theta, double kappa,
                               double mu, std::uint64_t restarts = 8);

// F_mu(g): two balanced blocks with weights (1, g), kappa = 0, normalized by
// the total weight 1 + g.
double normalized_gain(double g, double mu);

enum class Regime { Weak, Crossover, Strong };

struct RegimeReport {
  Regime label = Regime::Crossover;
  double ratio = 0;          // g * theta2 / theta1
  double leading_value = 0;  // leading-order Gamma in the regime
  double delta_m = 0;        // (m_1^{3/4} + g m_2^{3/4}) / m
};

// Two blocks, weights (1, g). Decade thresholds on g*theta2/theta1 separate
// the regimes: <= 1/10 weak, >= 10 strong, crossover between.
RegimeReport two_block_regimes(double g, const std::vector<double>& theta,
                               double kappa, double mu, double m_total);

// Scale-weighted single-block baseline 2 * mean(c) * sqrt(mu(1-mu)).
double univariate_baseline(const std::vector<double>& c, double mu);

struct CurvePoint {
  double mu, multi, uni;
};
// Balanced two-block Gamma with weights (1, g) against the univariate
// baseline with the same average weight, both per unit of m.
std::vector<CurvePoint> multivariate_vs_univariate_curve(
    double g, const std::vector<double>& mu_grid);

}  // namespace mdqi
