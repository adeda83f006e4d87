#include "mdqi/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "mdqi/common.hpp"
#include "mdqi/rng.hpp"

namespace mdqi {

double phi_kappa(double alpha, double kappa) {
  alpha = std::clamp(alpha, 0.0, 1.0);
  return kappa * alpha + 2.0 * std::sqrt(alpha * (1.0 - alpha));
}

namespace {

// Stationary point of phi_kappa under multiplier u = lambda/g - kappa:
// (1 - 2a)/sqrt(a(1-a)) = u  =>  a = (1 - u/sqrt(u^2+4))/2.
double alpha_of_u(double u) {
  return std::clamp(0.5 * (1.0 - u / std::sqrt(u * u + 4.0)), 0.0, 1.0);
}

double alpha_unconstrained(double kappa) {
  return alpha_of_u(-kappa);
}

void check_config(const std::vector<double>& g, const std::vector<double>& theta,
                  double mu) {
  require(!g.empty() && g.size() == theta.size(),
          "gamma: g/theta shape mismatch");
  double sum = 0;
  for (double t : theta) {
    require(t > 0, "gamma: theta entries must be positive");
    sum += t;
  }
  require(std::abs(sum - 1.0) <= 1e-9, "gamma: theta must sum to 1");
  for (double w : g) require(w > 0, "gamma: weights must be positive");
  require(mu > 0 && mu <= 0.5, "gamma: mu must lie in (0, 1/2]");
}

}  // namespace

GammaSolution gamma_functional(const std::vector<double>& g,
                               const std::vector<double>& theta, double kappa,
                               double mu) {
  check_config(g, theta, mu);
  const std::size_t N = g.size();
  GammaSolution sol;
  sol.alpha.assign(N, 0.0);

  const double a_star = alpha_unconstrained(kappa);
  if (a_star <= mu) {  // budget slack: every block sits at its own maximum
    sol.budget_active = false;
    sol.lambda = 0;
    for (std::size_t t = 0; t < N; ++t) sol.alpha[t] = a_star;
  } else {
    sol.budget_active = true;
    auto budget = [&](double lambda) {
      double b = 0;
      for (std::size_t t = 0; t < N; ++t)
        b += theta[t] * alpha_of_u(lambda / g[t] - kappa);
      return b;
    };
    double hi = 0;
    for (double w : g)
      hi = std::max(hi, 10.0 * w * (kappa + 2.0 / std::sqrt(mu * (1.0 - mu))));
    hi = std::max(hi, 1.0);
    while (budget(hi) > mu) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
      double mid = 0.5 * (lo + hi);
      if (budget(mid) > mu) lo = mid;
      else hi = mid;
    }
    sol.lambda = 0.5 * (lo + hi);
    for (std::size_t t = 0; t < N; ++t)
      sol.alpha[t] = alpha_of_u(sol.lambda / g[t] - kappa);
  }

  sol.value = 0;
  for (std::size_t t = 0; t < N; ++t)
    sol.value += theta[t] * g[t] * phi_kappa(sol.alpha[t], kappa);
  return sol;
}

double gamma_grid_search(const std::vector<double>& g,
                         const std::vector<double>& theta, double kappa,
                         double mu) {
  check_config(g, theta, mu);
  require(g.size() <= 2, "gamma_grid_search: only N <= 2 supported");
  const double a_star = alpha_unconstrained(kappa);

  if (g.size() == 1) {
    // One block: optimum at min(a_star, mu/theta) since phi is unimodal.
    double cap = std::min(1.0, mu / theta[0]);
    double step = 1e-4;
    double best = -1e300, best_a = 0;
    for (double a = 0; a <= cap + 1e-12; a += step) {
      double v = theta[0] * g[0] * phi_kappa(std::min(a, cap), kappa);
      if (v > best) {
        best = v;
        best_a = a;
      }
    }
    for (int pass = 0; pass < 2; ++pass) {
      double lo = std::max(0.0, best_a - 2 * step);
      double hi = std::min(cap, best_a + 2 * step);
      step /= 100;
      for (double a = lo; a <= hi + 1e-15; a += step) {
        double v = theta[0] * g[0] * phi_kappa(a, kappa);
        if (v > best) {
          best = v;
          best_a = a;
        }
      }
    }
    return best;
  }

  // Two blocks: outer grid on alpha_1, exact inner choice for alpha_2 (phi is
  // unimodal, so the inner optimum is the unconstrained peak clipped to the
  // remaining budget).
  auto value_at = [&](double a1) {
    double rem = (mu - theta[0] * a1) / theta[1];
    if (rem < 0) return -1e300;
    double a2 = std::min({a_star, rem, 1.0});
    return theta[0] * g[0] * phi_kappa(a1, kappa) +
           theta[1] * g[1] * phi_kappa(a2, kappa);
  };
  double cap = std::min(1.0, mu / theta[0]);
  double step = 1e-4;
  double best = -1e300, best_a = 0;
  for (double a = 0; a <= cap + 1e-12; a += step) {
    double v = value_at(std::min(a, cap));
    if (v > best) {
      best = v;
      best_a = std::min(a, cap);
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    double lo = std::max(0.0, best_a - 2 * step);
    double hi = std::min(cap, best_a + 2 * step);
    step /= 100;
    for (double a = lo; a <= hi + 1e-15; a += step) {
      double v = value_at(a);
      if (v > best) {
        best = v;
        best_a = a;
      }
    }
  }
  return best;
}

double gamma_coordinate_ascent(const std::vector<double>& g,
                               const std::vector<double>& theta, double kappa,
                               double mu, std::uint64_t restarts) {
  check_config(g, theta, mu);
  const std::size_t N = g.size();
  const double a_star = alpha_unconstrained(kappa);
  double best = -1e300;
  for (std::uint64_t rs = 0; rs < restarts; ++rs) {
    Rng rng(rs);
    std::vector<double> a(N, 0.0);
    if (rs > 0) {
      // Random feasible start.
      double used = 0;
      for (std::size_t t = 0; t < N; ++t) {
        double room = std::max(0.0, (mu - used)) / theta[t];
        a[t] = std::min(1.0, room) * rng.unit();
        used += theta[t] * a[t];
      }
    }
    auto total = [&]() {
      double v = 0;
      for (std::size_t t = 0; t < N; ++t)
        v += theta[t] * g[t] * phi_kappa(a[t], kappa);
      return v;
    };
    double prev = total();
    for (int sweep = 0; sweep < 20000; ++sweep) {
      // Singleton moves: each block takes as much slack as helps it.
      for (std::size_t t = 0; t < N; ++t) {
        double others = 0;
        for (std::size_t s = 0; s < N; ++s)
          if (s != t) others += theta[s] * a[s];
        double room = std::max(0.0, (mu - others) / theta[t]);
        a[t] = std::min({a_star, room, 1.0});
      }
      // Pairwise transfers at fixed total budget, golden-section on the
      // exchanged amount.
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      for (std::size_t s = 0; s + 1 < N; ++s) {
        for (std::size_t t = s + 1; t < N; ++t) {
          double pool = theta[s] * a[s] + theta[t] * a[t];
          auto val = [&](double bs) {  // budget assigned to block s
            double as = std::min(1.0, bs / theta[s]);
            double at = std::min(1.0, (pool - bs) / theta[t]);
            return theta[s] * g[s] * phi_kappa(as, kappa) +
                   theta[t] * g[t] * phi_kappa(at, kappa);
          };
          double lo = std::max(0.0, pool - theta[t]);
          double hi = std::min(pool, theta[s]);
          if (hi <= lo) continue;
          double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
          double f1 = val(x1), f2 = val(x2);
          for (int it = 0; it < 120; ++it) {
            if (f1 < f2) {
              lo = x1;
              x1 = x2;
              f1 = f2;
              x2 = lo + gr * (hi - lo);
              f2 = val(x2);
            } else {
              hi = x2;
              x2 = x1;
              f2 = f1;
              x1 = hi - gr * (hi - lo);
              f1 = val(x1);
            }
          }
          double bs = 0.5 * (lo + hi);
          a[s] = std::min(1.0, bs / theta[s]);
          a[t] = std::min(1.0, (pool - bs) / theta[t]);
        }
      }
      double now = total();
      if (now - prev < 1e-14) break;
      prev = now;
    }
    best = std::max(best, prev);
  }
  return best;
}

double normalized_gain(double g, double mu) {
  GammaSolution s = gamma_functional({1.0, g}, {0.5, 0.5}, 0.0, mu);
  return s.value / (1.0 + g);
}

RegimeReport two_block_regimes(double g, const std::vector<double>& theta,
                               double kappa, double mu, double m_total) {
  require(theta.size() == 2, "two_block_regimes: need exactly two blocks");
  RegimeReport rep;
  rep.ratio = g * theta[1] / theta[0];
  const double a_star = alpha_unconstrained(kappa);
  if (rep.ratio <= 0.1) {
    rep.label = Regime::Weak;
    rep.leading_value =
        theta[0] * phi_kappa(std::min({a_star, mu / theta[0], 1.0}), kappa);
  } else if (rep.ratio >= 10.0) {
    rep.label = Regime::Strong;
    rep.leading_value =
        g * theta[1] * phi_kappa(std::min({a_star, mu / theta[1], 1.0}), kappa);
  } else {
    rep.label = Regime::Crossover;
    rep.leading_value = gamma_functional({1.0, g}, theta, kappa, mu).value;
  }
  double m1 = theta[0] * m_total, m2 = theta[1] * m_total;
  rep.delta_m = (std::pow(m1, 0.75) + g * std::pow(m2, 0.75)) / m_total;
  return rep;
}

double univariate_baseline(const std::vector<double>& c, double mu) {
  require(!c.empty(), "univariate_baseline: empty weights");
  require(mu > 0 && mu <= 0.5, "univariate_baseline: mu out of range");
  double mean = 0;
  for (double v : c) mean += v;
  mean /= static_cast<double>(c.size());
  return 2.0 * mean * std::sqrt(mu * (1.0 - mu));
}

std::vector<CurvePoint> multivariate_vs_univariate_curve(
    double g, const std::vector<double>& mu_grid) {
  std::vector<CurvePoint> out;
  out.reserve(mu_grid.size());
  for (double mu : mu_grid) {
    CurvePoint pt;
    pt.mu = mu;
    pt.multi = gamma_functional({1.0, g}, {0.5, 0.5}, 0.0, mu).value;
    pt.uni = univariate_baseline({1.0, g}, mu);
    out.push_back(pt);
  }
  return out;
}

}  // namespace mdqi
