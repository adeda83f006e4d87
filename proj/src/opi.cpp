#include "mdqi/opi.hpp"

#include <algorithm>
#include <cmath>

#include "mdqi/asymptotics.hpp"
#include "mdqi/rng.hpp"
#include "mdqi/simulator.hpp"

namespace mdqi {

felem primitive_root(std::uint32_t p) {
  PrimeField F(p);
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t q = p - 1;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
    if (q % d) continue;
    factors.push_back(d);
    while (q % d == 0) q /= d;
  }
  if (q > 1) factors.push_back(q);
  for (felem cand = 2; cand < p; ++cand) {
    bool primitive = true;
    for (std::uint32_t f : factors)
      if (F.pow(cand, (p - 1) / f) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return cand;
  }
  throw invariant_violation("no primitive root found");
}

FieldMatrix vandermonde_matrix(std::uint32_t p, std::size_t n) {
  PrimeField F(p);
  require(n >= 1 && n < static_cast<std::size_t>(p) - 1,
          "polynomial degree bound out of range");
  const std::size_t m = p - 1;
  const felem gamma = primitive_root(p);
  FieldMatrix B(p, m, n);
  felem y = 1;
  for (std::size_t i = 0; i < m; ++i) {
    felem pw = 1;
    for (std::size_t c = 0; c < n; ++c) {
      B.at(i, c) = pw;
      pw = F.mul(pw, y);
    }
    y = F.mul(y, gamma);
  }
  return B;
}

MaxLinsat build_opi_instance(std::uint32_t p, std::size_t n, double g,
                             OpiBlockMode mode, std::uint64_t seed) {
  PrimeField F(p);
  require(p >= 5, "need at least two rows per block");
  require(g > 0, "block weight must be positive");
  const std::size_t m = p - 1;
  FieldMatrix B = vandermonde_matrix(p, n);

  Rng rng(seed);
  const std::uint32_t r = p / 2;
  std::vector<std::vector<felem>> targets(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto pick = rng.subset(p, r);
    targets[i].assign(pick.begin(), pick.end());
  }

  std::vector<std::size_t> assign(m, 1);
  if (mode == OpiBlockMode::EvenOdd) {
    for (std::size_t i = 0; i < m; i += 2) assign[i] = 0;
  } else {
    for (std::size_t i : rng.subset(m, m / 2)) assign[i] = 0;
  }
  MaxLinsat inst{F, std::move(B), std::move(targets), r,
                 BlockStructure::from_assignment(assign, {1.0, g})};
  inst.validate();
  return inst;
}

double gamma_g_of_x(double g, double x) {
  require(x > 0 && x <= 1, "rate must lie in (0, 1]");
  return gamma_functional({1.0, g}, {0.5, 0.5}, 0.0, x / 2).value;
}

double r_dqi(double g, double x) {
  return 0.5 + gamma_g_of_x(g, x) / (1.0 + g);
}

double r_prange(double g, double x) {
  require(g > 0, "block weight must be positive");
  require(x >= 0 && x <= 1, "rate must lie in [0, 1]");
  const double hi = std::max(g, 1.0);
  const double lo = std::min(g, 1.0);
  // Fill the information set from the heavier block first; the kink sits at
  // the point where that block is exhausted.
  if (x <= 0.5) return (0.5 * (1.0 + g) + hi * x) / (1.0 + g);
  return (hi + lo * x) / (1.0 + g);
}

std::vector<OpiCurvePoint> opi_curve(double g, const std::vector<double>& xs) {
  std::vector<OpiCurvePoint> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, r_dqi(g, x), r_prange(g, x)});
  return out;
}

DominanceResult dominance_scan(const std::vector<double>& gs,
                               const std::vector<double>& xs) {
  DominanceResult res;
  res.min_margin = 1e300;
  for (double g : gs)
    for (double x : xs) {
      const double margin = r_dqi(g, x) - r_prange(g, x);
      ++res.points;
      if (margin < res.min_margin) {
        res.min_margin = margin;
        res.arg_g = g;
        res.arg_x = x;
      }
    }
  require(res.points > 0, "empty dominance grid");
  res.dominated = res.min_margin >= -1e-12;
  return res;
}

EndToEndReport end_to_end_small(std::uint32_t p, std::size_t n, double g,
                                std::size_t trials, std::uint64_t seed,
                                OpiBlockMode mode) {
  const MaxLinsat inst = build_opi_instance(p, n, g, mode, seed);
  EndToEndReport rep;
  rep.l = (n - 1) / 2;
  require(rep.l >= 1, "degree bound too small for a nontrivial budget");

  const auto set = enumerate_degree_tuples(inst.blocks.sizes(), rep.l);
  const auto stats = centered_stats(inst);
  const auto A = build_matrix(inst.blocks, set, stats.kappa);
  const auto top = lambda_max(A);
  rep.lambda = top.value;
  // The Vandermonde rows span an MDS code whose dual distance is n + 1, so
  // 2l + 1 <= n < n + 1 holds by construction; skip the brute-force check,
  // which is infeasible already at p = 11.
  require(2 * rep.l + 1 <= n, "degree budget violates the dual distance bound");
  rep.expected = expected_value(inst, set, top.vec, /*strict=*/false);

  const auto decoder = DecoderModel::reed_solomon(
      RsCode{p, n, primitive_root(p)}, rep.l);
  const StateVector sv = fourier_construction(inst, set, top.vec, decoder);
  rep.state_norm = sv.norm_sq();
  require(rep.state_norm > 0, "constructed state vanished");
  rep.exact = exact_expectation(inst, sv) / rep.state_norm;
  rep.dqi_ratio = satisfied_ratio(inst, rep.exact);

  const auto prange = weighted_prange(inst, trials, seed + 1);
  rep.prange_mean_ratio = prange.mean_ratio;
  rep.prange_best_ratio = prange.best_ratio;
  return rep;
}

}  // namespace mdqi
