#pragma once

#include "mdqi/decoding.hpp"
#include "mdqi/problem.hpp"

namespace mdqi {

felem primitive_root(std::uint32_t p);

// Rows (1, y, y^2, ..., y^{n-1}) for y = gamma^i, i = 0..p-2.
FieldMatrix vandermonde_matrix(std::uint32_t p, std::size_t n);

enum class OpiBlockMode { EvenOdd, RandomBalanced };

// Optimal polynomial intersection with two balanced blocks of weights (1, g):
// m = p - 1 constraints ask Q(gamma^i) to land in a uniform floor(p/2)-subset
// L_i, with Q ranging over polynomials of degree < n (coefficient vector x).
MaxLinsat build_opi_instance(std::uint32_t p, std::size_t n, double g,
                             OpiBlockMode mode, std::uint64_t seed);

// Asymptotic optimum of the weighted objective at rate x = n/m, using half
// the rate as the error budget.
double gamma_g_of_x(double g, double x);

// Satisfied-weight fractions along the rate axis.
double r_dqi(double g, double x);
double r_prange(double g, double x);

struct OpiCurvePoint {
  double x, dqi, prange;
};
std::vector<OpiCurvePoint> opi_curve(double g, const std::vector<double>& xs);

struct DominanceResult {
  double min_margin = 0;  // min over the grid of r_dqi - r_prange
  double arg_g = 0, arg_x = 0;
  std::size_t points = 0;
  bool dominated = false;  // min_margin >= -1e-12
};
DominanceResult dominance_scan(const std::vector<double>& gs,
                               const std::vector<double>& xs);

struct EndToEndReport {
  std::size_t l = 0;         // error budget floor((n-1)/2)
  double lambda = 0;         // top eigenvalue of the block-degree operator
  double expected = 0;       // spectral prediction of <F_g>
  double exact = 0;          // state-vector expectation of the built state
  double state_norm = 0;     // squared norm before normalization
  double dqi_ratio = 0;      // satisfied fraction at the exact expectation
  double prange_mean_ratio = 0;
  double prange_best_ratio = 0;
};

// Builds a small instance end to end: top eigenvector weights, Fourier-side
// state construction through a Berlekamp-Massey decoder, exact expectation,
// and the randomized information-set baseline on the same instance.
EndToEndReport end_to_end_small(std::uint32_t p, std::size_t n, double g,
                                std::size_t trials, std::uint64_t seed,
                                OpiBlockMode mode = OpiBlockMode::EvenOdd);

}  // namespace mdqi
