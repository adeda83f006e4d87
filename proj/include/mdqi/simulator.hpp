#pragma once

#include <complex>
#include <iosfwd>

#include "mdqi/decoding.hpp"
#include "mdqi/spectral.hpp"

namespace mdqi {

// Dense state over F_p^n. Index packs digits with x[0] most significant, so
// lexicographic order of assignments matches index order.
struct StateVector {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<std::complex<double>> amp;

  double norm_sq() const;
  void normalize();
};

std::size_t state_dimension(std::uint32_t p, std::size_t n,
                            std::size_t cap = kStateDimCap);
std::size_t pack_index(const fvec& x, std::uint32_t p);
fvec unpack_index(std::size_t idx, std::uint32_t p, std::size_t n);

// In-place Fourier transform over F_p^n, one radix-p pass per coordinate.
// Forward kernel p^{-1/2} omega^{+xy}; inverse conjugates.
void fourier_transform(StateVector& sv, bool inverse);

// Superposition with per-block elementary-symmetric weights of the centered
// row scores; carries the analytic normalizer, which is only unit when the
// degree budget stays below the dual-distance threshold.
StateVector block_symmetric_state(const MaxLinsat& inst, const DegreeTuple& j);

// sum_j w_j |P(j)>, renormalized defensively.
StateVector dqi_state_direct(const MaxLinsat& inst, const DegreeIndexSet& set,
                             const std::vector<double>& w);

// Builds the same state through the dual route: weighted error vectors,
// syndrome accumulation, then an inverse transform. A decoder model filters
// out error vectors it cannot round-trip; the result is not renormalized, so
// imperfect decoders shrink the norm to sum_j |w_j|^2 (1 - gamma_j).
StateVector fourier_construction(const MaxLinsat& inst,
                                 const DegreeIndexSet& set,
                                 const std::vector<double>& w,
                                 const DecoderModel& decoder,
                                 std::size_t cap = kEnumCap);

// sum_x |amp(x)|^2 F_g(x); no normalization applied.
double exact_expectation(const MaxLinsat& inst, const StateVector& sv);

// Multiplies amp(x) by the centered score sum of block t. Used to check the
// three-term recurrence of the block operators on |P(j)>.
void apply_centered_block_score(const MaxLinsat& inst, std::size_t t,
                                StateVector& sv);

// Uniform mixture over the rectangle prod_t {J_t+1, ..., J_t+r_t-1}; needs
// r_t >= 2. Strict mode enforces |J| + sum r_t + 1 < d_perp / 2.
StateVector rho_Jr_state(const MaxLinsat& inst,
                         const std::vector<std::size_t>& J,
                         const std::vector<std::size_t>& r,
                         bool strict = false);

struct ConcentrationReport {
  double mass = 0;              // probability of the typical band
  std::size_t band_size = 0;    // number of assignments in the band
  double mean_ratio = 0;        // E[F_g/m | band]
  double predicted = 0;         // sum_t 2 g_t theta_t sqrt(alpha_t(1-alpha_t))
  std::vector<double> alpha, beta;
  double eps = 0;
};

ConcentrationReport concentration_experiment(const MaxLinsat& inst,
                                             const std::vector<std::size_t>& J,
                                             const std::vector<std::size_t>& r,
                                             double eps);

void write_state(std::ostream& out, const StateVector& sv);

// Max amplitude deviation after aligning the global phase of b to a.
double phase_aligned_distance(const StateVector& a, const StateVector& b);

}  // namespace mdqi
