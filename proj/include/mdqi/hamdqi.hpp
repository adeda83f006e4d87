#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "mdqi/krawtchouk.hpp"
#include "mdqi/spectral.hpp"

namespace mdqi {

// Pauli word i^k Z^alpha X^beta on n qubits (n <= 32). Qubit q maps to mask
// bit n-1-q, so packed basis-state indices and masks share one convention.
struct Pauli {
  std::size_t n = 1;
  std::uint64_t alpha = 0, beta = 0;
  std::uint32_t k = 0;  // phase exponent mod 4

  // Hermitian representative: k = (-popcount(alpha & beta)) mod 4.
  static Pauli canonical(std::size_t n, std::uint64_t alpha, std::uint64_t beta);
  static Pauli from_string(const std::string& word);
  std::string to_string() const;

  Pauli operator*(const Pauli& rhs) const;
  bool operator==(const Pauli& rhs) const = default;
  bool commutes(const Pauli& rhs) const;
  bool is_identity() const { return alpha == 0 && beta == 0; }

  Eigen::MatrixXcd dense() const;
};

// H = sum_t g_t sum_{i in S_t} P_i with every P_i a non-identity canonical
// Pauli; commutation is checked separately.
struct BlockHamiltonian {
  std::size_t n = 0;
  std::vector<std::vector<Pauli>> blocks;
  std::vector<double> weights;

  std::size_t num_terms() const;
  std::vector<std::size_t> sizes() const;
  BlockStructure structure() const;  // contiguous over the flattened terms
  // m x 2n binary matrix, row i = (alpha bits | beta bits) of term i.
  FieldMatrix symplectic() const;
  void validate() const;
};

BlockHamiltonian parse_hamiltonian(std::istream& in);
void write_hamiltonian(std::ostream& out, const BlockHamiltonian& ham);

// First noncommuting pair of flattened term indices, if any.
std::optional<std::pair<std::size_t, std::size_t>> commutation_check(
    const BlockHamiltonian& ham);

BlockHamiltonian random_commuting_hamiltonian(
    std::size_t n, const std::vector<std::size_t>& sizes,
    const std::vector<double>& weights, std::uint64_t seed);

// Pauli-basis coefficients of P(H): r_j depends only on the per-block counts
// of the word, gamma_j = sqrt(prod C(m_t, j_t)) r_j / norm.
struct HamCoefficients {
  DegreeIndexSet set;
  std::vector<double> r, gamma;
  double norm = 0;
};
// pcoef[k] multiplies x^k.
HamCoefficients ham_coefficients(const BlockHamiltonian& ham,
                                 const std::vector<double>& pcoef);

struct HamCoefficientsExact {
  DegreeIndexSet set;
  std::vector<BigRat> r;
};
// Spin-sum route: r_j = 2^{-m} sum_s prod_t K_{s_t}(j_t; m_t) P(lambda_s).
HamCoefficientsExact ham_coefficients_exact(const BlockHamiltonian& ham,
                                            const std::vector<BigRat>& pcoef);
// Multinomial-expansion route over a representative word per profile.
HamCoefficientsExact ham_coefficients_multinomial(
    const BlockHamiltonian& ham, const std::vector<BigRat>& pcoef);
// Coefficient of one specific word y (0/1 per term).
BigRat ham_r_of_word(const BlockHamiltonian& ham,
                     const std::vector<BigRat>& pcoef,
                     const std::vector<std::uint8_t>& y);

BigRat rational_from_double(double x);

Eigen::MatrixXcd dense_hamiltonian(const BlockHamiltonian& ham);

// P(H)^2 / Tr P(H)^2, with the Horner evaluation cross-checked against the
// Pauli-basis expansion to 1e-8.
Eigen::MatrixXcd dense_rho_P(const BlockHamiltonian& ham,
                             const std::vector<double>& pcoef);

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct ProtocolReport {
  double norm = 0;        // normalizer of the coefficient vector
  double state_norm = 0;  // squared norm of the simulated state
  double trace_dist = 0;  // distance between the reduced state and the target
  std::size_t support = 0;
  std::size_t decode_round_trips = 0;
};
// Runs the syndrome-space preparation: phase-corrected canonical words are
// applied to half of a maximally entangled pair, after checking that the
// syndrome map is injective on the support and that a bounded-distance
// decoder round-trips every supported word.
ProtocolReport protocol_simulation(const BlockHamiltonian& ham,
                                   const std::vector<double>& pcoef);

struct GibbsReport {
  double h_norm = 0;
  std::size_t degree = 0;
  double distance = 0;
  double delta = 0;
};
// Chebyshev interpolant of exp(-beta x / 2) squared against the exact Gibbs
// density matrix; throws if the trace distance exceeds delta.
GibbsReport gibbs_distance(const BlockHamiltonian& ham, double beta,
                           double delta);

}  // namespace mdqi
