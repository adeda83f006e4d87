#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mdqi/asymptotics.hpp"
#include "mdqi/problem.hpp"

namespace mdqi {

using DegreeTuple = std::vector<std::uint32_t>;

// All tuples j with j_t <= m_t and sum_t j_t <= budget, in lexicographic
// order; index_of inverts by binary search.
struct DegreeIndexSet {
  std::vector<std::size_t> block_caps;
  std::size_t budget = 0;
  std::vector<DegreeTuple> tuples;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t size() const { return tuples.size(); }
  std::size_t index_of(const DegreeTuple& j) const;
  std::size_t weight(std::size_t idx) const;  // sum of entries
};

DegreeIndexSet enumerate_degree_tuples(const std::vector<std::size_t>& sizes,
                                       std::size_t budget,
                                       std::size_t cap = kIndexSetCap);

// Symmetric block-degree operator: off-diagonal g_t sqrt(j_t (m_t - j_t + 1))
// between j and j - e_t, diagonal kappa * sum_t g_t j_t.
struct SpectralMatrix {
  std::size_t dim = 0;
  double kappa = 0;
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;  // adjacency

  void multiply(const double* in, double* out) const;
  std::size_t nnz() const;
};

SpectralMatrix build_matrix(const BlockStructure& blocks,
                            const DegreeIndexSet& set, double kappa);
void write_spectral(std::ostream& out, const SpectralMatrix& A);

struct EigenPair {
  double value = 0;
  std::vector<double> vec;  // unit norm; nonnegative orientation when Perron
};

EigenPair lambda_max(const SpectralMatrix& A);            // route by dimension
EigenPair lambda_max_dense(const SpectralMatrix& A);      // dim <= 2000
EigenPair lambda_max_iterative(const SpectralMatrix& A);  // shifted power iter

// Per-block window coefficients: flat profile of width r_t = floor(sqrt(J_t))
// ending at J_t = floor(alpha_t m_t), alpha from the Gamma water-filling at
// budget l/m. J_t = 0 degenerates to the delta profile.
struct AnsatzCoefficients {
  std::vector<std::vector<double>> per_block;  // a^{(t)}, length m_t + 1
  std::vector<std::size_t> J, width;
  std::vector<double> to_vector(const DegreeIndexSet& set) const;
};

AnsatzCoefficients product_ansatz(const BlockStructure& blocks, std::size_t l,
                                  double kappa);

double rayleigh_quotient(const SpectralMatrix& A, const std::vector<double>& w);

// fbar * sum_t g_t m_t + (phi/sqrt(p)) * w^T A w / ||w||^2. Strict mode
// verifies 2l + 1 < dual distance first.
double expected_value(const MaxLinsat& inst, const DegreeIndexSet& set,
                      const std::vector<double>& w, bool strict = true);

// Upper bound max_j sum_t g_t ((m_t - j_t) x_t + j_t / x_t + kappa j_t) from
// a positive test vector with product form x_t^{j_t}.
double collatz_wielandt_bound(const BlockStructure& blocks,
                              const DegreeIndexSet& set, double kappa,
                              const std::vector<double>& x);

}  // namespace mdqi
