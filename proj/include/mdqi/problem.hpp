#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mdqi/field.hpp"

namespace mdqi {

// Partition of the constraint rows into weighted blocks.
struct BlockStructure {
  std::vector<std::vector<std::size_t>> members;  // disjoint cover of rows
  std::vector<double> weights;                    // g_t > 0
  std::vector<std::size_t> block_of;              // row -> block index

  static BlockStructure contiguous(const std::vector<std::size_t>& sizes,
                                   const std::vector<double>& weights);
  static BlockStructure from_assignment(const std::vector<std::size_t>& assign,
                                        const std::vector<double>& weights);

  std::size_t num_blocks() const { return members.size(); }
  std::size_t total_rows() const;
  std::vector<std::size_t> sizes() const;
  std::vector<double> densities() const;  // m_t / m
  double weight_mass() const;             // sum_t g_t m_t
  void validate(std::size_t m) const;
};

// Weighted Max-LINSAT: maximize sum_t g_t sum_{i in S_t} f_i(b_i . x) with
// f_i = +1 on the target set L_i (|L_i| = r for every i) and -1 elsewhere.
struct MaxLinsat {
  PrimeField field;
  FieldMatrix B;                            // m x n
  std::vector<std::vector<felem>> targets;  // L_i, each sorted
  std::uint32_t r = 1;
  BlockStructure blocks;

  std::size_t m() const { return B.rows; }
  std::size_t n() const { return B.cols; }
  bool satisfies(std::size_t i, felem y) const;
  void validate() const;
};

double evaluate_objective(const MaxLinsat& inst, const fvec& x);

struct BruteForceResult {
  fvec argmax;  // lexicographically smallest maximizer
  double value;
};
BruteForceResult brute_force_optimum(const MaxLinsat& inst,
                                     std::size_t cap = kStateDimCap);

// Fraction of constraint weight satisfied by an assignment achieving
// objective value F: (F + sum g_t m_t) / (2 sum g_t m_t).
double satisfied_ratio(const MaxLinsat& inst, double objective);

// Centered per-constraint statistics and Fourier data.
struct CenteredStats {
  double fbar;   // mean of f_i over F_p: 2r/p - 1
  double phi;    // sqrt(4r(1 - r/p))
  double kappa;  // (p - 2r)/sqrt(r(p - r))
  // fourier[i][a] = p^{-1/2} sum_y omega^{ay} chi_i(y), fourier[i][0] = 0.
  std::vector<std::vector<std::complex<double>>> fourier;
};
CenteredStats centered_stats(const MaxLinsat& inst);

MaxLinsat random_instance(std::uint32_t p, std::size_t n,
                          const std::vector<std::size_t>& block_sizes,
                          const std::vector<double>& weights, std::uint32_t r,
                          std::uint64_t seed);

MaxLinsat parse_instance(std::istream& in);
void write_instance(std::ostream& out, const MaxLinsat& inst);

}  // namespace mdqi
