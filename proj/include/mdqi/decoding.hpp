#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>

#include "mdqi/spectral.hpp"

namespace mdqi {

// Syndrome decoding by weight-layered enumeration; returns the first match in
// (weight, support, value) order, so ties resolve deterministically.
std::optional<fvec> bdd_decode(const FieldMatrix& B, const fvec& synd,
                               std::size_t radius, std::size_t cap = kEnumCap);

// Reed-Solomon-style code: rows (1, y, y^2, ..., y^{n-1}) for y = gamma^i,
// i = 0..p-2. The dual has minimum distance n + 1.
struct RsCode {
  std::uint32_t p = 2;
  std::size_t n = 1;
  felem gamma = 1;
};

class RsDecoder {
 public:
  explicit RsDecoder(const RsCode& code);
  const RsCode& code() const { return code_; }
  std::optional<fvec> decode(const fvec& synd, std::size_t radius) const;
  // Allocation-free path: err must hold p-1 entries; false on failure.
  bool decode_into(const felem* synd, std::size_t radius, felem* err) const;

 private:
  RsCode code_;
  std::vector<std::uint16_t> mul_;       // (p x p) product table
  std::vector<felem> inv_, xi_, xi_inv_; // inverses, gamma^i, gamma^{-i}
};

std::optional<fvec> bm_decode(const RsCode& code, const fvec& synd,
                              std::size_t radius);

// Membership model for the simulator: which error vectors round-trip through
// the decoder. Table mode carries an explicit failure set.
struct DecoderModel {
  enum class Kind { Perfect, BoundedDistance, ReedSolomon, Table };
  Kind kind = Kind::Perfect;
  std::size_t radius = 0;
  std::set<fvec> failures;
  std::shared_ptr<RsDecoder> rs;

  static DecoderModel perfect();
  static DecoderModel bounded_distance(std::size_t radius);
  static DecoderModel reed_solomon(const RsCode& code, std::size_t radius);
  static DecoderModel table(std::set<fvec> failures);

  bool decodes(const FieldMatrix& B, const fvec& y) const;
};

// Failure accounting over the layers E_j, F_2 only. gtilde0[idx][t] counts
// failing vectors by unset coordinate within block t of layer idx; gtilde1
// likewise by set coordinate. Edges (j, t) are admissible when j + e_t stays
// in the index set.
struct FailureProfile {
  DegreeIndexSet set;
  std::vector<double> gamma;                 // per layer
  std::vector<std::vector<double>> gtilde0;  // [layer][block]
  std::vector<std::vector<double>> gtilde1;  // [layer][block], layer = j + e_t
  double gamma_max = 0;
  double gtilde_max = 0;
};

FailureProfile failure_profile(const std::set<fvec>& failures,
                               const BlockStructure& blocks,
                               const DegreeIndexSet& set);
void write_failure_profile_csv(std::ostream& out, const FailureProfile& fp);
std::set<fvec> parse_failure_set(std::istream& in, std::size_t m);
void write_failure_set(std::ostream& out, const std::set<fvec>& failures);

// w^T A w / ||w||^2 - 2 (gtilde_max / (1 - gamma_max)) sum_t g_t (m_t + 1).
// A must be the zero-diagonal matrix on the same index set.
double theorem_bound(const std::vector<double>& w, const SpectralMatrix& A,
                     const FailureProfile& fp, const BlockStructure& blocks);

struct PrangeReport {
  fvec best_x;
  double best_value = -1e300;
  double best_ratio = 0;
  double mean_ratio = 0;
  double stddev_ratio = 0;
  std::size_t trials = 0;
};

// Randomized information-set search: fill the set from the heaviest block
// first (up to 50 invertibility resamples), extend greedily through lighter
// blocks, pick a uniform target per chosen row, solve, and score.
PrangeReport weighted_prange(const MaxLinsat& inst, std::size_t trials,
                             std::uint64_t seed);

}  // namespace mdqi
