#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mdqi/common.hpp"

namespace mdqi {

using felem = std::uint32_t;
using fvec = std::vector<felem>;

struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime);

  felem add(felem a, felem b) const { return (a + b) % p; }
  felem sub(felem a, felem b) const { return (a + p - b) % p; }
  felem mul(felem a, felem b) const {
    return static_cast<felem>(std::uint64_t(a) * b % p);
  }
  felem neg(felem a) const { return a ? p - a : 0; }
  felem pow(felem a, std::uint64_t e) const;
  felem inv(felem a) const;
};

// Dense row-major matrix over F_p. Rows are the constraint vectors b_i, so
// the syndrome map y -> B^T y contracts over rows.
struct FieldMatrix {
  std::uint32_t p = 2;
  std::size_t rows = 0, cols = 0;
  std::vector<felem> a;

  FieldMatrix() = default;
  FieldMatrix(std::uint32_t p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r * c, 0) {}

  felem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  felem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  const felem* row(std::size_t r) const { return a.data() + r * cols; }
};

FieldMatrix parse_matrix(std::istream& in);           // "p m n" then m rows
void write_matrix(std::ostream& out, const FieldMatrix& B);

fvec syndrome(const FieldMatrix& B, const fvec& y);   // B^T y, length cols
fvec matvec(const FieldMatrix& B, const fvec& x);     // B x, length rows

std::size_t rank(const FieldMatrix& B);

// Basis of {y in F_p^rows : B^T y = 0}.
std::vector<fvec> dual_kernel_basis(const FieldMatrix& B);

// Minimum Hamming weight over the nonzero kernel of B^T; nullopt when the
// kernel is trivial. Enumerates p^(rows-rank) combinations.
std::optional<std::size_t> dual_min_distance(const FieldMatrix& B,
                                             std::size_t cap = kEnumCap);

// Solves A x = rhs for square invertible A; nullopt if singular.
std::optional<fvec> solve_square(const FieldMatrix& A, const fvec& rhs);

std::size_t hamming_weight(const fvec& y);

}  // namespace mdqi
