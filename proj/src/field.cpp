#include "mdqi/field.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace mdqi {

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  require(p >= 2, "PrimeField: p must be >= 2");
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
    require(p % d != 0, "PrimeField: p is not prime");
}

felem PrimeField::pow(felem a, std::uint64_t e) const {
  felem r = 1 % p;
  felem base = a % p;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

felem PrimeField::inv(felem a) const {
  require(a % p != 0, "PrimeField::inv: zero has no inverse");
  return pow(a, p - 2);
}

FieldMatrix parse_matrix(std::istream& in) {
  std::uint32_t p;
  std::size_t m, n;
  in >> p >> m >> n;
  require(static_cast<bool>(in), "parse_matrix: bad header");
  PrimeField f(p);
  FieldMatrix B(p, m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t v;
      in >> v;
      require(static_cast<bool>(in), "parse_matrix: truncated entries");
      require(v >= 0 && v < p, "parse_matrix: entry out of range");
      B.at(r, c) = static_cast<felem>(v);
    }
  return B;
}

void write_matrix(std::ostream& out, const FieldMatrix& B) {
  out << B.p << ' ' << B.rows << ' ' << B.cols << '\n';
  for (std::size_t r = 0; r < B.rows; ++r) {
    for (std::size_t c = 0; c < B.cols; ++c)
      out << B.at(r, c) << (c + 1 == B.cols ? '\n' : ' ');
  }
}

fvec syndrome(const FieldMatrix& B, const fvec& y) {
  require(y.size() == B.rows, "syndrome: length mismatch");
  PrimeField f(B.p);
  fvec s(B.cols, 0);
  for (std::size_t r = 0; r < B.rows; ++r) {
    if (!y[r]) continue;
    const felem* row = B.row(r);
    for (std::size_t c = 0; c < B.cols; ++c)
      s[c] = static_cast<felem>((s[c] + std::uint64_t(y[r]) * row[c]) % B.p);
  }
  return s;
}

fvec matvec(const FieldMatrix& B, const fvec& x) {
  require(x.size() == B.cols, "matvec: length mismatch");
  fvec out(B.rows, 0);
  for (std::size_t r = 0; r < B.rows; ++r) {
    std::uint64_t acc = 0;
    const felem* row = B.row(r);
    for (std::size_t c = 0; c < B.cols; ++c) acc += std::uint64_t(row[c]) * x[c];
    out[r] = static_cast<felem>(acc % B.p);
  }
  return out;
}

namespace {

// Row echelon form in place; returns pivot column list.
std::vector<std::size_t> echelon(FieldMatrix& M) {
  PrimeField f(M.p);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
    std::size_t sel = row;
    while (sel < M.rows && M.at(sel, col) == 0) ++sel;
    if (sel == M.rows) continue;
    for (std::size_t c = 0; c < M.cols; ++c)
      std::swap(M.at(row, c), M.at(sel, c));
    felem s = f.inv(M.at(row, col));
    for (std::size_t c = col; c < M.cols; ++c)
      M.at(row, c) = f.mul(M.at(row, c), s);
    for (std::size_t r = 0; r < M.rows; ++r) {
      if (r == row || M.at(r, col) == 0) continue;
      felem factor = M.at(r, col);
      for (std::size_t c = col; c < M.cols; ++c)
        M.at(r, c) = f.sub(M.at(r, c), f.mul(factor, M.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FieldMatrix transpose(const FieldMatrix& B) {
  FieldMatrix T(B.p, B.cols, B.rows);
  for (std::size_t r = 0; r < B.rows; ++r)
    for (std::size_t c = 0; c < B.cols; ++c) T.at(c, r) = B.at(r, c);
  return T;
}

}  // namespace

std::size_t rank(const FieldMatrix& B) {
  FieldMatrix M = B;
  return echelon(M).size();
}

std::vector<fvec> dual_kernel_basis(const FieldMatrix& B) {
  // Kernel of B^T: reduce the n x m transpose and read off free columns.
  FieldMatrix T = transpose(B);
  PrimeField f(B.p);
  std::vector<std::size_t> pivots = echelon(T);
  std::vector<bool> is_pivot(T.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<fvec> basis;
  for (std::size_t free = 0; free < T.cols; ++free) {
    if (is_pivot[free]) continue;
    fvec v(T.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(T.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::size_t> dual_min_distance(const FieldMatrix& B,
                                             std::size_t cap) {
  std::vector<fvec> basis = dual_kernel_basis(B);
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  const std::size_t m = B.rows;
  PrimeField f(B.p);
  double combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= B.p;
  if (combos > static_cast<double>(cap))
    throw cap_exceeded("dual_min_distance: kernel enumeration exceeds cap");

  // Odometer over coefficient tuples, skipping the all-zero combination.
  fvec coef(k, 0);
  fvec cur(m, 0);
  std::size_t best = m + 1;
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && coef[pos] + 1 == B.p) {
      coef[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++coef[pos];
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t b = 0; b < k; ++b)
        acc += std::uint64_t(coef[b]) * basis[b][i];
      cur[i] = static_cast<felem>(acc % B.p);
    }
    std::size_t w = hamming_weight(cur);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

std::optional<fvec> solve_square(const FieldMatrix& A, const fvec& rhs) {
  require(A.rows == A.cols && rhs.size() == A.rows,
          "solve_square: shape mismatch");
  PrimeField f(A.p);
  FieldMatrix M(A.p, A.rows, A.cols + 1);
  for (std::size_t r = 0; r < A.rows; ++r) {
    for (std::size_t c = 0; c < A.cols; ++c) M.at(r, c) = A.at(r, c);
    M.at(r, A.cols) = rhs[r];
  }
  std::vector<std::size_t> pivots = echelon(M);
  if (pivots.size() != A.cols || (!pivots.empty() && pivots.back() >= A.cols))
    return std::nullopt;
  fvec x(A.cols, 0);
  for (std::size_t i = 0; i < A.cols; ++i) x[pivots[i]] = M.at(i, A.cols);
  return x;
}

std::size_t hamming_weight(const fvec& y) {
  std::size_t w = 0;
  for (felem v : y) w += (v != 0);
  return w;
}

}  // namespace mdqi
