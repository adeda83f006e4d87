#include "mdqi/krawtchouk.hpp"

#include "mdqi/common.hpp"

namespace mdqi {

BinomialTable& BinomialTable::instance() {
  static BinomialTable table;
  return table;
}

void BinomialTable::ensure_rows(std::size_t m) {
  while (rows_.size() <= m) {
    std::size_t r = rows_.size();
    std::vector<BigInt> row(r + 1);
    row[0] = 1;
    row[r] = 1;
    for (std::size_t k = 1; k < r; ++k)
      row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomialTable::at(std::size_t m, std::size_t k) const {
  if (k > m || m >= rows_.size()) return zero_;
  return rows_[m][k];
}

BigInt binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  auto& table = BinomialTable::instance();
  table.ensure_rows(m);
  return table.at(m, k);
}

double binomial_d(std::size_t m, std::size_t k) {
  return binomial(m, k).convert_to<double>();
}

BigInt kraw(std::size_t k, std::size_t q, std::size_t m) {
  require(k <= m && q <= m, "kraw: indices out of range");
  auto& table = BinomialTable::instance();
  table.ensure_rows(m);
  BigInt acc = 0;
  for (std::size_t a = 0; a <= std::min(k, q); ++a) {
    BigInt term = table.at(q, a) * table.at(m - q, k - a);
    if (a & 1) acc -= term;
    else acc += term;
  }
  return acc;
}

double kraw_d(std::size_t k, std::size_t q, std::size_t m) {
  return kraw(k, q, m).convert_to<double>();
}

BigInt orthogonality_defect(std::size_t j, std::size_t m) {
  BigInt acc = 0;
  for (std::size_t q = 0; q <= m; ++q) {
    BigInt v = kraw(j, q, m);
    acc += binomial(m, q) * v * v;
  }
  return acc - (BigInt(1) << m) * binomial(m, j);
}

std::map<std::size_t, BigInt> multiplication_expansion(std::size_t i,
                                                       std::size_t j,
                                                       std::size_t m) {
  require(i <= m && j <= m, "multiplication_expansion: degree out of range");
  std::map<std::size_t, BigInt> out;
  std::size_t k_lo = (i + j > m) ? i + j - m : 0;
  for (std::size_t k = k_lo; k <= std::min(i, j); ++k) {
    std::size_t d = i + j - 2 * k;
    out[d] = binomial(m - i - j + 2 * k, k) * binomial(d, j - k);
  }
  return out;
}

}  // namespace mdqi
