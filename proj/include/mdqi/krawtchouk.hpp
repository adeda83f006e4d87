#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdqi {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Shared Pascal triangle. Growth is not thread safe: call ensure_rows for the
// largest m you need before fanning out to workers.
class BinomialTable {
 public:
  static BinomialTable& instance();
  void ensure_rows(std::size_t m);
  const BigInt& at(std::size_t m, std::size_t k) const;  // 0 for k > m

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

BigInt binomial(std::size_t m, std::size_t k);
double binomial_d(std::size_t m, std::size_t k);

// Binary Krawtchouk polynomial K_k(q; m) = sum_a (-1)^a C(q,a) C(m-q,k-a).
BigInt kraw(std::size_t k, std::size_t q, std::size_t m);
double kraw_d(std::size_t k, std::size_t q, std::size_t m);

// sum_q C(m,q) K_j(q;m)^2 - 2^m C(m,j); identically zero.
BigInt orthogonality_defect(std::size_t j, std::size_t m);

// Coefficients c_d with K_i K_j = sum_d c_d K_d, keyed by degree d.
std::map<std::size_t, BigInt> multiplication_expansion(std::size_t i,
                                                       std::size_t j,
                                                       std::size_t m);

}  // namespace mdqi
