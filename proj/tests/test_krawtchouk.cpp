#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdqi/krawtchouk.hpp"

using namespace mdqi;

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(30, 15) == BigInt{155117520});
  CHECK(binomial(5, 9) == 0);
  // Pascal rule on a band of the triangle.
  for (std::size_t m = 1; m <= 40; ++m)
    for (std::size_t k = 1; k <= m; ++k)
      CHECK(binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k));
  CHECK(binomial_d(52, 26) == doctest::Approx(495918532948104.0));
}

TEST_CASE("kraw base cases") {
  for (std::size_t m = 0; m <= 12; ++m)
    for (std::size_t q = 0; q <= m; ++q) {
      CHECK(kraw(0, q, m) == 1);
      if (m >= 1)
        CHECK(kraw(1, q, m) == BigInt{static_cast<long>(m) - 2 * static_cast<long>(q)});
    }
  for (std::size_t m = 0; m <= 12; ++m)
    for (std::size_t k = 0; k <= m; ++k) {
      CHECK(kraw(k, 0, m) == binomial(m, k));
      // K_k(m; m) = (-1)^k C(m,k)
      BigInt want = binomial(m, k);
      if (k % 2) want = -want;
      CHECK(kraw(k, m, m) == want);
    }
}

TEST_CASE("kraw symmetry and reciprocity") {
  for (std::size_t m = 1; m <= 14; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t q = 0; q <= m; ++q) {
        BigInt lhs = kraw(k, m - q, m);
        BigInt rhs = kraw(k, q, m);
        if (k % 2) rhs = -rhs;
        CHECK(lhs == rhs);  // reflection in q
        CHECK(binomial(m, q) * kraw(k, q, m) ==
              binomial(m, k) * kraw(q, k, m));  // reciprocity
      }
}

TEST_CASE("generating function at z = 2") {
  // sum_k K_k(q;m) 2^k = 3^{m-q} (-1)^q
  for (std::size_t m = 0; m <= 16; ++m)
    for (std::size_t q = 0; q <= m; ++q) {
      BigInt sum = 0, pw = 1;
      for (std::size_t k = 0; k <= m; ++k) {
        sum += kraw(k, q, m) * pw;
        pw *= 2;
      }
      BigInt want = 1;
      for (std::size_t i = 0; i < m - q; ++i) want *= 3;
      if (q % 2) want = -want;
      CHECK(sum == want);
    }
}

TEST_CASE("orthogonality defect vanishes") {
  for (std::size_t m = 0; m <= 30; ++m)
    for (std::size_t j = 0; j <= m; ++j)
      CHECK(orthogonality_defect(j, m) == 0);
}

TEST_CASE("three-term recurrence") {
  // (k+1) K_{k+1} = (m - 2q) K_k - (m - k + 1) K_{k-1}
  for (std::size_t m = 2; m <= 18; ++m)
    for (std::size_t q = 0; q <= m; ++q)
      for (std::size_t k = 1; k + 1 <= m; ++k) {
        BigInt lhs = BigInt(k + 1) * kraw(k + 1, q, m);
        BigInt rhs = BigInt(static_cast<long>(m) - 2 * static_cast<long>(q)) *
                         kraw(k, q, m) -
                     BigInt(m - k + 1) * kraw(k - 1, q, m);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("multiplication expansion pointwise") {
  for (std::size_t m = 1; m <= 20; ++m)
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = i; j <= m; ++j) {
        const auto coef = multiplication_expansion(i, j, m);
        for (std::size_t q = 0; q <= m; ++q) {
          BigInt lhs = kraw(i, q, m) * kraw(j, q, m);
          BigInt rhs = 0;
          for (const auto& [d, c] : coef) rhs += c * kraw(d, q, m);
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("multiplication expansion support") {
  // Degrees present lie in [|i-j|, i+j] with the parity of i + j.
  const auto coef = multiplication_expansion(3, 5, 12);
  for (const auto& [d, c] : coef) {
    CHECK(d >= 2);
    CHECK(d <= 8);
    CHECK(d % 2 == 0);
    CHECK(c != 0);
  }
  // Constant term of K_k * K_k is C(m,k): <K_k, K_k> = 2^m C(m,k) and
  // K_0 = 1 picks it out.
  const auto sq = multiplication_expansion(4, 4, 10);
  CHECK(sq.at(0) == binomial(10, 4));
}

TEST_CASE("kraw_d tracks exact values") {
  for (std::size_t m : {10u, 20u, 30u})
    for (std::size_t q = 0; q <= m; q += 3)
      for (std::size_t k = 0; k <= m; k += 2) {
        const double exact = static_cast<double>(kraw(k, q, m));
        CHECK(kraw_d(k, q, m) == doctest::Approx(exact).epsilon(1e-12));
      }
}
