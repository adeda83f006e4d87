#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mdqi/hamdqi.hpp"

using namespace mdqi;

namespace {

using Mat = Eigen::MatrixXcd;
const std::complex<double> I1(0.0, 1.0);

Mat pauli2(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -I1, I1, 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

Mat kron_word(const std::string& word) {
  Mat acc = pauli2(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) {
    Mat next(acc.rows() * 2, acc.cols() * 2);
    const Mat p = pauli2(word[i]);
    for (int r = 0; r < acc.rows(); ++r)
      for (int c = 0; c < acc.cols(); ++c)
        next.block(2 * r, 2 * c, 2, 2) = acc(r, c) * p;
    acc = next;
  }
  return acc;
}

BlockHamiltonian parse_ham(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

}  // namespace

TEST_CASE("pauli strings and dense matrices") {
  for (const std::string word : {"X", "Y", "Z", "I", "XI", "ZY", "XYZ", "IZXI"}) {
    const Pauli P = Pauli::from_string(word);
    CHECK(P.to_string() == word);
    CHECK(P.n == word.size());
    const Mat want = kron_word(word);
    CHECK((P.dense() - want).cwiseAbs().maxCoeff() < 1e-14);
    // Canonical words are Hermitian.
    CHECK((P.dense() - P.dense().adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  }
  // Qubit 0 is the leftmost letter and the top bit of the mask.
  const Pauli P = Pauli::from_string("XII");
  CHECK(P.beta == 0b100);
  CHECK(P.alpha == 0);
  const Pauli Q = Pauli::from_string("IIZ");
  CHECK(Q.alpha == 0b001);
}

TEST_CASE("pauli products carry phases") {
  const Pauli X = Pauli::from_string("X");
  const Pauli Y = Pauli::from_string("Y");
  const Pauli Z = Pauli::from_string("Z");
  // X * Y = iZ, Y * X = -iZ.
  const Pauli XY = X * Y;
  CHECK(XY.alpha == 1);
  CHECK(XY.beta == 0);
  CHECK((XY.dense() - I1 * Z.dense()).cwiseAbs().maxCoeff() < 1e-14);
  const Pauli YX = Y * X;
  CHECK((YX.dense() + I1 * Z.dense()).cwiseAbs().maxCoeff() < 1e-14);
  // Dense product equals product of denses for random words.
  const std::vector<std::string> words{"XYZI", "ZZXY", "IYXZ", "YIIX"};
  for (const auto& a : words)
    for (const auto& b : words) {
      const Pauli pa = Pauli::from_string(a), pb = Pauli::from_string(b);
      CHECK(((pa * pb).dense() - pa.dense() * pb.dense())
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
}

TEST_CASE("commutation predicate") {
  const Pauli X = Pauli::from_string("X"), Z = Pauli::from_string("Z");
  CHECK_FALSE(X.commutes(Z));
  CHECK(X.commutes(X));
  CHECK(Pauli::from_string("XX").commutes(Pauli::from_string("ZZ")));
  CHECK_FALSE(Pauli::from_string("XI").commutes(Pauli::from_string("ZI")));
  // Matches the dense commutator.
  for (const auto& a : {"XY", "ZI", "YY", "XZ"})
    for (const auto& b : {"YX", "IZ", "ZY", "XX"}) {
      const Pauli pa = Pauli::from_string(a), pb = Pauli::from_string(b);
      const Mat comm = pa.dense() * pb.dense() - pb.dense() * pa.dense();
      CHECK(pa.commutes(pb) == (comm.cwiseAbs().maxCoeff() < 1e-13));
    }
}

TEST_CASE("hamiltonian io and validation") {
  const std::string text =
      "2 2\n"
      "1.5 2\n"
      "XI\n"
      "IX\n"
      "2.0 1\n"
      "XX\n";
  const auto ham = parse_ham(text);
  ham.validate();
  CHECK(ham.n == 2);
  CHECK(ham.num_terms() == 3);
  CHECK(ham.sizes() == std::vector<std::size_t>{2, 1});
  CHECK(ham.weights[0] == doctest::Approx(1.5));
  CHECK(ham.blocks[1][0] == Pauli::from_string("XX"));
  std::ostringstream out;
  write_hamiltonian(out, ham);
  const auto again = parse_ham(out.str());
  CHECK(again.blocks == ham.blocks);
  CHECK(commutation_check(ham) == std::nullopt);
  // ZI vs XI do not commute after an edit: the check reports the pair.
  auto bad = ham;
  bad.blocks[1][0] = Pauli::from_string("ZI");
  const auto clash = commutation_check(bad);
  REQUIRE(clash.has_value());
  CHECK(clash->first == 0);
  CHECK(clash->second == 2);
  // Identity terms are rejected.
  auto ident = ham;
  ident.blocks[0][0] = Pauli::from_string("II");
  CHECK_THROWS_AS(ident.validate(), invariant_violation);
}

TEST_CASE("symplectic rows") {
  const auto ham = parse_ham("2 1\n1.0 2\nXZ\nYI\n");
  const auto M = ham.symplectic();
  CHECK(M.rows == 2);
  CHECK(M.cols == 4);
  // XZ: alpha = 01, beta = 10 -> row (0 1 | 1 0).
  CHECK(M.at(0, 0) == 0);
  CHECK(M.at(0, 1) == 1);
  CHECK(M.at(0, 2) == 1);
  CHECK(M.at(0, 3) == 0);
  // YI: alpha = 10, beta = 10.
  CHECK(M.at(1, 0) == 1);
  CHECK(M.at(1, 2) == 1);
}

TEST_CASE("random commuting hamiltonians") {
  for (std::uint64_t seed : {1ull, 2ull, 9ull}) {
    const auto ham = random_commuting_hamiltonian(6, {3, 2}, {1.0, 2.0}, seed);
    ham.validate();
    CHECK(ham.n == 6);
    CHECK(ham.sizes() == std::vector<std::size_t>{3, 2});
    CHECK(commutation_check(ham) == std::nullopt);
    // Symplectic rows are linearly independent over F_2.
    CHECK(rank(ham.symplectic()) == 5);
  }
  const auto a = random_commuting_hamiltonian(5, {2, 2}, {1.0, 1.0}, 7);
  const auto b = random_commuting_hamiltonian(5, {2, 2}, {1.0, 1.0}, 7);
  CHECK(a.blocks == b.blocks);
}

TEST_CASE("coefficient routes agree") {
  const auto ham = random_commuting_hamiltonian(6, {3, 2}, {1.0, 2.0}, 4);
  const std::vector<double> pcoef{0.25, 1.0, 0.0, 0.5};
  std::vector<BigRat> pexact;
  for (double v : pcoef) pexact.push_back(rational_from_double(v));

  const auto hc = ham_coefficients(ham, pcoef);
  const auto exact = ham_coefficients_exact(ham, pexact);
  const auto multi = ham_coefficients_multinomial(ham, pexact);
  REQUIRE(exact.r.size() == multi.r.size());
  REQUIRE(exact.r.size() == hc.r.size());
  for (std::size_t i = 0; i < exact.r.size(); ++i) {
    CHECK(exact.r[i] == multi.r[i]);
    CHECK(hc.r[i] ==
          doctest::Approx(static_cast<double>(exact.r[i])).epsilon(1e-10));
  }
  // Degrees beyond deg P vanish: budget got clamped to 3.
  CHECK(hc.set.budget == 3);
  // gamma normalization: sum of squares is 1.
  double total = 0;
  for (double v : hc.gamma) total += v * v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  // Every word in a profile shares its coefficient.
  std::vector<std::uint8_t> y(5, 0);
  y[1] = 1;  // block 0, second term
  const BigRat r1 = ham_r_of_word(ham, pexact, y);
  y[1] = 0;
  y[2] = 1;  // still one term of block 0
  CHECK(ham_r_of_word(ham, pexact, y) == r1);
  const auto i10 = hc.set.index_of({1, 0});
  CHECK(exact.r[i10] == r1);
}

TEST_CASE("rational from double") {
  CHECK(rational_from_double(0.5) == BigRat(1, 2));
  CHECK(rational_from_double(-0.75) == BigRat(-3, 4));
  CHECK(rational_from_double(3.0) == BigRat(3));
  CHECK(rational_from_double(0.1) ==
        BigRat(BigInt("3602879701896397"), BigInt("36028797018963968")));
}

TEST_CASE("dense hamiltonian and target state") {
  const auto ham = parse_ham("2 2\n1.0 1\nZI\n0.5 1\nIZ\n");
  const Mat H = dense_hamiltonian(ham);
  Mat want = kron_word("ZI") + 0.5 * kron_word("IZ");
  CHECK((H - want).cwiseAbs().maxCoeff() < 1e-14);
  const std::vector<double> pcoef{0.0, 1.0};  // P(x) = x
  const Mat rho = dense_rho_P(ham, pcoef);
  // Diagonal H: rho is H^2 normalized.
  Mat sq = want * want;
  sq /= sq.trace().real();
  CHECK((rho - sq).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("trace distance") {
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));
  CHECK(trace_distance(a, b) == doctest::Approx(1.0));
  Mat c = Mat::Zero(2, 2);
  c(0, 0) = c(1, 1) = 0.5;
  CHECK(trace_distance(a, c) == doctest::Approx(0.5));
}

TEST_CASE("protocol simulation matches the dense target") {
  for (std::uint64_t seed : {1ull, 5ull}) {
    const auto ham = random_commuting_hamiltonian(5, {2, 2}, {1.0, 2.0}, seed);
    const std::vector<double> pcoef{0.2, 1.0, 0.3};
    const auto rep = protocol_simulation(ham, pcoef);
    CHECK(rep.trace_dist < 1e-8);
    CHECK(rep.norm > 0);
    CHECK(rep.support > 0);
    CHECK(rep.decode_round_trips == rep.support);
    CHECK(rep.state_norm == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("gibbs approximation within tolerance") {
  const auto ham = random_commuting_hamiltonian(5, {2, 2}, {1.0, 0.5}, 11);
  for (double beta : {0.25, 1.0}) {
    const auto rep = gibbs_distance(ham, beta, 0.1);
    CHECK(rep.distance <= 0.1);
    CHECK(rep.delta == doctest::Approx(0.1));
    const std::size_t want_deg = std::max<std::size_t>(
        1, static_cast<std::size_t>(
               std::ceil(1.12 * beta * rep.h_norm + 0.648 * std::log(2.0 / 0.1))));
    CHECK(rep.degree == want_deg);
  }
}
