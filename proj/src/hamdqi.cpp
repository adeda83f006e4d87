#include "mdqi/hamdqi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>

#include "mdqi/decoding.hpp"
#include "mdqi/rng.hpp"

namespace mdqi {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_pauli(const Pauli& p) {
  require(p.n >= 1 && p.n <= 32, "qubit count out of range");
  const std::uint64_t mask = (p.n == 64) ? ~0ull : ((1ull << p.n) - 1);
  require((p.alpha & ~mask) == 0 && (p.beta & ~mask) == 0,
          "mask bits outside the register");
  require(p.k < 4, "phase exponent out of range");
}

std::vector<Pauli> flatten(const BlockHamiltonian& ham) {
  std::vector<Pauli> all;
  for (const auto& blk : ham.blocks)
    all.insert(all.end(), blk.begin(), blk.end());
  return all;
}

BigRat rat_pow(const BigRat& base, std::size_t e) {
  BigRat acc(1);
  for (std::size_t i = 0; i < e; ++i) acc *= base;
  return acc;
}

template <typename Scalar>
Scalar horner(const std::vector<Scalar>& coef, const Scalar& x) {
  Scalar acc = coef.back();
  for (std::size_t k = coef.size() - 1; k-- > 0;) acc = acc * x + coef[k];
  return acc;
}

// Shared skeleton of the spin-sum coefficient formula; Field is double or
// BigRat, with eval(lambda_s) supplied by the caller.
template <typename Scalar, typename Eval>
std::vector<Scalar> spin_sum_coefficients(const BlockHamiltonian& ham,
                                          const DegreeIndexSet& set,
                                          Eval&& eval) {
  const auto sizes = ham.sizes();
  const std::size_t N = sizes.size();
  const std::size_t m = ham.num_terms();
  std::vector<std::vector<std::vector<Scalar>>> K(N);
  for (std::size_t t = 0; t < N; ++t) {
    const std::size_t mt = sizes[t];
    K[t].assign(mt + 1, std::vector<Scalar>(mt + 1));
    for (std::size_t s = 0; s <= mt; ++s)
      for (std::size_t j = 0; j <= mt; ++j)
        K[t][s][j] = static_cast<Scalar>(kraw(s, j, mt));
  }
  std::vector<Scalar> r(set.size(), Scalar(0));
  std::vector<std::size_t> s(N, 0);
  for (;;) {
    const Scalar ps = eval(s);
    for (std::size_t idx = 0; idx < set.size(); ++idx) {
      Scalar prod = ps;
      const DegreeTuple& j = set.tuples[idx];
      for (std::size_t t = 0; t < N; ++t) prod = prod * K[t][s[t]][j[t]];
      r[idx] += prod;
    }
    std::size_t t = N;
    while (t > 0) {
      if (++s[t - 1] <= sizes[t - 1]) break;
      s[t - 1] = 0;
      --t;
    }
    if (t == 0) break;
  }
  const Scalar scale = Scalar(1) / static_cast<Scalar>(BigInt(1) << m);
  for (auto& v : r) v = v * scale;
  return r;
}

}  // namespace

Pauli Pauli::canonical(std::size_t n, std::uint64_t alpha, std::uint64_t beta) {
  Pauli p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.k = static_cast<std::uint32_t>((4 - std::popcount(alpha & beta) % 4) % 4);
  check_pauli(p);
  return p;
}

Pauli Pauli::from_string(const std::string& word) {
  require(!word.empty(), "empty Pauli word");
  const std::size_t n = word.size();
  std::uint64_t alpha = 0, beta = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = 1ull << (n - 1 - q);
    switch (word[q]) {
      case 'I': break;
      case 'X': beta |= bit; break;
      case 'Z': alpha |= bit; break;
      case 'Y': alpha |= bit; beta |= bit; break;
      default: throw invariant_violation("Pauli letters must be I, X, Y, or Z");
    }
  }
  return canonical(n, alpha, beta);
}

std::string Pauli::to_string() const {
  std::string word(n, 'I');
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = 1ull << (n - 1 - q);
    const bool a = alpha & bit, b = beta & bit;
    word[q] = a ? (b ? 'Y' : 'Z') : (b ? 'X' : 'I');
  }
  return word;
}

Pauli Pauli::operator*(const Pauli& rhs) const {
  require(n == rhs.n, "qubit counts differ");
  Pauli out;
  out.n = n;
  out.alpha = alpha ^ rhs.alpha;
  out.beta = beta ^ rhs.beta;
  out.k = (k + rhs.k + 2u * parity(beta & rhs.alpha)) % 4;
  return out;
}

bool Pauli::commutes(const Pauli& rhs) const {
  require(n == rhs.n, "qubit counts differ");
  return parity(alpha & rhs.beta) == parity(beta & rhs.alpha);
}

Eigen::MatrixXcd Pauli::dense() const {
  check_pauli(*this);
  require(n <= 12, "dense Pauli too large");
  const std::size_t dim = 1ull << n;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t row = x ^ beta;
    const double sgn = parity(alpha & row) ? -1.0 : 1.0;
    M(row, x) = kPhase[k] * sgn;
  }
  return M;
}

std::size_t BlockHamiltonian::num_terms() const {
  std::size_t m = 0;
  for (const auto& blk : blocks) m += blk.size();
  return m;
}

std::vector<std::size_t> BlockHamiltonian::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& blk : blocks) out.push_back(blk.size());
  return out;
}

BlockStructure BlockHamiltonian::structure() const {
  return BlockStructure::contiguous(sizes(), weights);
}

FieldMatrix BlockHamiltonian::symplectic() const {
  const std::size_t m = num_terms();
  FieldMatrix M(2, m, 2 * n);
  std::size_t i = 0;
  for (const auto& blk : blocks)
    for (const Pauli& p : blk) {
      for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = 1ull << (n - 1 - q);
        M.at(i, q) = (p.alpha & bit) ? 1 : 0;
        M.at(i, n + q) = (p.beta & bit) ? 1 : 0;
      }
      ++i;
    }
  return M;
}

void BlockHamiltonian::validate() const {
  require(n >= 1 && n <= 32, "qubit count out of range");
  require(!blocks.empty(), "at least one block required");
  require(weights.size() == blocks.size(), "one weight per block required");
  for (double g : weights) require(g > 0, "block weights must be positive");
  for (const auto& blk : blocks) {
    require(!blk.empty(), "empty block");
    for (const Pauli& p : blk) {
      check_pauli(p);
      require(p.n == n, "term register size mismatch");
      require(!p.is_identity(), "identity terms are not allowed");
      require(p.k == Pauli::canonical(n, p.alpha, p.beta).k,
              "terms must carry the Hermitian phase");
    }
  }
}

BlockHamiltonian parse_hamiltonian(std::istream& in) {
  std::size_t n = 0, N = 0;
  require(static_cast<bool>(in >> n >> N), "bad Hamiltonian header");
  BlockHamiltonian ham;
  ham.n = n;
  ham.blocks.resize(N);
  ham.weights.resize(N);
  for (std::size_t t = 0; t < N; ++t) {
    std::size_t mt = 0;
    require(static_cast<bool>(in >> ham.weights[t] >> mt), "bad block header");
    ham.blocks[t].reserve(mt);
    for (std::size_t i = 0; i < mt; ++i) {
      std::string word;
      require(static_cast<bool>(in >> word), "missing Pauli word");
      require(word.size() == n, "Pauli word has the wrong length");
      ham.blocks[t].push_back(Pauli::from_string(word));
    }
  }
  ham.validate();
  return ham;
}

void write_hamiltonian(std::ostream& out, const BlockHamiltonian& ham) {
  out << ham.n << ' ' << ham.blocks.size() << '\n';
  out << std::setprecision(17);
  for (std::size_t t = 0; t < ham.blocks.size(); ++t) {
    out << ham.weights[t] << ' ' << ham.blocks[t].size() << '\n';
    for (const Pauli& p : ham.blocks[t]) out << p.to_string() << '\n';
  }
}

std::optional<std::pair<std::size_t, std::size_t>> commutation_check(
    const BlockHamiltonian& ham) {
  const auto all = flatten(ham);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!all[i].commutes(all[j])) return std::make_pair(i, j);
  return std::nullopt;
}

BlockHamiltonian random_commuting_hamiltonian(
    std::size_t n, const std::vector<std::size_t>& sizes,
    const std::vector<double>& weights, std::uint64_t seed) {
  require(n >= 1 && n <= 32, "qubit count out of range");
  std::size_t m = 0;
  for (std::size_t s : sizes) m += s;
  require(m >= 1 && m <= n, "need at most one term per qubit");
  Rng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> accepted;
  std::uint64_t slot[64] = {};
  std::size_t attempts = 0;
  while (accepted.size() < m) {
    require(++attempts < 100000, "fixture sampling did not converge");
    const std::uint64_t alpha = rng.below(1ull << n);
    const std::uint64_t beta = rng.below(1ull << n);
    if (alpha == 0 && beta == 0) continue;
    bool isotropic = true;
    for (const auto& [a2, b2] : accepted)
      if (parity(alpha & b2) != parity(beta & a2)) {
        isotropic = false;
        break;
      }
    if (!isotropic) continue;
    // Keep the rows independent so the syndrome map stays injective.
    std::uint64_t v = (alpha << n) | beta;
    bool fresh = false;
    while (v) {
      const int h = 63 - std::countl_zero(v);
      if (!slot[h]) {
        slot[h] = v;
        fresh = true;
        break;
      }
      v ^= slot[h];
    }
    if (!fresh) continue;
    accepted.emplace_back(alpha, beta);
  }
  BlockHamiltonian ham;
  ham.n = n;
  ham.weights = weights;
  ham.blocks.resize(sizes.size());
  std::size_t i = 0;
  for (std::size_t t = 0; t < sizes.size(); ++t)
    for (std::size_t c = 0; c < sizes[t]; ++c, ++i)
      ham.blocks[t].push_back(
          Pauli::canonical(n, accepted[i].first, accepted[i].second));
  ham.validate();
  return ham;
}

HamCoefficients ham_coefficients(const BlockHamiltonian& ham,
                                 const std::vector<double>& pcoef) {
  ham.validate();
  require(!pcoef.empty(), "polynomial must have at least one coefficient");
  const auto sizes = ham.sizes();
  const std::size_t m = ham.num_terms();
  const std::size_t budget = std::min(pcoef.size() - 1, m);
  HamCoefficients out;
  out.set = enumerate_degree_tuples(sizes, budget);
  out.r = spin_sum_coefficients<double>(
      ham, out.set, [&](const std::vector<std::size_t>& s) {
        double lambda = 0;
        for (std::size_t t = 0; t < sizes.size(); ++t)
          lambda += ham.weights[t] *
                    (static_cast<double>(sizes[t]) - 2.0 * s[t]);
        return horner(pcoef, lambda);
      });
  double norm_sq = 0;
  std::vector<double> comb(out.set.size(), 1.0);
  for (std::size_t idx = 0; idx < out.set.size(); ++idx) {
    for (std::size_t t = 0; t < sizes.size(); ++t)
      comb[idx] *= binomial_d(sizes[t], out.set.tuples[idx][t]);
    norm_sq += comb[idx] * out.r[idx] * out.r[idx];
  }
  require(norm_sq > 0, "polynomial annihilates every word");
  out.norm = std::sqrt(norm_sq);
  out.gamma.resize(out.set.size());
  for (std::size_t idx = 0; idx < out.set.size(); ++idx)
    out.gamma[idx] = std::sqrt(comb[idx]) * out.r[idx] / out.norm;
  return out;
}

HamCoefficientsExact ham_coefficients_exact(const BlockHamiltonian& ham,
                                            const std::vector<BigRat>& pcoef) {
  ham.validate();
  require(!pcoef.empty(), "polynomial must have at least one coefficient");
  const auto sizes = ham.sizes();
  std::vector<BigRat> g;
  for (double w : ham.weights) g.push_back(rational_from_double(w));
  HamCoefficientsExact out;
  out.set = enumerate_degree_tuples(sizes, std::min(pcoef.size() - 1,
                                                    ham.num_terms()));
  out.r = spin_sum_coefficients<BigRat>(
      ham, out.set, [&](const std::vector<std::size_t>& s) {
        BigRat lambda(0);
        for (std::size_t t = 0; t < sizes.size(); ++t)
          lambda += g[t] * (BigInt(sizes[t]) - 2 * BigInt(s[t]));
        return horner(pcoef, lambda);
      });
  return out;
}

BigRat ham_r_of_word(const BlockHamiltonian& ham,
                     const std::vector<BigRat>& pcoef,
                     const std::vector<std::uint8_t>& y) {
  ham.validate();
  const std::size_t m = ham.num_terms();
  require(y.size() == m, "word length mismatch");
  std::vector<BigRat> c(m);
  {
    const auto blocks = ham.structure();
    for (std::size_t a = 0; a < m; ++a)
      c[a] = rational_from_double(ham.weights[blocks.block_of[a]]);
  }
  const std::size_t deg = pcoef.size() - 1;
  std::vector<BigInt> fact(deg + 1, 1);
  for (std::size_t k = 1; k <= deg; ++k) fact[k] = fact[k - 1] * k;

  BigRat total(0);
  // H^j expands into multinomials; words survive modulo squares, so only
  // exponent vectors matching y in parity contribute.
  for (std::size_t j = 0; j <= deg; ++j) {
    if (pcoef[j] == 0) continue;
    BigRat sum(0);
    const std::function<void(std::size_t, std::size_t, BigRat)> rec =
        [&](std::size_t a, std::size_t remaining, BigRat acc) {
          if (a == m) {
            if (remaining == 0) sum += acc;
            return;
          }
          for (std::size_t e = y[a] ? 1 : 0; e <= remaining; e += 2)
            rec(a + 1, remaining - e,
                acc * rat_pow(c[a], e) / BigRat(fact[e]));
        };
    rec(0, j, BigRat(1));
    total += pcoef[j] * BigRat(fact[j]) * sum;
  }
  return total;
}

HamCoefficientsExact ham_coefficients_multinomial(
    const BlockHamiltonian& ham, const std::vector<BigRat>& pcoef) {
  ham.validate();
  require(!pcoef.empty(), "polynomial must have at least one coefficient");
  const auto sizes = ham.sizes();
  HamCoefficientsExact out;
  out.set = enumerate_degree_tuples(sizes, std::min(pcoef.size() - 1,
                                                    ham.num_terms()));
  out.r.resize(out.set.size());
  std::vector<std::size_t> offset(sizes.size(), 0);
  for (std::size_t t = 1; t < sizes.size(); ++t)
    offset[t] = offset[t - 1] + sizes[t - 1];
  for (std::size_t idx = 0; idx < out.set.size(); ++idx) {
    std::vector<std::uint8_t> y(ham.num_terms(), 0);
    for (std::size_t t = 0; t < sizes.size(); ++t)
      for (std::size_t c = 0; c < out.set.tuples[idx][t]; ++c)
        y[offset[t] + c] = 1;
    out.r[idx] = ham_r_of_word(ham, pcoef, y);
  }
  return out;
}

BigRat rational_from_double(double x) {
  require(std::isfinite(x), "weight must be finite");
  if (x == 0) return BigRat(0);
  int e = 0;
  const double fr = std::frexp(x, &e);
  const long long mant = static_cast<long long>(std::ldexp(fr, 53));
  e -= 53;
  BigRat r(mant);
  if (e > 0)
    r *= BigRat(BigInt(1) << e);
  else if (e < 0)
    r /= BigRat(BigInt(1) << (-e));
  return r;
}

Eigen::MatrixXcd dense_hamiltonian(const BlockHamiltonian& ham) {
  ham.validate();
  require(ham.n <= 10, "dense Hamiltonian too large");
  const std::size_t dim = 1ull << ham.n;
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t t = 0; t < ham.blocks.size(); ++t)
    for (const Pauli& p : ham.blocks[t]) E += ham.weights[t] * p.dense();
  return E;
}

Eigen::MatrixXcd dense_rho_P(const BlockHamiltonian& ham,
                             const std::vector<double>& pcoef) {
  const auto E = dense_hamiltonian(ham);
  const std::size_t dim = E.rows();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd M1 = pcoef.back() * I;
  for (std::size_t k = pcoef.size() - 1; k-- > 0;) M1 = M1 * E + pcoef[k] * I;

  const auto hc = ham_coefficients(ham, pcoef);
  const auto all = flatten(ham);
  const std::size_t m = all.size();
  require(m <= 20, "word enumeration too large");
  const auto blocks = ham.structure();
  Eigen::MatrixXcd M2 = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t y = 0; y < (1ull << m); ++y) {
    if (static_cast<std::size_t>(std::popcount(y)) > hc.set.budget) continue;
    DegreeTuple j(ham.blocks.size(), 0);
    for (std::size_t a = 0; a < m; ++a)
      if (y >> a & 1) ++j[blocks.block_of[a]];
    const double r = hc.r[hc.set.index_of(j)];
    if (r == 0) continue;
    Pauli W{ham.n, 0, 0, 0};
    for (std::size_t a = 0; a < m; ++a)
      if (y >> a & 1) W = W * all[a];
    M2 += r * W.dense();
  }
  require((M1 - M2).cwiseAbs().maxCoeff() <= 1e-8,
          "coefficient expansion disagrees with the dense evaluation");

  const Eigen::MatrixXcd sq = M1 * M1;
  const double tr = sq.trace().real();
  require(tr > 0, "P(H)^2 has zero trace");
  return sq / tr;
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b,
                                                     Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

ProtocolReport protocol_simulation(const BlockHamiltonian& ham,
                                   const std::vector<double>& pcoef) {
  ham.validate();
  require(ham.n <= 8, "protocol register too large");
  const auto hc = ham_coefficients(ham, pcoef);
  const auto all = flatten(ham);
  const std::size_t m = all.size();
  require(m <= 20, "word enumeration too large");
  const auto blocks = ham.structure();
  const auto M = ham.symplectic();
  const std::size_t dim = 1ull << ham.n;
  const double inv_root_dim = 1.0 / std::sqrt(static_cast<double>(dim));

  ProtocolReport rep;
  rep.norm = hc.norm;
  std::vector<std::complex<double>> psi(dim * dim, 0.0);
  std::map<fvec, std::uint64_t> seen;
  for (std::uint64_t y = 0; y < (1ull << m); ++y) {
    if (static_cast<std::size_t>(std::popcount(y)) > hc.set.budget) continue;
    DegreeTuple j(ham.blocks.size(), 0);
    fvec yv(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      if (y >> a & 1) {
        ++j[blocks.block_of[a]];
        yv[a] = 1;
      }
    const double r = hc.r[hc.set.index_of(j)];
    if (std::fabs(r) < 1e-15) continue;
    ++rep.support;

    const fvec s = syndrome(M, yv);
    require(seen.emplace(s, y).second,
            "syndrome map is not injective on the support");
    const auto back = bdd_decode(M, s, hc.set.budget);
    require(back.has_value() && *back == yv,
            "decoder failed to round-trip a supported word");
    ++rep.decode_round_trips;

    Pauli W{ham.n, 0, 0, 0};
    for (std::size_t a = 0; a < m; ++a)
      if (y >> a & 1) W = W * all[a];
    const Pauli C = Pauli::canonical(ham.n, W.alpha, W.beta);
    const std::uint32_t dk = (W.k + 4 - C.k) % 4;
    require(dk == 0 || dk == 2, "relative phase of a word is not real");
    const double sign = dk == 0 ? 1.0 : -1.0;
    const std::complex<double> coef =
        (r / hc.norm) * sign * kPhase[C.k] * inv_root_dim;
    for (std::size_t x = 0; x < dim; ++x) {
      const std::size_t u = x ^ C.beta;
      const double sgn = parity(C.alpha & u) ? -1.0 : 1.0;
      psi[u * dim + x] += coef * sgn;
    }
  }
  long double ns = 0;
  for (const auto& a : psi) ns += std::norm(a);
  rep.state_norm = static_cast<double>(ns);

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t w = 0; w < dim; ++w) {
      std::complex<double> acc = 0;
      for (std::size_t v = 0; v < dim; ++v)
        acc += psi[u * dim + v] * std::conj(psi[w * dim + v]);
      rho(u, w) = acc;
    }
  rep.trace_dist = trace_distance(rho, dense_rho_P(ham, pcoef));
  return rep;
}

GibbsReport gibbs_distance(const BlockHamiltonian& ham, double beta,
                           double delta) {
  require(beta >= 0, "inverse temperature must be nonnegative");
  require(delta > 0 && delta < 2, "delta must lie in (0, 2)");
  const auto E = dense_hamiltonian(ham);
  const std::size_t dim = E.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(E);
  const Eigen::VectorXd evals = es.eigenvalues();
  const double h_norm = evals.cwiseAbs().maxCoeff();

  GibbsReport rep;
  rep.h_norm = h_norm;
  rep.delta = delta;
  rep.degree = static_cast<std::size_t>(
      std::max(1.0, std::ceil(1.12 * beta * h_norm + 0.648 * std::log(2.0 / delta))));

  const double scale = h_norm > 0 ? h_norm : 1.0;
  const std::size_t d = rep.degree;
  std::vector<double> c(d + 1, 0.0);
  for (std::size_t q = 0; q <= d; ++q) {
    const double theta = kPi * (q + 0.5) / (d + 1);
    const double f = std::exp(-beta * scale * std::cos(theta) / 2.0);
    for (std::size_t jj = 0; jj <= d; ++jj)
      c[jj] += 2.0 / (d + 1) * f * std::cos(jj * theta);
  }
  c[0] *= 0.5;

  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd X = E / scale;
  Eigen::MatrixXcd A = c[0] * I;
  if (d >= 1) A += c[1] * X;
  Eigen::MatrixXcd t_prev = I, t_cur = X;
  for (std::size_t jj = 2; jj <= d; ++jj) {
    Eigen::MatrixXcd t_next = 2.0 * X * t_cur - t_prev;
    A += c[jj] * t_next;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  const Eigen::MatrixXcd sq = A * A;
  const double tr = sq.trace().real();
  require(tr > 0, "approximant squared has zero trace");
  const Eigen::MatrixXcd rho_p = sq / tr;

  const double shift = evals.minCoeff();
  Eigen::VectorXd w(dim);
  for (std::size_t i = 0; i < dim; ++i)
    w(i) = std::exp(-beta * (evals(i) - shift));
  w /= w.sum();
  const Eigen::MatrixXcd gibbs =
      es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();

  rep.distance = trace_distance(rho_p, gibbs);
  if (rep.distance > delta)
    throw invariant_violation("Gibbs approximation distance " +
                              std::to_string(rep.distance) +
                              " exceeds the requested bound");
  return rep;
}

}  // namespace mdqi
