#include "mdqi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <Eigen/Dense>

namespace mdqi {

std::size_t DegreeIndexSet::index_of(const DegreeTuple& j) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), j);
  if (it == tuples.end() || *it != j) return npos;
  return static_cast<std::size_t>(it - tuples.begin());
}

std::size_t DegreeIndexSet::weight(std::size_t idx) const {
  std::size_t s = 0;
  for (auto v : tuples[idx]) s += v;
  return s;
}

DegreeIndexSet enumerate_degree_tuples(const std::vector<std::size_t>& sizes,
                                       std::size_t budget, std::size_t cap) {
  require(!sizes.empty(), "enumerate_degree_tuples: no blocks");
  DegreeIndexSet set;
  set.block_caps = sizes;
  set.budget = budget;
  DegreeTuple cur(sizes.size(), 0);
  // Recursive lexicographic fill.
  auto rec = [&](auto&& self, std::size_t t, std::size_t used) -> void {
    if (t == sizes.size()) {
      if (set.tuples.size() >= cap)
        throw cap_exceeded("enumerate_degree_tuples: index set exceeds cap");
      set.tuples.push_back(cur);
      return;
    }
    std::size_t hi = std::min(sizes[t], budget - used);
    for (std::size_t v = 0; v <= hi; ++v) {
      cur[t] = static_cast<std::uint32_t>(v);
      self(self, t + 1, used + v);
    }
    cur[t] = 0;
  };
  rec(rec, 0, 0);
  return set;
}

void SpectralMatrix::multiply(const double* in, double* out) const {
  for (std::size_t r = 0; r < dim; ++r) {
    double acc = 0;
    for (const auto& [c, v] : rows[r]) acc += v * in[c];
    out[r] = acc;
  }
}

std::size_t SpectralMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

SpectralMatrix build_matrix(const BlockStructure& blocks,
                            const DegreeIndexSet& set, double kappa) {
  const std::size_t N = blocks.num_blocks();
  require(set.block_caps == blocks.sizes(),
          "build_matrix: index set does not match block sizes");
  SpectralMatrix A;
  A.dim = set.size();
  A.kappa = kappa;
  A.rows.resize(A.dim);
  for (std::size_t idx = 0; idx < A.dim; ++idx) {
    const DegreeTuple& j = set.tuples[idx];
    double diag = 0;
    for (std::size_t t = 0; t < N; ++t) diag += blocks.weights[t] * j[t];
    diag *= kappa;
    if (diag != 0.0) A.rows[idx].emplace_back(idx, diag);
    DegreeTuple nb = j;
    for (std::size_t t = 0; t < N; ++t) {
      const double m_t = static_cast<double>(blocks.members[t].size());
      if (j[t] > 0) {
        nb[t] = j[t] - 1;
        std::size_t down = set.index_of(nb);
        if (down != DegreeIndexSet::npos)
          A.rows[idx].emplace_back(
              down, blocks.weights[t] *
                        std::sqrt(double(j[t]) * (m_t - double(j[t]) + 1.0)));
        nb[t] = j[t];
      }
      if (double(j[t]) < m_t) {
        nb[t] = j[t] + 1;
        std::size_t up = set.index_of(nb);
        if (up != DegreeIndexSet::npos)
          A.rows[idx].emplace_back(
              up, blocks.weights[t] *
                      std::sqrt(double(j[t] + 1) * (m_t - double(j[t]))));
        nb[t] = j[t];
      }
    }
    std::sort(A.rows[idx].begin(), A.rows[idx].end());
  }
  return A;
}

void write_spectral(std::ostream& out, const SpectralMatrix& A) {
  out << A.dim << ' ' << A.nnz() << '\n';
  out.precision(17);
  for (std::size_t r = 0; r < A.dim; ++r)
    for (const auto& [c, v] : A.rows[r]) out << r << ' ' << c << ' ' << v << '\n';
}

EigenPair lambda_max_dense(const SpectralMatrix& A) {
  require(A.dim >= 1, "lambda_max: empty matrix");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.dim, A.dim);
  for (std::size_t r = 0; r < A.dim; ++r)
    for (const auto& [c, v] : A.rows[r]) M(r, c) = v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  require(es.info() == Eigen::Success, "lambda_max: eigensolver failed");
  EigenPair out;
  out.value = es.eigenvalues()(Eigen::Index(A.dim) - 1);
  out.vec.resize(A.dim);
  double sign_mass = 0;
  for (std::size_t i = 0; i < A.dim; ++i) {
    out.vec[i] = es.eigenvectors()(i, Eigen::Index(A.dim) - 1);
    sign_mass += out.vec[i];
  }
  if (sign_mass < 0)
    for (double& v : out.vec) v = -v;
  return out;
}

EigenPair lambda_max_iterative(const SpectralMatrix& A) {
  require(A.dim >= 1, "lambda_max: empty matrix");
  // Gershgorin shift makes the top eigenvalue of A + cI dominant in modulus.
  double c = 0;
  for (std::size_t r = 0; r < A.dim; ++r) {
    double row_sum = 0;
    for (const auto& [col, v] : A.rows[r]) row_sum += std::abs(v);
    c = std::max(c, row_sum);
  }
  c += 1.0;
  std::vector<double> v(A.dim, 1.0 / std::sqrt(double(A.dim))), w(A.dim);
  double lambda = 0;
  constexpr std::size_t kMaxIter = 1000000;
  for (std::size_t it = 0; it < kMaxIter; ++it) {
    A.multiply(v.data(), w.data());
    double rayleigh = 0;
    for (std::size_t i = 0; i < A.dim; ++i) rayleigh += v[i] * w[i];
    for (std::size_t i = 0; i < A.dim; ++i) w[i] += c * v[i];
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < A.dim; ++i) w[i] /= norm;
    double delta = std::abs(rayleigh - lambda);
    lambda = rayleigh;
    v.swap(w);
    if (it > 2 && delta <= 1e-10 * std::max(1.0, std::abs(lambda))) {
      EigenPair out;
      out.value = lambda;
      double sign_mass = 0;
      for (double x : v) sign_mass += x;
      if (sign_mass < 0)
        for (double& x : v) x = -x;
      out.vec = std::move(v);
      return out;
    }
  }
  throw no_convergence("lambda_max_iterative: power iteration did not settle");
}

EigenPair lambda_max(const SpectralMatrix& A) {
  return A.dim <= 2000 ? lambda_max_dense(A) : lambda_max_iterative(A);
}

std::vector<double> AnsatzCoefficients::to_vector(
    const DegreeIndexSet& set) const {
  std::vector<double> w(set.size(), 0.0);
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    double prod = 1;
    const DegreeTuple& j = set.tuples[idx];
    for (std::size_t t = 0; t < per_block.size(); ++t)
      prod *= (j[t] < per_block[t].size()) ? per_block[t][j[t]] : 0.0;
    w[idx] = prod;
  }
  return w;
}

AnsatzCoefficients product_ansatz(const BlockStructure& blocks, std::size_t l,
                                  double kappa) {
  const std::size_t N = blocks.num_blocks();
  const std::size_t m = blocks.total_rows();
  AnsatzCoefficients ac;
  ac.per_block.resize(N);
  ac.J.assign(N, 0);
  ac.width.assign(N, 1);

  std::vector<double> alpha(N, 0.0);
  if (l > 0) {
    std::vector<double> theta = blocks.densities();
    double mu = std::min(0.5, double(l) / double(m));
    alpha = gamma_functional(blocks.weights, theta, kappa, mu).alpha;
  }
  for (std::size_t t = 0; t < N; ++t) {
    const std::size_t m_t = blocks.members[t].size();
    std::size_t J = static_cast<std::size_t>(std::floor(alpha[t] * m_t));
    J = std::min(J, m_t);
    std::size_t r = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(std::sqrt(double(J)))));
    ac.J[t] = J;
    ac.width[t] = r;
    std::vector<double>& a = ac.per_block[t];
    a.assign(m_t + 1, 0.0);
    if (J == 0) {
      a[0] = 1.0;
    } else {
      double amp = 1.0 / std::sqrt(double(r));
      for (std::size_t j = J + 1 - r; j <= J; ++j) a[j] = amp;
    }
  }
  return ac;
}

double rayleigh_quotient(const SpectralMatrix& A, const std::vector<double>& w) {
  require(w.size() == A.dim, "rayleigh_quotient: dimension mismatch");
  std::vector<double> Aw(A.dim);
  A.multiply(w.data(), Aw.data());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < A.dim; ++i) {
    num += w[i] * Aw[i];
    den += w[i] * w[i];
  }
  require(den > 0, "rayleigh_quotient: zero vector");
  return num / den;
}

double expected_value(const MaxLinsat& inst, const DegreeIndexSet& set,
                      const std::vector<double>& w, bool strict) {
  CenteredStats st = centered_stats(inst);
  if (strict) {
    std::optional<std::size_t> d = dual_min_distance(inst.B);
    if (d.has_value())
      require(2 * set.budget + 1 < *d,
              "expected_value: degree budget violates 2l+1 < dual distance");
  }
  SpectralMatrix A = build_matrix(inst.blocks, set, st.kappa);
  double quad = rayleigh_quotient(A, w);
  return st.fbar * inst.blocks.weight_mass() +
         st.phi / std::sqrt(double(inst.field.p)) * quad;
}

double collatz_wielandt_bound(const BlockStructure& blocks,
                              const DegreeIndexSet& set, double kappa,
                              const std::vector<double>& x) {
  const std::size_t N = blocks.num_blocks();
  require(x.size() == N, "collatz_wielandt_bound: one entry per block");
  for (double v : x) require(v > 0, "collatz_wielandt_bound: x must be positive");
  double best = -1e300;
  for (const DegreeTuple& j : set.tuples) {
    double s = 0;
    for (std::size_t t = 0; t < N; ++t) {
      double m_t = static_cast<double>(blocks.members[t].size());
      s += blocks.weights[t] *
           ((m_t - j[t]) * x[t] + double(j[t]) / x[t] + kappa * double(j[t]));
    }
    best = std::max(best, s);
  }
  return best;
}

}  // namespace mdqi
