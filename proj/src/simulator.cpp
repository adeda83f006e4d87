#include "mdqi/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "mdqi/krawtchouk.hpp"

namespace mdqi {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Walks all assignments in index order (x[0] most significant) while
// maintaining per-block satisfied-constraint counts. Each digit step adds one
// column of B to the cached row values, so the whole scan costs O(dim * m).
template <typename Fn>
void scan_profiles(const MaxLinsat& inst, Fn&& fn) {
  const std::uint32_t p = inst.field.p;
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  const std::size_t dim = state_dimension(p, n);
  std::vector<std::vector<std::uint8_t>> sat(m, std::vector<std::uint8_t>(p, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::uint32_t y = 0; y < p; ++y)
      sat[i][y] = inst.satisfies(i, y) ? 1 : 0;
  fvec x(n, 0);
  fvec v(m, 0);
  std::vector<std::uint32_t> count(inst.blocks.num_blocks(), 0);
  for (std::size_t i = 0; i < m; ++i)
    count[inst.blocks.block_of[i]] += sat[i][0];
  for (std::size_t idx = 0;; ++idx) {
    fn(idx, count);
    if (idx + 1 == dim) break;
    std::size_t d = n;
    for (;;) {
      --d;
      x[d] = (x[d] + 1 == p) ? 0 : x[d] + 1;
      for (std::size_t i = 0; i < m; ++i) {
        const felem bid = inst.B.at(i, d);
        if (bid == 0) continue;
        felem nv = v[i] + bid;
        if (nv >= p) nv -= p;
        const std::size_t t = inst.blocks.block_of[i];
        count[t] += sat[i][nv];
        count[t] -= sat[i][v[i]];
        v[i] = nv;
      }
      if (x[d] != 0) break;
    }
  }
}

struct TwoValueScores {
  double hplus = 0;   // centered score of a satisfied row
  double hminus = 0;  // centered score of an unsatisfied row
};

TwoValueScores centered_scores(const CenteredStats& st, std::uint32_t p) {
  const double root_p = std::sqrt(static_cast<double>(p));
  TwoValueScores sc;
  sc.hplus = root_p * (1.0 - st.fbar) / st.phi;
  sc.hminus = -root_p * (1.0 + st.fbar) / st.phi;
  return sc;
}

// e_k over m two-valued scores with c copies of hplus: table[k][c].
std::vector<std::vector<double>> elementary_table(std::size_t m,
                                                  const TwoValueScores& sc) {
  std::vector<double> pp(m + 1, 1.0), pm(m + 1, 1.0);
  for (std::size_t a = 1; a <= m; ++a) {
    pp[a] = pp[a - 1] * sc.hplus;
    pm[a] = pm[a - 1] * sc.hminus;
  }
  std::vector<std::vector<double>> table(m + 1, std::vector<double>(m + 1, 0.0));
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t c = 0; c <= m; ++c) {
      double sum = 0;
      const std::size_t lo = k > (m - c) ? k - (m - c) : 0;
      const std::size_t hi = std::min(c, k);
      for (std::size_t a = lo; a <= hi; ++a)
        sum += binomial_d(c, a) * binomial_d(m - c, k - a) * pp[a] * pm[k - a];
      table[k][c] = sum;
    }
  return table;
}

std::vector<std::vector<std::vector<double>>> block_tables(
    const MaxLinsat& inst) {
  const auto stats = centered_stats(inst);
  const auto sc = centered_scores(stats, inst.field.p);
  const auto sizes = inst.blocks.sizes();
  std::vector<std::vector<std::vector<double>>> tabs;
  tabs.reserve(sizes.size());
  for (std::size_t mt : sizes) tabs.push_back(elementary_table(mt, sc));
  return tabs;
}

void check_degrees(const MaxLinsat& inst, const DegreeTuple& j) {
  const auto sizes = inst.blocks.sizes();
  require(j.size() == sizes.size(), "degree tuple has wrong block count");
  for (std::size_t t = 0; t < j.size(); ++t)
    require(j[t] <= sizes[t], "degree exceeds block size");
}

void check_state_shape(const MaxLinsat& inst, const StateVector& sv) {
  require(sv.p == inst.field.p && sv.n == inst.n(), "state shape mismatch");
  require(sv.amp.size() == state_dimension(sv.p, sv.n), "state length mismatch");
}

std::vector<std::vector<std::size_t>> combinations(
    const std::vector<std::size_t>& pool, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    out.push_back(std::move(pick));
    if (k == 0) break;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == pool.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

double StateVector::norm_sq() const {
  long double acc = 0;
  for (const auto& a : amp) acc += std::norm(a);
  return static_cast<double>(acc);
}

void StateVector::normalize() {
  const double ns = norm_sq();
  require(ns > 0, "cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(ns);
  for (auto& a : amp) a *= inv;
}

std::size_t state_dimension(std::uint32_t p, std::size_t n, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > cap / p)
      throw cap_exceeded("state dimension p^n exceeds the configured cap");
    dim *= p;
  }
  if (dim > cap)
    throw cap_exceeded("state dimension p^n exceeds the configured cap");
  return dim;
}

std::size_t pack_index(const fvec& x, std::uint32_t p) {
  std::size_t idx = 0;
  for (felem d : x) {
    require(d < p, "digit out of range");
    idx = idx * p + d;
  }
  return idx;
}

fvec unpack_index(std::size_t idx, std::uint32_t p, std::size_t n) {
  fvec x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    x[i] = static_cast<felem>(idx % p);
    idx /= p;
  }
  require(idx == 0, "index out of range");
  return x;
}

void fourier_transform(StateVector& sv, bool inverse) {
  const std::uint32_t p = sv.p;
  const std::size_t dim = state_dimension(p, sv.n);
  require(sv.amp.size() == dim, "state length mismatch");
  std::vector<std::complex<double>> omega(p);
  const double sign = inverse ? -1.0 : 1.0;
  for (std::uint32_t t = 0; t < p; ++t) {
    const double ang = sign * kTwoPi * t / p;
    omega[t] = {std::cos(ang), std::sin(ang)};
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::vector<std::complex<double>> in(p), out(p);
  std::size_t stride = dim / p;
  for (std::size_t c = 0; c < sv.n; ++c) {
    for (std::size_t base = 0; base < dim; base += stride * p) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::uint32_t k = 0; k < p; ++k)
          in[k] = sv.amp[base + off + k * stride];
        for (std::uint32_t a = 0; a < p; ++a) {
          std::complex<double> acc = 0;
          for (std::uint32_t k = 0; k < p; ++k)
            acc += omega[static_cast<std::size_t>(a) * k % p] * in[k];
          out[a] = scale * acc;
        }
        for (std::uint32_t a = 0; a < p; ++a)
          sv.amp[base + off + a * stride] = out[a];
      }
    }
    stride /= p;
  }
}

StateVector block_symmetric_state(const MaxLinsat& inst, const DegreeTuple& j) {
  check_degrees(inst, j);
  const auto sizes = inst.blocks.sizes();
  const std::size_t dim = state_dimension(inst.field.p, inst.n());
  const auto tabs = block_tables(inst);
  double comb = 1.0;
  for (std::size_t t = 0; t < j.size(); ++t)
    comb *= binomial_d(sizes[t], j[t]);
  const double pref = 1.0 / std::sqrt(static_cast<double>(dim) * comb);
  StateVector sv{inst.field.p, inst.n(), {}};
  sv.amp.assign(dim, 0.0);
  scan_profiles(inst, [&](std::size_t idx, const std::vector<std::uint32_t>& c) {
    double a = pref;
    for (std::size_t t = 0; t < j.size(); ++t) a *= tabs[t][j[t]][c[t]];
    sv.amp[idx] = a;
  });
  return sv;
}

StateVector dqi_state_direct(const MaxLinsat& inst, const DegreeIndexSet& set,
                             const std::vector<double>& w) {
  require(set.block_caps == inst.blocks.sizes(), "index set does not match instance");
  require(w.size() == set.size(), "weight vector length mismatch");
  const auto sizes = inst.blocks.sizes();
  const std::size_t N = sizes.size();
  const std::size_t dim = state_dimension(inst.field.p, inst.n());
  const auto tabs = block_tables(inst);
  // Amplitudes depend on x only through the per-block satisfied counts, so
  // precompute one coefficient per profile in the (m_t + 1)-radix grid.
  std::vector<std::size_t> stride(N, 1);
  std::size_t grid = 1;
  for (std::size_t t = N; t-- > 0;) {
    stride[t] = grid;
    grid *= sizes[t] + 1;
  }
  std::vector<double> coef(grid, 0.0);
  const double inv_root_dim = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::uint32_t> prof(N, 0);
  for (std::size_t g = 0; g < grid; ++g) {
    double sum = 0;
    for (std::size_t idx = 0; idx < set.size(); ++idx) {
      if (w[idx] == 0) continue;
      const DegreeTuple& j = set.tuples[idx];
      double comb = 1.0, prod = 1.0;
      for (std::size_t t = 0; t < N; ++t) {
        comb *= binomial_d(sizes[t], j[t]);
        prod *= tabs[t][j[t]][prof[t]];
      }
      sum += w[idx] * prod / std::sqrt(comb);
    }
    coef[g] = sum * inv_root_dim;
    for (std::size_t t = N; t-- > 0;) {
      if (++prof[t] <= sizes[t]) break;
      prof[t] = 0;
    }
  }
  StateVector sv{inst.field.p, inst.n(), {}};
  sv.amp.assign(dim, 0.0);
  scan_profiles(inst, [&](std::size_t idx, const std::vector<std::uint32_t>& c) {
    std::size_t g = 0;
    for (std::size_t t = 0; t < N; ++t) g += stride[t] * c[t];
    sv.amp[idx] = coef[g];
  });
  sv.normalize();
  return sv;
}

StateVector fourier_construction(const MaxLinsat& inst,
                                 const DegreeIndexSet& set,
                                 const std::vector<double>& w,
                                 const DecoderModel& decoder,
                                 std::size_t cap) {
  require(set.block_caps == inst.blocks.sizes(), "index set does not match instance");
  require(w.size() == set.size(), "weight vector length mismatch");
  const std::uint32_t p = inst.field.p;
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  const auto sizes = inst.blocks.sizes();
  const std::size_t N = sizes.size();
  const std::size_t dim = state_dimension(p, n);
  // Only layers with nonzero weight are enumerated, so only those count
  // against the cap.
  double total = 0;
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    if (w[idx] == 0) continue;
    const DegreeTuple& j = set.tuples[idx];
    double cnt = 1.0;
    std::size_t wt = 0;
    for (std::size_t t = 0; t < N; ++t) {
      cnt *= binomial_d(sizes[t], j[t]);
      wt += j[t];
    }
    total += cnt * std::pow(static_cast<double>(p - 1), static_cast<double>(wt));
  }
  if (total > static_cast<double>(cap))
    throw cap_exceeded("error-vector enumeration exceeds the configured cap");

  const auto stats = centered_stats(inst);
  StateVector sv{p, n, {}};
  sv.amp.assign(dim, 0.0);
  fvec y(m, 0);
  fvec s(n, 0);
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    if (w[idx] == 0) continue;
    const DegreeTuple& j = set.tuples[idx];
    double comb = 1.0;
    for (std::size_t t = 0; t < N; ++t) comb *= binomial_d(sizes[t], j[t]);
    const double pref = w[idx] / std::sqrt(comb);
    std::vector<std::vector<std::vector<std::size_t>>> supp(N);
    for (std::size_t t = 0; t < N; ++t)
      supp[t] = combinations(inst.blocks.members[t], j[t]);
    std::vector<std::size_t> pick(N, 0);
    for (;;) {
      std::vector<std::size_t> rows;
      for (std::size_t t = 0; t < N; ++t)
        rows.insert(rows.end(), supp[t][pick[t]].begin(), supp[t][pick[t]].end());
      const std::size_t K = rows.size();
      fvec vals(K, 1);
      for (;;) {
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t k = 0; k < K; ++k) y[rows[k]] = vals[k];
        if (decoder.decodes(inst.B, y)) {
          std::fill(s.begin(), s.end(), 0);
          std::complex<double> cf = pref;
          for (std::size_t k = 0; k < K; ++k) {
            const felem* row = inst.B.row(rows[k]);
            for (std::size_t c = 0; c < n; ++c)
              s[c] = static_cast<felem>(
                  (s[c] + static_cast<std::uint64_t>(vals[k]) * row[c]) % p);
            cf *= stats.fourier[rows[k]][vals[k]];
          }
          sv.amp[pack_index(s, p)] += cf;
        }
        std::size_t pos = K;
        while (pos > 0) {
          if (++vals[pos - 1] < p) break;
          vals[pos - 1] = 1;
          --pos;
        }
        if (pos == 0) break;
      }
      std::size_t t = N;
      while (t > 0) {
        if (++pick[t - 1] < supp[t - 1].size()) break;
        pick[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
    }
  }
  fourier_transform(sv, /*inverse=*/true);
  return sv;
}

double exact_expectation(const MaxLinsat& inst, const StateVector& sv) {
  check_state_shape(inst, sv);
  const auto sizes = inst.blocks.sizes();
  const auto& g = inst.blocks.weights;
  long double acc = 0;
  scan_profiles(inst, [&](std::size_t idx, const std::vector<std::uint32_t>& c) {
    double val = 0;
    for (std::size_t t = 0; t < sizes.size(); ++t)
      val += g[t] * (2.0 * c[t] - static_cast<double>(sizes[t]));
    acc += static_cast<long double>(std::norm(sv.amp[idx])) * val;
  });
  return static_cast<double>(acc);
}

void apply_centered_block_score(const MaxLinsat& inst, std::size_t t,
                                StateVector& sv) {
  check_state_shape(inst, sv);
  require(t < inst.blocks.num_blocks(), "block index out of range");
  const auto stats = centered_stats(inst);
  const auto sc = centered_scores(stats, inst.field.p);
  const double mt = static_cast<double>(inst.blocks.sizes()[t]);
  scan_profiles(inst, [&](std::size_t idx, const std::vector<std::uint32_t>& c) {
    const double score = c[t] * sc.hplus + (mt - c[t]) * sc.hminus;
    sv.amp[idx] *= score;
  });
}

StateVector rho_Jr_state(const MaxLinsat& inst,
                         const std::vector<std::size_t>& J,
                         const std::vector<std::size_t>& r, bool strict) {
  const auto sizes = inst.blocks.sizes();
  const std::size_t N = sizes.size();
  require(J.size() == N && r.size() == N, "J and r must have one entry per block");
  std::size_t budget = 0, sumJ = 0, sumR = 0;
  for (std::size_t t = 0; t < N; ++t) {
    require(r[t] >= 2, "window parameter r_t must be at least 2");
    require(J[t] + r[t] - 1 <= sizes[t], "window exceeds block size");
    budget += J[t] + r[t] - 1;
    sumJ += J[t];
    sumR += r[t];
  }
  if (strict) {
    const auto d = dual_min_distance(inst.B);
    require(d.has_value(), "dual distance undefined: B has full row rank");
    require(2 * (sumJ + sumR + 1) < *d, "window violates the distance hypothesis");
  }
  const auto set = enumerate_degree_tuples(sizes, budget);
  std::size_t rect = 1;
  for (std::size_t t = 0; t < N; ++t) rect *= r[t] - 1;
  const double wj = 1.0 / std::sqrt(static_cast<double>(rect));
  std::vector<double> w(set.size(), 0.0);
  DegreeTuple j(N, 0);
  for (std::size_t t = 0; t < N; ++t) j[t] = static_cast<std::uint32_t>(J[t] + 1);
  for (;;) {
    const std::size_t idx = set.index_of(j);
    require(idx != DegreeIndexSet::npos, "rectangle tuple missing from index set");
    w[idx] = wj;
    std::size_t t = N;
    while (t > 0) {
      if (++j[t - 1] <= J[t - 1] + r[t - 1] - 1) break;
      j[t - 1] = static_cast<std::uint32_t>(J[t - 1] + 1);
      --t;
    }
    if (t == 0) break;
  }
  return dqi_state_direct(inst, set, w);
}

ConcentrationReport concentration_experiment(const MaxLinsat& inst,
                                             const std::vector<std::size_t>& J,
                                             const std::vector<std::size_t>& r,
                                             double eps) {
  require(eps > 0, "band width must be positive");
  const auto sizes = inst.blocks.sizes();
  const std::size_t N = sizes.size();
  const auto& g = inst.blocks.weights;
  const double m_total = static_cast<double>(inst.m());
  const StateVector sv = rho_Jr_state(inst, J, r, /*strict=*/false);

  ConcentrationReport rep;
  rep.eps = eps;
  rep.alpha.resize(N);
  rep.beta.resize(N);
  rep.predicted = 0;
  for (std::size_t t = 0; t < N; ++t) {
    const double a = static_cast<double>(J[t]) / sizes[t];
    rep.alpha[t] = a;
    rep.beta[t] = 0.5 - std::sqrt(a * (1.0 - a));
    rep.predicted += 2.0 * g[t] * (sizes[t] / m_total) * std::sqrt(a * (1.0 - a));
  }
  long double mass = 0, cond = 0;
  std::size_t band = 0;
  scan_profiles(inst, [&](std::size_t idx, const std::vector<std::uint32_t>& c) {
    bool in_band = true;
    for (std::size_t t = 0; t < N && in_band; ++t) {
      const double q_frac = static_cast<double>(sizes[t] - c[t]) / sizes[t];
      in_band = std::fabs(q_frac - rep.beta[t]) <= eps;
    }
    if (!in_band) return;
    ++band;
    const double pr = std::norm(sv.amp[idx]);
    double val = 0;
    for (std::size_t t = 0; t < N; ++t)
      val += g[t] * (2.0 * c[t] - static_cast<double>(sizes[t]));
    mass += pr;
    cond += pr * (val / m_total);
  });
  rep.mass = static_cast<double>(mass);
  rep.band_size = band;
  rep.mean_ratio = mass > 0 ? static_cast<double>(cond / mass) : 0.0;
  return rep;
}

void write_state(std::ostream& out, const StateVector& sv) {
  out << sv.p << ' ' << sv.n << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < sv.amp.size(); ++i) {
    if (std::abs(sv.amp[i]) <= 1e-14) continue;
    out << i << ' ' << sv.amp[i].real() << ' ' << sv.amp[i].imag() << '\n';
  }
}

double phase_aligned_distance(const StateVector& a, const StateVector& b) {
  require(a.p == b.p && a.n == b.n && a.amp.size() == b.amp.size(),
          "states have different shapes");
  std::size_t ref = 0;
  double best = -1;
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    const double mag = std::abs(a.amp[i]) * std::abs(b.amp[i]);
    if (mag > best) {
      best = mag;
      ref = i;
    }
  }
  std::complex<double> phase = 1.0;
  if (best > 0) {
    phase = a.amp[ref] / b.amp[ref];
    phase /= std::abs(phase);
  }
  double dist = 0;
  for (std::size_t i = 0; i < a.amp.size(); ++i)
    dist = std::max(dist, std::abs(a.amp[i] - phase * b.amp[i]));
  return dist;
}

}  // namespace mdqi
