#include "mdqi/decoding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "mdqi/krawtchouk.hpp"
#include "mdqi/rng.hpp"

namespace mdqi {

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<fvec> bdd_decode(const FieldMatrix& B, const fvec& synd,
                               std::size_t radius, std::size_t cap) {
  require(synd.size() == B.cols, "bdd_decode: syndrome length mismatch");
  const std::uint32_t p = B.p;
  const std::size_t m = B.rows;
  double total = 1;
  for (std::size_t w = 1; w <= std::min(radius, m); ++w) {
    double layer = 1;
    for (std::size_t i = 0; i < w; ++i)
      layer *= double(m - i) / double(i + 1) * double(p - 1);
    total += layer;
  }
  if (total > double(cap))
    throw cap_exceeded("bdd_decode: enumeration exceeds cap");

  fvec y(m, 0);
  fvec s(B.cols);
  auto matches = [&](const std::vector<std::size_t>& supp,
                     const fvec& vals) -> bool {
    std::fill(s.begin(), s.end(), 0);
    for (std::size_t k = 0; k < supp.size(); ++k) {
      const felem* row = B.row(supp[k]);
      for (std::size_t c = 0; c < B.cols; ++c)
        s[c] = static_cast<felem>((s[c] + std::uint64_t(vals[k]) * row[c]) % p);
    }
    return s == synd;
  };

  if (matches({}, {})) return fvec(m, 0);
  for (std::size_t w = 1; w <= std::min(radius, m); ++w) {
    std::vector<std::size_t> supp(w);
    for (std::size_t i = 0; i < w; ++i) supp[i] = i;
    do {
      fvec vals(w, 1);
      for (bool more = true; more;) {
        if (matches(supp, vals)) {
          std::fill(y.begin(), y.end(), 0);
          for (std::size_t k = 0; k < w; ++k) y[supp[k]] = vals[k];
          return y;
        }
        more = false;
        for (std::size_t pos = w; pos > 0;) {
          --pos;
          if (vals[pos] + 1 < p) {
            ++vals[pos];
            more = true;
            break;
          }
          vals[pos] = 1;
        }
      }
    } while (next_combination(supp, m));
  }
  return std::nullopt;
}

RsDecoder::RsDecoder(const RsCode& code) : code_(code) {
  PrimeField f(code.p);
  require(code.n >= 1 && code.n < code.p - 1, "RsDecoder: need 1 <= n < p-1");
  require(code.p <= 256, "RsDecoder: p too large for table decoder");
  require(f.pow(code.gamma, code.p - 1) == 1, "RsDecoder: bad generator");
  // gamma must generate the full multiplicative group.
  felem acc = 1;
  for (std::size_t i = 1; i + 1 < code.p; ++i) {
    acc = f.mul(acc, code.gamma);
    require(acc != 1, "RsDecoder: gamma is not primitive");
  }
  mul_.assign(std::size_t(code.p) * code.p, 0);
  for (std::uint32_t a = 0; a < code.p; ++a)
    for (std::uint32_t b = 0; b < code.p; ++b)
      mul_[std::size_t(a) * code.p + b] = static_cast<std::uint16_t>(
          std::uint64_t(a) * b % code.p);
  inv_.assign(code.p, 0);
  for (std::uint32_t a = 1; a < code.p; ++a) inv_[a] = f.inv(a);
  xi_.assign(code.p - 1, 1);
  xi_inv_.assign(code.p - 1, 1);
  for (std::size_t i = 0; i < code.p - 1; ++i) {
    xi_[i] = f.pow(code.gamma, i);
    xi_inv_[i] = inv_[xi_[i]];
  }
}

bool RsDecoder::decode_into(const felem* synd, std::size_t radius,
                            felem* err) const {
  const std::uint32_t p = code_.p;
  const std::size_t n = code_.n;
  const std::size_t m = p - 1;
  auto mul = [&](felem a, felem b) -> felem {
    return mul_[std::size_t(a) * p + b];
  };
  // Berlekamp-Massey over all n syndromes; degrees tracked to keep the
  // update loops tight.
  std::array<felem, 260> C{}, Bp{}, T{};
  C[0] = 1;
  Bp[0] = 1;
  std::size_t L = 0, shift = 1, degB = 0, degC = 0;
  felem b = 1;
  for (std::size_t idx = 0; idx < n; ++idx) {
    felem d = synd[idx];
    for (std::size_t i = 1; i <= L; ++i)
      d = static_cast<felem>((d + mul(C[i], synd[idx - i])) % p);
    if (d == 0) {
      ++shift;
      continue;
    }
    felem coef = mul(d, inv_[b]);
    if (2 * L <= idx) {
      std::size_t degT = degC;
      for (std::size_t i = 0; i <= degC; ++i) T[i] = C[i];
      for (std::size_t i = 0; i <= degB; ++i) {
        felem sub = mul(coef, Bp[i]);
        C[i + shift] = static_cast<felem>((C[i + shift] + p - sub) % p);
      }
      degC = std::max(degC, degB + shift);
      L = idx + 1 - L;
      for (std::size_t i = 0; i <= degT; ++i) Bp[i] = T[i];
      for (std::size_t i = degT + 1; i <= degB; ++i) Bp[i] = 0;
      degB = degT;
      b = d;
      shift = 1;
    } else {
      for (std::size_t i = 0; i <= degB; ++i) {
        felem sub = mul(coef, Bp[i]);
        C[i + shift] = static_cast<felem>((C[i + shift] + p - sub) % p);
      }
      degC = std::max(degC, degB + shift);
      ++shift;
    }
  }
  if (L > radius || L > 128) return false;

  // Locator roots by direct evaluation; inverse roots flag error positions.
  std::array<std::size_t, 128> pos{};
  std::size_t found = 0;
  for (std::size_t i = 0; i < m; ++i) {
    felem x = xi_inv_[i];
    felem v = C[L];
    for (std::size_t k = L; k > 0; --k)
      v = static_cast<felem>((mul(v, x) + C[k - 1]) % p);
    if (v == 0) {
      if (found == L) return false;  // more roots than the claimed degree
      pos[found++] = i;
    }
  }
  if (found != L) return false;

  // Magnitudes from the leading L syndromes (Vandermonde solve), then verify
  // the remaining syndromes. The L x (L+1) window of M is fully written
  // before it is read, so it stays uninitialized.
  std::array<felem, 128 * 129> M;
  std::array<felem, 128> xpow{};
  for (std::size_t c = 0; c < L; ++c) xpow[c] = 1;
  for (std::size_t rw = 0; rw < L; ++rw) {
    for (std::size_t c = 0; c < L; ++c) {
      M[rw * (L + 1) + c] = xpow[c];
      xpow[c] = mul(xpow[c], xi_[pos[c]]);
    }
    M[rw * (L + 1) + L] = synd[rw];
  }
  for (std::size_t col = 0; col < L; ++col) {
    std::size_t piv = col;
    while (piv < L && M[piv * (L + 1) + col] == 0) ++piv;
    if (piv == L) return false;
    if (piv != col)
      for (std::size_t c = col; c <= L; ++c)
        std::swap(M[piv * (L + 1) + c], M[col * (L + 1) + c]);
    felem s = inv_[M[col * (L + 1) + col]];
    for (std::size_t c = col; c <= L; ++c)
      M[col * (L + 1) + c] = mul(M[col * (L + 1) + c], s);
    for (std::size_t r2 = 0; r2 < L; ++r2) {
      if (r2 == col) continue;
      felem f2 = M[r2 * (L + 1) + col];
      if (!f2) continue;
      for (std::size_t c = col; c <= L; ++c) {
        felem sub = mul(f2, M[col * (L + 1) + c]);
        M[r2 * (L + 1) + c] =
            static_cast<felem>((M[r2 * (L + 1) + c] + p - sub) % p);
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) err[i] = 0;
  for (std::size_t c = 0; c < L; ++c) {
    felem e = M[c * (L + 1) + L];
    if (e == 0) return false;  // claimed position with zero magnitude
    err[pos[c]] = e;
  }
  for (std::size_t c = 0; c < L; ++c) xpow[c] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    felem acc = 0;
    for (std::size_t c = 0; c < L; ++c) {
      acc = static_cast<felem>((acc + mul(err[pos[c]], xpow[c])) % p);
      xpow[c] = mul(xpow[c], xi_[pos[c]]);
    }
    if (acc != synd[j]) return false;
  }
  return true;
}

std::optional<fvec> RsDecoder::decode(const fvec& synd,
                                      std::size_t radius) const {
  require(synd.size() == code_.n, "RsDecoder: syndrome length mismatch");
  fvec err(code_.p - 1, 0);
  if (!decode_into(synd.data(), radius, err.data())) return std::nullopt;
  return err;
}

std::optional<fvec> bm_decode(const RsCode& code, const fvec& synd,
                              std::size_t radius) {
  RsDecoder dec(code);
  return dec.decode(synd, radius);
}

DecoderModel DecoderModel::perfect() { return DecoderModel{}; }

DecoderModel DecoderModel::bounded_distance(std::size_t radius) {
  DecoderModel d;
  d.kind = Kind::BoundedDistance;
  d.radius = radius;
  return d;
}

DecoderModel DecoderModel::reed_solomon(const RsCode& code,
                                        std::size_t radius) {
  DecoderModel d;
  d.kind = Kind::ReedSolomon;
  d.radius = radius;
  d.rs = std::make_shared<RsDecoder>(code);
  return d;
}

DecoderModel DecoderModel::table(std::set<fvec> failures) {
  DecoderModel d;
  d.kind = Kind::Table;
  d.failures = std::move(failures);
  return d;
}

bool DecoderModel::decodes(const FieldMatrix& B, const fvec& y) const {
  switch (kind) {
    case Kind::Perfect:
      return true;
    case Kind::Table:
      return failures.find(y) == failures.end();
    case Kind::BoundedDistance: {
      auto dec = bdd_decode(B, syndrome(B, y), radius);
      return dec.has_value() && *dec == y;
    }
    case Kind::ReedSolomon: {
      auto dec = rs->decode(syndrome(B, y), radius);
      return dec.has_value() && *dec == y;
    }
  }
  return false;
}

FailureProfile failure_profile(const std::set<fvec>& failures,
                               const BlockStructure& blocks,
                               const DegreeIndexSet& set) {
  const std::size_t N = blocks.num_blocks();
  const std::size_t m = blocks.total_rows();
  for (const fvec& y : failures) {
    require(y.size() == m, "failure_profile: vector length mismatch");
    for (felem v : y) require(v <= 1, "failure_profile: binary vectors only");
  }
  FailureProfile fp;
  fp.set = set;
  fp.gamma.assign(set.size(), 0.0);
  fp.gtilde0.assign(set.size(), std::vector<double>(N, 0.0));
  fp.gtilde1.assign(set.size(), std::vector<double>(N, 0.0));

  // Literal per-coordinate counting over each failing vector's layer.
  std::vector<std::vector<std::size_t>> cnt0(set.size()),
      cnt1(set.size());
  for (auto& v : cnt0) v.assign(N, 0);
  for (auto& v : cnt1) v.assign(N, 0);
  std::vector<std::size_t> fails(set.size(), 0);
  for (const fvec& y : failures) {
    DegreeTuple prof(N, 0);
    for (std::size_t t = 0; t < N; ++t)
      for (std::size_t i : blocks.members[t]) prof[t] += (y[i] != 0);
    std::size_t idx = fp.set.index_of(prof);
    if (idx == DegreeIndexSet::npos) continue;  // outside the budget: inert
    ++fails[idx];
    for (std::size_t t = 0; t < N; ++t)
      for (std::size_t i : blocks.members[t]) {
        if (y[i]) ++cnt1[idx][t];
        else ++cnt0[idx][t];
      }
  }

  const std::vector<std::size_t> sizes = blocks.sizes();
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    const DegreeTuple& j = fp.set.tuples[idx];
    double layer = 1;
    for (std::size_t t = 0; t < N; ++t)
      layer *= binomial_d(sizes[t], j[t]);
    fp.gamma[idx] = double(fails[idx]) / layer;
    fp.gamma_max = std::max(fp.gamma_max, fp.gamma[idx]);
    for (std::size_t t = 0; t < N; ++t) {
      if (j[t] < sizes[t])
        fp.gtilde0[idx][t] =
            double(cnt0[idx][t]) / (double(sizes[t] - j[t]) * layer);
      if (j[t] > 0)
        fp.gtilde1[idx][t] = double(cnt1[idx][t]) / (double(j[t]) * layer);
    }
  }
  // Edge maxima over admissible (j, t).
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    DegreeTuple up = fp.set.tuples[idx];
    for (std::size_t t = 0; t < N; ++t) {
      if (up[t] + 1 > sizes[t]) continue;
      ++up[t];
      std::size_t to = fp.set.index_of(up);
      --up[t];
      if (to == DegreeIndexSet::npos) continue;
      double half = 0.5 * (fp.gtilde0[idx][t] + fp.gtilde1[to][t]);
      fp.gtilde_max = std::max(fp.gtilde_max, half);
    }
  }
  return fp;
}

void write_failure_profile_csv(std::ostream& out, const FailureProfile& fp) {
  out << "j_tuple,t,gamma,gtilde0,gtilde1\n";
  char buf[64];
  const std::size_t N = fp.set.block_caps.size();
  for (std::size_t idx = 0; idx < fp.set.size(); ++idx) {
    for (std::size_t t = 0; t < N; ++t) {
      std::string key;
      for (std::size_t s = 0; s < N; ++s) {
        if (s) key += '-';
        key += std::to_string(fp.set.tuples[idx][s]);
      }
      DegreeTuple up = fp.set.tuples[idx];
      ++up[t];
      std::size_t to =
          (up[t] <= fp.set.block_caps[t]) ? fp.set.index_of(up) : DegreeIndexSet::npos;
      double g1 = (to != DegreeIndexSet::npos) ? fp.gtilde1[to][t] : 0.0;
      std::snprintf(buf, sizeof buf, "%.12f,%.12f,%.12f", fp.gamma[idx],
                    fp.gtilde0[idx][t], g1);
      out << key << ',' << t << ',' << buf << '\n';
    }
  }
}

std::set<fvec> parse_failure_set(std::istream& in, std::size_t m) {
  std::set<fvec> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    require(line.size() == m, "parse_failure_set: bitstring length mismatch");
    fvec y(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      require(line[i] == '0' || line[i] == '1',
              "parse_failure_set: expected 0/1");
      y[i] = line[i] - '0';
    }
    out.insert(std::move(y));
  }
  return out;
}

void write_failure_set(std::ostream& out, const std::set<fvec>& failures) {
  for (const fvec& y : failures) {
    for (felem v : y) out << (v ? '1' : '0');
    out << '\n';
  }
}

double theorem_bound(const std::vector<double>& w, const SpectralMatrix& A,
                     const FailureProfile& fp, const BlockStructure& blocks) {
  require(A.kappa == 0.0, "theorem_bound: A must have zero diagonal");
  require(fp.gamma_max < 1.0, "theorem_bound: gamma_max must be < 1");
  double quad = rayleigh_quotient(A, w);
  double penalty = 0;
  for (std::size_t t = 0; t < blocks.num_blocks(); ++t)
    penalty += blocks.weights[t] * double(blocks.members[t].size() + 1);
  return quad - 2.0 * (fp.gtilde_max / (1.0 - fp.gamma_max)) * penalty;
}

namespace {

// Incremental row basis over F_p for greedy information-set extension.
class RowBasis {
 public:
  RowBasis(std::uint32_t p, std::size_t n) : f_(p), n_(n) {}
  bool try_add(fvec row) {
    for (auto& [lead, vec] : rows_) {
      if (row[lead] == 0) continue;
      felem factor = row[lead];
      for (std::size_t c = 0; c < n_; ++c)
        row[c] = f_.sub(row[c], f_.mul(factor, vec[c]));
    }
    std::size_t lead = n_;
    for (std::size_t c = 0; c < n_; ++c)
      if (row[c]) {
        lead = c;
        break;
      }
    if (lead == n_) return false;
    felem s = f_.inv(row[lead]);
    for (std::size_t c = 0; c < n_; ++c) row[c] = f_.mul(row[c], s);
    rows_.emplace_back(lead, std::move(row));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, fvec>> rows_;
};

}  // namespace

PrangeReport weighted_prange(const MaxLinsat& inst, std::size_t trials,
                             std::uint64_t seed) {
  const std::size_t n = inst.n();
  require(trials >= 1, "weighted_prange: need at least one trial");
  require(rank(inst.B) == n, "weighted_prange: B must have full column rank");

  // Blocks in weight-descending order, stable on ties.
  std::vector<std::size_t> order(inst.blocks.num_blocks());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.blocks.weights[a] > inst.blocks.weights[b];
  });
  const std::vector<std::size_t>& heavy = inst.blocks.members[order[0]];

  Rng rng(seed);
  PrangeReport rep;
  rep.trials = trials;
  double sum = 0, sumsq = 0;

  auto submatrix = [&](const std::vector<std::size_t>& rows) {
    FieldMatrix S(inst.field.p, rows.size(), n);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t c = 0; c < n; ++c) S.at(k, c) = inst.B.at(rows[k], c);
    return S;
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> chosen;
    if (heavy.size() >= n) {
      for (int attempt = 0; attempt < 50 && chosen.empty(); ++attempt) {
        std::vector<std::size_t> pick = rng.subset(heavy.size(), n);
        std::vector<std::size_t> rows;
        rows.reserve(n);
        for (std::size_t k : pick) rows.push_back(heavy[k]);
        if (rank(submatrix(rows)) == n) chosen = std::move(rows);
      }
    }
    if (chosen.empty()) {
      // Greedy rank-increasing pass, heavy blocks first, random order inside.
      RowBasis basis(inst.field.p, n);
      for (std::size_t t : order) {
        std::vector<std::size_t> perm = inst.blocks.members[t];
        rng.shuffle(perm);
        for (std::size_t i : perm) {
          fvec row(inst.B.row(i), inst.B.row(i) + n);
          if (basis.try_add(row)) chosen.push_back(i);
          if (chosen.size() == n) break;
        }
        if (chosen.size() == n) break;
      }
      require(chosen.size() == n, "weighted_prange: rank deficiency");
    }

    fvec rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& L = inst.targets[chosen[k]];
      rhs[k] = L[rng.below(L.size())];
    }
    auto x = solve_square(submatrix(chosen), rhs);
    require(x.has_value(), "weighted_prange: chosen set not invertible");
    double value = evaluate_objective(inst, *x);
    double ratio = satisfied_ratio(inst, value);
    sum += ratio;
    sumsq += ratio * ratio;
    if (value > rep.best_value) {
      rep.best_value = value;
      rep.best_x = *x;
      rep.best_ratio = ratio;
    }
  }
  rep.mean_ratio = sum / double(trials);
  double var = sumsq / double(trials) - rep.mean_ratio * rep.mean_ratio;
  rep.stddev_ratio = std::sqrt(std::max(0.0, var));
  return rep;
}

}  // namespace mdqi
