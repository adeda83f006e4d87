#include "mdqi/problem.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "mdqi/rng.hpp"

namespace mdqi {

BlockStructure BlockStructure::contiguous(
    const std::vector<std::size_t>& sizes, const std::vector<double>& weights) {
  BlockStructure bs;
  bs.weights = weights;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<std::size_t> block(s);
    for (std::size_t i = 0; i < s; ++i) block[i] = next + i;
    next += s;
    bs.members.push_back(std::move(block));
  }
  bs.block_of.assign(next, 0);
  for (std::size_t t = 0; t < bs.members.size(); ++t)
    for (std::size_t i : bs.members[t]) bs.block_of[i] = t;
  bs.validate(next);
  return bs;
}

BlockStructure BlockStructure::from_assignment(
    const std::vector<std::size_t>& assign, const std::vector<double>& weights) {
  BlockStructure bs;
  bs.weights = weights;
  bs.members.resize(weights.size());
  bs.block_of = assign;
  for (std::size_t i = 0; i < assign.size(); ++i) {
    require(assign[i] < weights.size(), "BlockStructure: bad block id");
    bs.members[assign[i]].push_back(i);
  }
  bs.validate(assign.size());
  return bs;
}

std::size_t BlockStructure::total_rows() const {
  std::size_t m = 0;
  for (const auto& b : members) m += b.size();
  return m;
}

std::vector<std::size_t> BlockStructure::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(members.size());
  for (const auto& b : members) s.push_back(b.size());
  return s;
}

std::vector<double> BlockStructure::densities() const {
  double m = static_cast<double>(total_rows());
  std::vector<double> d;
  d.reserve(members.size());
  for (const auto& b : members) d.push_back(static_cast<double>(b.size()) / m);
  return d;
}

double BlockStructure::weight_mass() const {
  double s = 0;
  for (std::size_t t = 0; t < members.size(); ++t)
    s += weights[t] * static_cast<double>(members[t].size());
  return s;
}

void BlockStructure::validate(std::size_t m) const {
  require(members.size() == weights.size(),
          "BlockStructure: weights/members size mismatch");
  require(!members.empty(), "BlockStructure: no blocks");
  for (double g : weights)
    require(g > 0, "BlockStructure: weights must be positive");
  std::vector<bool> seen(m, false);
  for (const auto& b : members) {
    require(!b.empty(), "BlockStructure: empty block");
    for (std::size_t i : b) {
      require(i < m, "BlockStructure: row index out of range");
      require(!seen[i], "BlockStructure: overlapping blocks");
      seen[i] = true;
    }
  }
  for (bool s : seen) require(s, "BlockStructure: rows not covered");
  require(block_of.size() == m, "BlockStructure: block_of size mismatch");
}

bool MaxLinsat::satisfies(std::size_t i, felem y) const {
  const auto& L = targets[i];
  return std::binary_search(L.begin(), L.end(), y);
}

void MaxLinsat::validate() const {
  require(B.p == field.p, "MaxLinsat: field mismatch");
  require(targets.size() == B.rows, "MaxLinsat: one target set per row");
  require(r >= 1 && r <= field.p - 1, "MaxLinsat: need 1 <= r <= p-1");
  for (const auto& L : targets) {
    require(L.size() == r, "MaxLinsat: |L_i| != r");
    require(std::is_sorted(L.begin(), L.end()), "MaxLinsat: L_i not sorted");
    for (std::size_t k = 0; k + 1 < L.size(); ++k)
      require(L[k] != L[k + 1], "MaxLinsat: duplicate target value");
    for (felem v : L) require(v < field.p, "MaxLinsat: target out of range");
  }
  blocks.validate(B.rows);
}

double evaluate_objective(const MaxLinsat& inst, const fvec& x) {
  fvec bx = matvec(inst.B, x);
  double acc = 0;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    double g = inst.blocks.weights[inst.blocks.block_of[i]];
    acc += inst.satisfies(i, bx[i]) ? g : -g;
  }
  return acc;
}

BruteForceResult brute_force_optimum(const MaxLinsat& inst, std::size_t cap) {
  const std::uint32_t p = inst.field.p;
  const std::size_t n = inst.n();
  double dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= p;
  if (dim > static_cast<double>(cap))
    throw cap_exceeded("brute_force_optimum: p^n exceeds cap");

  // Per-row satisfaction lookup keyed by value of b_i . x.
  std::vector<std::vector<double>> gain(inst.m(), std::vector<double>(p));
  for (std::size_t i = 0; i < inst.m(); ++i) {
    double g = inst.blocks.weights[inst.blocks.block_of[i]];
    for (felem y = 0; y < p; ++y) gain[i][y] = inst.satisfies(i, y) ? g : -g;
  }

  BruteForceResult best;
  best.value = -1e300;
  fvec x(n, 0);
  fvec bx(inst.m(), 0);
  // Lexicographic odometer with x[n-1] fastest; strict improvement means the
  // first maximizer found is the lexicographically smallest. Each single-digit
  // increment shifts bx by the matching column of B (wrap included: the p
  // increments of a full cycle cancel mod p).
  for (bool done = false; !done;) {
    double v = 0;
    for (std::size_t i = 0; i < inst.m(); ++i) v += gain[i][bx[i]];
    if (v > best.value) {
      best.value = v;
      best.argmax = x;
    }
    std::size_t k = n;
    for (;;) {
      if (k == 0) {
        done = true;
        break;
      }
      --k;
      ++x[k];
      for (std::size_t i = 0; i < inst.m(); ++i)
        bx[i] = static_cast<felem>((bx[i] + inst.B.at(i, k)) % p);
      if (x[k] < p) break;
      x[k] = 0;
    }
  }
  return best;
}

double satisfied_ratio(const MaxLinsat& inst, double objective) {
  double mass = inst.blocks.weight_mass();
  return (objective + mass) / (2.0 * mass);
}

CenteredStats centered_stats(const MaxLinsat& inst) {
  const double p = static_cast<double>(inst.field.p);
  const double r = static_cast<double>(inst.r);
  CenteredStats st;
  st.fbar = 2.0 * r / p - 1.0;
  st.phi = std::sqrt(4.0 * r * (1.0 - r / p));
  st.kappa = (p - 2.0 * r) / std::sqrt(r * (p - r));
  st.fourier.resize(inst.m());
  const double tau = 2.0 * M_PI / p;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    auto& row = st.fourier[i];
    row.assign(inst.field.p, {0.0, 0.0});
    for (std::uint32_t a = 1; a < inst.field.p; ++a) {
      std::complex<double> acc = 0;
      for (std::uint32_t y = 0; y < inst.field.p; ++y) {
        double f = inst.satisfies(i, y) ? 1.0 : -1.0;
        double chi = (f - st.fbar) / st.phi;
        acc += std::polar(chi, tau * a * y);
      }
      row[a] = acc / std::sqrt(p);
    }
  }
  return st;
}

MaxLinsat random_instance(std::uint32_t p, std::size_t n,
                          const std::vector<std::size_t>& block_sizes,
                          const std::vector<double>& weights, std::uint32_t r,
                          std::uint64_t seed) {
  PrimeField field(p);
  require(r >= 1 && r <= p - 1, "random_instance: need 1 <= r <= p-1");
  std::size_t m = 0;
  for (std::size_t s : block_sizes) m += s;
  require(m > 0 && n > 0, "random_instance: empty shape");

  Rng rng(seed);
  FieldMatrix B(p, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    // Resample all-zero rows: a vacuous constraint forces dual distance 1.
    for (;;) {
      bool nonzero = false;
      for (std::size_t c = 0; c < n; ++c) {
        B.at(i, c) = static_cast<felem>(rng.below(p));
        nonzero |= (B.at(i, c) != 0);
      }
      if (nonzero) break;
    }
  }
  std::vector<std::vector<felem>> targets(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> pick = rng.subset(p, r);
    for (std::size_t v : pick) targets[i].push_back(static_cast<felem>(v));
  }

  MaxLinsat inst{field, std::move(B), std::move(targets), r,
                 BlockStructure::contiguous(block_sizes, weights)};
  inst.validate();
  return inst;
}

MaxLinsat parse_instance(std::istream& in) {
  std::uint32_t p, r;
  std::size_t n, m, N;
  in >> p >> n >> m >> N >> r;
  require(static_cast<bool>(in), "parse_instance: bad header");
  std::vector<double> weights(N);
  for (auto& w : weights) in >> w;
  std::vector<std::size_t> assign(m);
  for (auto& a : assign) in >> a;
  require(static_cast<bool>(in), "parse_instance: truncated block data");
  PrimeField field(p);
  FieldMatrix B(p, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t v;
      in >> v;
      require(static_cast<bool>(in) && v >= 0 && v < p,
              "parse_instance: bad matrix entry");
      B.at(i, c) = static_cast<felem>(v);
    }
  std::vector<std::vector<felem>> targets(m);
  for (std::size_t i = 0; i < m; ++i) {
    targets[i].resize(r);
    for (auto& v : targets[i]) {
      std::int64_t t;
      in >> t;
      require(static_cast<bool>(in) && t >= 0 && t < p,
              "parse_instance: bad target value");
      v = static_cast<felem>(t);
    }
    std::sort(targets[i].begin(), targets[i].end());
  }
  MaxLinsat inst{field, std::move(B), std::move(targets), r,
                 BlockStructure::from_assignment(assign, weights)};
  inst.validate();
  return inst;
}

void write_instance(std::ostream& out, const MaxLinsat& inst) {
  out << inst.field.p << ' ' << inst.n() << ' ' << inst.m() << ' '
      << inst.blocks.num_blocks() << ' ' << inst.r << '\n';
  out.precision(17);
  for (std::size_t t = 0; t < inst.blocks.num_blocks(); ++t)
    out << inst.blocks.weights[t]
        << (t + 1 == inst.blocks.num_blocks() ? '\n' : ' ');
  for (std::size_t i = 0; i < inst.m(); ++i)
    out << inst.blocks.block_of[i] << (i + 1 == inst.m() ? '\n' : ' ');
  for (std::size_t i = 0; i < inst.m(); ++i)
    for (std::size_t c = 0; c < inst.n(); ++c)
      out << inst.B.at(i, c) << (c + 1 == inst.n() ? '\n' : ' ');
  for (std::size_t i = 0; i < inst.m(); ++i)
    for (std::size_t k = 0; k < inst.targets[i].size(); ++k)
      out << inst.targets[i][k]
          << (k + 1 == inst.targets[i].size() ? '\n' : ' ');
}

}  // namespace mdqi
