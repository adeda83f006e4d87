// multidqi: experiment runner for the block-weighted DQI library. Every run
// writes a manifest plus CSV/plot artifacts into the output directory; the
// same seed and config reproduce byte-identical files.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mdqi/asymptotics.hpp"
#include "mdqi/hamdqi.hpp"
#include "mdqi/opi.hpp"
#include "mdqi/simulator.hpp"

namespace fs = std::filesystem;
using namespace mdqi;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fm(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string join(const std::vector<double>& v, char sep = '|') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += fm(v[i]);
  }
  return out;
}

std::string join_sz(const std::vector<std::size_t>& v, char sep = '|') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0 || stop < start)
    throw invariant_violation("grid must be start:stop:step with step > 0");
  const std::size_t count =
      static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + i * step;
  return out;
}

std::vector<double> logspace(double lo_exp, double hi_exp, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (count - 1));
  return out;
}

// Collects resolved parameters and written files, then lands in manifest.txt.
class RunContext {
 public:
  RunContext(std::string out_dir, std::string subcommand)
      : dir_(std::move(out_dir)) {
    fs::create_directories(dir_);
    add("tool", "multidqi");
    add("version", kVersion);
    add("subcommand", subcommand);
  }

  void add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
  }
  void add(const std::string& key, double value) { add(key, fm(value)); }
  void add(const std::string& key, std::size_t value) {
    add(key, std::to_string(value));
  }

  std::ofstream open_csv(const std::string& name, const std::string& header) {
    std::ofstream out(path(name));
    if (!out) throw invariant_violation("cannot open " + name + " for writing");
    out << header << '\n';
    files_.push_back(name);
    return out;
  }

  std::ofstream open_file(const std::string& name) {
    std::ofstream out(path(name));
    if (!out) throw invariant_violation("cannot open " + name + " for writing");
    files_.push_back(name);
    return out;
  }

  std::string path(const std::string& name) const {
    return (fs::path(dir_) / name).string();
  }

  ~RunContext() {
    std::ofstream man(path("manifest.txt"));
    for (const auto& [k, v] : entries_) man << k << '=' << v << '\n';
    std::string artifacts;
    for (std::size_t i = 0; i < files_.size(); ++i) {
      if (i) artifacts += ',';
      artifacts += files_[i];
    }
    man << "artifacts=" << artifacts << '\n';
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> files_;
};

void emit_filtered_plot(RunContext& ctx, const std::string& script,
                        const std::string& csv, const std::string& xlabel,
                        const std::string& ylabel,
                        const std::vector<double>& keys, int xcol,
                        const std::vector<int>& ycols,
                        const std::vector<std::string>& ylabels,
                        bool logx) {
  auto out = ctx.open_file(script);
  out << "set datafile separator ','\n";
  out << "set key left top\n";
  if (logx) out << "set logscale x\n";
  out << "set xlabel '" << xlabel << "'\nset ylabel '" << ylabel << "'\n";
  out << "plot ";
  bool first = true;
  for (double key : keys)
    for (std::size_t yi = 0; yi < ycols.size(); ++yi) {
      if (!first) out << ", \\\n     ";
      first = false;
      out << "'" << csv << "' using (abs($1-" << fm(key) << ")<1e-9?$" << xcol
          << ":NaN):" << ycols[yi] << " with lines title '" << ylabels[yi]
          << " " << fm(key) << "'";
    }
  out << '\n';
}

double weighted_total(const std::vector<double>& g,
                      const std::vector<double>& theta) {
  double s = 0;
  for (std::size_t t = 0; t < g.size(); ++t) s += g[t] * theta[t];
  return s;
}

struct CommonOpts {
  std::string out = "multidqi_out";
  std::uint64_t seed = 0;
  std::size_t cap = kEnumCap;
  bool strict = false;
};

// ---------------------------------------------------------------- gamma ----

void run_gamma(const CommonOpts& c, const std::vector<double>& g,
               const std::vector<double>& theta, double kappa,
               const std::string& mu_grid, const std::vector<double>& mu_list) {
  RunContext ctx(c.out, "gamma");
  std::vector<double> mus = mu_list;
  if (!mu_grid.empty()) mus = parse_grid(mu_grid);
  if (mus.empty()) throw invariant_violation("no mu values requested");
  ctx.add("g", join(g));
  ctx.add("theta", join(theta));
  ctx.add("kappa", kappa);
  ctx.add("mu_count", mus.size());
  auto csv = ctx.open_csv("gamma.csv", "g,theta,kappa,mu,gamma,normalized");
  const double total = 2.0 * weighted_total(g, theta);
  for (double mu : mus) {
    const auto sol = gamma_functional(g, theta, kappa, mu);
    csv << join(g) << ',' << join(theta) << ',' << fm(kappa) << ',' << fm(mu)
        << ',' << fm(sol.value) << ',' << fm(sol.value / total) << '\n';
  }
  std::cout << "wrote gamma.csv with " << mus.size() << " rows\n";
}

// -------------------------------------------------------------- regimes ----

void run_regimes(const CommonOpts& c, double g,
                 const std::vector<double>& theta, double kappa, double mu,
                 double m_total) {
  RunContext ctx(c.out, "regimes");
  const auto rep = two_block_regimes(g, theta, kappa, mu, m_total);
  const char* label = rep.label == Regime::Weak
                          ? "weak"
                          : (rep.label == Regime::Strong ? "strong"
                                                         : "crossover");
  ctx.add("g", g);
  ctx.add("theta", join(theta));
  ctx.add("kappa", kappa);
  ctx.add("mu", mu);
  ctx.add("m", m_total);
  ctx.add("label", label);
  ctx.add("ratio", rep.ratio);
  ctx.add("leading", rep.leading_value);
  ctx.add("delta_m", rep.delta_m);
  auto csv = ctx.open_csv("regimes.csv",
                          "g,theta,kappa,mu,m,label,ratio,leading,delta_m");
  csv << fm(g) << ',' << join(theta) << ',' << fm(kappa) << ',' << fm(mu)
      << ',' << fm(m_total) << ',' << label << ',' << fm(rep.ratio) << ','
      << fm(rep.leading_value) << ',' << fm(rep.delta_m) << '\n';
  std::cout << "regime " << label << " (ratio " << fm(rep.ratio)
            << ", leading " << fm(rep.leading_value) << ")\n";
}

// ------------------------------------------------------------- spectrum ----

void run_spectrum(const CommonOpts& c, std::uint32_t p, std::size_t n,
                  const std::vector<std::size_t>& sizes,
                  const std::vector<double>& weights, std::uint32_t r,
                  std::size_t l) {
  RunContext ctx(c.out, "spectrum");
  const auto inst = random_instance(p, n, sizes, weights, r, c.seed);
  const auto stats = centered_stats(inst);
  const auto set = enumerate_degree_tuples(sizes, l);
  const auto A = build_matrix(inst.blocks, set, stats.kappa);
  const auto top = lambda_max(A);
  const auto ansatz = product_ansatz(inst.blocks, l, stats.kappa);
  const auto w = ansatz.to_vector(set);
  const double rayleigh = rayleigh_quotient(A, w);
  const double cw =
      collatz_wielandt_bound(inst.blocks, set, stats.kappa,
                             std::vector<double>(sizes.size(), 1.0));
  ctx.add("p", static_cast<std::size_t>(p));
  ctx.add("n", n);
  ctx.add("sizes", join_sz(sizes));
  ctx.add("weights", join(weights));
  ctx.add("r", static_cast<std::size_t>(r));
  ctx.add("l", l);
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("kappa", stats.kappa);
  ctx.add("dim", A.dim);
  ctx.add("nnz", A.nnz());
  ctx.add("lambda_max", top.value);
  ctx.add("rayleigh_ansatz", rayleigh);
  ctx.add("collatz_wielandt", cw);
  {
    auto mat = ctx.open_file("spectral.txt");
    write_spectral(mat, A);
  }
  const double expected = expected_value(inst, set, top.vec, c.strict);
  ctx.add("expected_value", expected);
  auto csv = ctx.open_csv("spectrum.csv",
                          "dim,nnz,lambda_max,rayleigh_ansatz,cw_bound,expected");
  csv << A.dim << ',' << A.nnz() << ',' << fm(top.value) << ',' << fm(rayleigh)
      << ',' << fm(cw) << ',' << fm(expected) << '\n';
  std::cout << "lambda_max " << fm(top.value) << " on dim " << A.dim
            << " (rayleigh " << fm(rayleigh) << ", bound " << fm(cw) << ")\n";
}

// ------------------------------------------------------------- simulate ----

void run_cross_check(const CommonOpts& c, std::uint32_t p, std::size_t n,
                     std::size_t m, std::size_t l,
                     std::vector<std::size_t> sizes,
                     std::vector<double> weights, std::uint32_t r,
                     bool dump_state) {
  RunContext ctx(c.out, "simulate cross-check");
  if (sizes.empty()) sizes = {m - m / 2, m / 2};
  if (weights.empty()) weights = std::vector<double>(sizes.size(), 1.0);
  if (r == 0) r = p == 2 ? 1 : p / 2;
  const auto inst = random_instance(p, n, sizes, weights, r, c.seed);
  const auto stats = centered_stats(inst);
  const auto set = enumerate_degree_tuples(inst.blocks.sizes(), l);
  const auto w = product_ansatz(inst.blocks, l, stats.kappa).to_vector(set);

  const auto direct = dqi_state_direct(inst, set, w);
  auto fourier = fourier_construction(inst, set, w, DecoderModel::perfect(),
                                      c.cap);
  const double fnorm = fourier.norm_sq();
  StateVector aligned = fourier;
  aligned.normalize();
  const double dev = phase_aligned_distance(direct, aligned);
  const double exact = exact_expectation(inst, fourier) / fnorm;
  const double expected = expected_value(inst, set, w, c.strict);

  ctx.add("p", static_cast<std::size_t>(p));
  ctx.add("n", n);
  ctx.add("sizes", join_sz(inst.blocks.sizes()));
  ctx.add("weights", join(weights));
  ctx.add("r", static_cast<std::size_t>(r));
  ctx.add("l", l);
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("two_path_deviation", dev);
  ctx.add("fourier_norm_sq", fnorm);
  ctx.add("exact_expectation", exact);
  ctx.add("spectral_expected", expected);
  auto csv = ctx.open_csv(
      "simulate.csv", "p,n,m,l,seed,deviation,norm_sq,exact,expected");
  csv << p << ',' << n << ',' << inst.m() << ',' << l << ',' << c.seed << ','
      << fm(dev) << ',' << fm(fnorm) << ',' << fm(exact) << ',' << fm(expected)
      << '\n';
  if (dump_state) {
    auto st = ctx.open_file("state.txt");
    write_state(st, fourier);
  }
  std::cout << "two-path deviation " << fm(dev) << ", exact " << fm(exact)
            << " vs expected " << fm(expected) << '\n';
}

// -------------------------------------------------------- concentration ----

void run_concentration(const CommonOpts& c, const std::vector<std::size_t>& sizes,
                       const std::vector<double>& weights, std::size_t n,
                       const std::vector<std::size_t>& J,
                       const std::vector<std::size_t>& r, double eps) {
  RunContext ctx(c.out, "concentration");
  const auto inst = random_instance(2, n, sizes, weights, 1, c.seed);
  const auto rep = concentration_experiment(inst, J, r, eps);
  ctx.add("sizes", join_sz(sizes));
  ctx.add("weights", join(weights));
  ctx.add("n", n);
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("J", join_sz(J));
  ctx.add("r", join_sz(r));
  ctx.add("eps", eps);
  ctx.add("mass", rep.mass);
  ctx.add("band_size", rep.band_size);
  ctx.add("mean_ratio", rep.mean_ratio);
  ctx.add("predicted", rep.predicted);
  auto csv = ctx.open_csv(
      "concentration.csv",
      "m,n,eps,mass,band_size,mean_ratio,predicted,alpha,beta");
  csv << inst.m() << ',' << n << ',' << fm(eps) << ',' << fm(rep.mass) << ','
      << rep.band_size << ',' << fm(rep.mean_ratio) << ',' << fm(rep.predicted)
      << ',' << join(rep.alpha) << ',' << join(rep.beta) << '\n';
  std::cout << "band mass " << fm(rep.mass) << ", mean ratio "
            << fm(rep.mean_ratio) << " vs predicted " << fm(rep.predicted)
            << '\n';
}

// --------------------------------------------------------------- decode ----

void run_rs_check(const CommonOpts& c, std::uint32_t p, std::size_t n,
                  std::size_t radius, std::size_t bdd_samples) {
  RunContext ctx(c.out, "decode rs-check");
  const RsCode code{p, n, primitive_root(p)};
  const RsDecoder dec(code);
  const std::size_t m = p - 1;
  if (radius == 0) radius = (n - 1) / 2;
  const FieldMatrix B = vandermonde_matrix(p, n);

  std::size_t total = 0, failures = 0, bdd_checked = 0, bdd_mismatch = 0;
  std::vector<felem> synd(n), err(m);
  fvec y(m, 0);
  // Exhaustive sweep over supports and values of weight <= radius.
  std::vector<std::size_t> supp(radius);
  const std::function<void(std::size_t, std::size_t)> walk =
      [&](std::size_t depth, std::size_t next) {
        if (depth > 0) {
          fvec vals(depth, 1);
          for (;;) {
            std::fill(y.begin(), y.end(), 0);
            for (std::size_t k = 0; k < depth; ++k) y[supp[k]] = vals[k];
            ++total;
            const fvec s = syndrome(B, y);
            for (std::size_t j = 0; j < n; ++j) synd[j] = s[j];
            bool ok = dec.decode_into(synd.data(), radius, err.data());
            if (ok)
              for (std::size_t i = 0; i < m && ok; ++i) ok = err[i] == y[i];
            if (!ok) ++failures;
            if (bdd_checked < bdd_samples) {
              ++bdd_checked;
              const auto alt = bdd_decode(B, s, radius, c.cap);
              if (!alt.has_value() || *alt != y) ++bdd_mismatch;
            }
            std::size_t pos = depth;
            while (pos > 0) {
              if (++vals[pos - 1] < p) break;
              vals[pos - 1] = 1;
              --pos;
            }
            if (pos == 0) break;
          }
        } else {
          ++total;  // the zero error vector
          const fvec s = syndrome(B, y);
          for (std::size_t j = 0; j < n; ++j) synd[j] = s[j];
          bool ok = dec.decode_into(synd.data(), radius, err.data());
          if (ok)
            for (std::size_t i = 0; i < m && ok; ++i) ok = err[i] == 0;
          if (!ok) ++failures;
        }
        if (depth == radius) return;
        for (std::size_t i = next; i < m; ++i) {
          supp[depth] = i;
          walk(depth + 1, i + 1);
        }
      };
  std::fill(y.begin(), y.end(), 0);
  walk(0, 0);

  ctx.add("p", static_cast<std::size_t>(p));
  ctx.add("n", n);
  ctx.add("radius", radius);
  ctx.add("errors_total", total);
  ctx.add("failures", failures);
  ctx.add("bdd_checked", bdd_checked);
  ctx.add("bdd_mismatch", bdd_mismatch);
  auto csv = ctx.open_csv("decode.csv",
                          "p,n,radius,errors_total,failures,bdd_checked,bdd_mismatch");
  csv << p << ',' << n << ',' << radius << ',' << total << ',' << failures
      << ',' << bdd_checked << ',' << bdd_mismatch << '\n';
  std::cout << "decoded " << total << " errors, " << failures << " failures, "
            << bdd_mismatch << " cross-decoder mismatches\n";
  require(failures == 0 && bdd_mismatch == 0, "decoder sweep failed");
}

// ------------------------------------------------------------------ opi ----

void write_opi_curves(RunContext& ctx, const std::string& name,
                      const std::vector<double>& gs,
                      const std::vector<double>& xs) {
  auto csv = ctx.open_csv(name, "g,x,r_dqi,r_prange");
  for (double g : gs)
    for (const auto& pt : opi_curve(g, xs))
      csv << fm(g) << ',' << fm(pt.x) << ',' << fm(pt.dqi) << ','
          << fm(pt.prange) << '\n';
}

void run_opi_dominance(const CommonOpts& c, const std::vector<double>& gs,
                       const std::string& x_grid, bool with_verdict) {
  RunContext ctx(c.out, with_verdict ? "opi dominance" : "opi curves");
  const auto xs = parse_grid(x_grid);
  ctx.add("g", join(gs));
  ctx.add("x_grid", x_grid);
  write_opi_curves(ctx, "opi.csv", gs, xs);
  if (!with_verdict) {
    std::cout << "wrote opi.csv with " << gs.size() * xs.size() << " rows\n";
    return;
  }
  const auto res = dominance_scan(gs, xs);
  ctx.add("min_margin", res.min_margin);
  ctx.add("arg_g", res.arg_g);
  ctx.add("arg_x", res.arg_x);
  ctx.add("verdict", res.dominated ? "PASS" : "FAIL");
  std::cout << (res.dominated ? "PASS" : "FAIL") << ": min margin "
            << fm(res.min_margin) << " at g=" << fm(res.arg_g)
            << ", x=" << fm(res.arg_x) << '\n';
  require(res.dominated, "dominance violated on the requested grid");
}

void run_opi_end_to_end(const CommonOpts& c, std::uint32_t p, std::size_t n,
                        double g, std::size_t trials) {
  RunContext ctx(c.out, "opi end-to-end");
  const auto rep = end_to_end_small(p, n, g, trials, c.seed);
  ctx.add("p", static_cast<std::size_t>(p));
  ctx.add("n", n);
  ctx.add("g", g);
  ctx.add("trials", trials);
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("l", rep.l);
  ctx.add("lambda_max", rep.lambda);
  ctx.add("expected", rep.expected);
  ctx.add("exact", rep.exact);
  ctx.add("state_norm_sq", rep.state_norm);
  ctx.add("dqi_ratio", rep.dqi_ratio);
  ctx.add("prange_mean_ratio", rep.prange_mean_ratio);
  ctx.add("prange_best_ratio", rep.prange_best_ratio);
  auto csv = ctx.open_csv(
      "opi_end_to_end.csv",
      "p,n,g,l,lambda,expected,exact,dqi_ratio,prange_mean,prange_best");
  csv << p << ',' << n << ',' << fm(g) << ',' << rep.l << ',' << fm(rep.lambda)
      << ',' << fm(rep.expected) << ',' << fm(rep.exact) << ','
      << fm(rep.dqi_ratio) << ',' << fm(rep.prange_mean_ratio) << ','
      << fm(rep.prange_best_ratio) << '\n';
  std::cout << "dqi ratio " << fm(rep.dqi_ratio) << " vs prange mean "
            << fm(rep.prange_mean_ratio) << " (best "
            << fm(rep.prange_best_ratio) << ")\n";
}

// --------------------------------------------------------------- hamdqi ----

BlockHamiltonian load_or_build_ham(const CommonOpts& c, const std::string& file,
                                   std::size_t n,
                                   const std::vector<std::size_t>& sizes,
                                   const std::vector<double>& weights) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw invariant_violation("cannot open " + file);
    return parse_hamiltonian(in);
  }
  return random_commuting_hamiltonian(n, sizes, weights, c.seed);
}

void run_hamdqi_check(const CommonOpts& c, const std::string& file,
                      std::size_t n, const std::vector<std::size_t>& sizes,
                      const std::vector<double>& weights,
                      const std::vector<double>& pcoef) {
  RunContext ctx(c.out, "hamdqi check");
  const auto ham = load_or_build_ham(c, file, n, sizes, weights);
  {
    auto hf = ctx.open_file("hamiltonian.txt");
    write_hamiltonian(hf, ham);
  }
  if (const auto bad = commutation_check(ham))
    throw invariant_violation("terms " + std::to_string(bad->first) + " and " +
                              std::to_string(bad->second) + " do not commute");
  const auto hc = ham_coefficients(ham, pcoef);
  std::vector<BigRat> pexact;
  for (double v : pcoef) pexact.push_back(rational_from_double(v));
  const auto exact = ham_coefficients_exact(ham, pexact);
  const auto multi = ham_coefficients_multinomial(ham, pexact);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < exact.r.size(); ++i)
    if (exact.r[i] != multi.r[i]) ++mismatches;
  const auto prot = protocol_simulation(ham, pcoef);

  ctx.add("n", ham.n);
  ctx.add("sizes", join_sz(ham.sizes()));
  ctx.add("weights", join(ham.weights));
  ctx.add("pcoef", join(pcoef));
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("route_mismatches", mismatches);
  ctx.add("norm", prot.norm);
  ctx.add("state_norm_sq", prot.state_norm);
  ctx.add("trace_distance", prot.trace_dist);
  ctx.add("support", prot.support);
  ctx.add("decode_round_trips", prot.decode_round_trips);
  auto csv = ctx.open_csv("ham_coefficients.csv", "j,r,gamma");
  for (std::size_t i = 0; i < hc.set.size(); ++i) {
    std::string j;
    for (std::size_t t = 0; t < hc.set.tuples[i].size(); ++t) {
      if (t) j += '-';
      j += std::to_string(hc.set.tuples[i][t]);
    }
    csv << j << ',' << fm(hc.r[i]) << ',' << fm(hc.gamma[i]) << '\n';
  }
  std::cout << "coefficient routes agree on " << exact.r.size() - mismatches
            << "/" << exact.r.size() << " entries; protocol trace distance "
            << fm(prot.trace_dist) << '\n';
  require(mismatches == 0, "exact coefficient routes disagree");
}

void run_hamdqi_gibbs(const CommonOpts& c, const std::string& file,
                      std::size_t n, const std::vector<std::size_t>& sizes,
                      const std::vector<double>& weights, double beta,
                      double delta) {
  RunContext ctx(c.out, "hamdqi gibbs");
  const auto ham = load_or_build_ham(c, file, n, sizes, weights);
  const auto rep = gibbs_distance(ham, beta, delta);
  ctx.add("n", ham.n);
  ctx.add("sizes", join_sz(ham.sizes()));
  ctx.add("weights", join(ham.weights));
  ctx.add("seed", static_cast<std::size_t>(c.seed));
  ctx.add("beta", beta);
  ctx.add("delta", delta);
  ctx.add("h_norm", rep.h_norm);
  ctx.add("degree", rep.degree);
  ctx.add("distance", rep.distance);
  auto csv = ctx.open_csv("gibbs.csv", "beta,delta,h_norm,degree,distance");
  csv << fm(beta) << ',' << fm(delta) << ',' << fm(rep.h_norm) << ','
      << rep.degree << ',' << fm(rep.distance) << '\n';
  std::cout << "gibbs distance " << fm(rep.distance) << " at degree "
            << rep.degree << " (bound " << fm(delta) << ")\n";
}

// ------------------------------------------------------------- figures -----

void run_figure(const CommonOpts& c, int figure) {
  RunContext ctx(c.out, "reproduce-figure");
  ctx.add("figure", static_cast<std::size_t>(figure));
  const std::vector<double> mus = {0.5, 0.25, 0.125, 0.01};
  switch (figure) {
    case 1:
    case 2: {
      const auto gs = logspace(-2.0, 2.0, 201);
      const std::string name = figure == 1 ? "fig1.csv" : "fig2.csv";
      auto csv = ctx.open_csv(name, figure == 1 ? "mu,g,gamma" : "mu,g,f");
      for (double mu : mus)
        for (double g : gs) {
          const double val = gamma_functional({1.0, g}, {0.5, 0.5}, 0.0, mu).value;
          csv << fm(mu) << ',' << fm(g) << ','
              << fm(figure == 1 ? val : val / (1.0 + g)) << '\n';
        }
      emit_filtered_plot(ctx, figure == 1 ? "fig1.gp" : "fig2.gp", name, "g",
                         figure == 1 ? "Gamma" : "F_mu(g)", mus, 2, {3},
                         {"mu ="}, true);
      break;
    }
    case 3: {
      const std::vector<double> gs = {2, 3, 5, 8};
      auto csv = ctx.open_csv("fig3.csv", "g,mu,multi,uni");
      std::vector<double> grid;
      for (double mu = 0.005; mu <= 0.495 + 1e-12; mu += 0.005)
        grid.push_back(mu);
      for (double g : gs)
        for (const auto& pt : multivariate_vs_univariate_curve(g, grid))
          csv << fm(g) << ',' << fm(pt.mu) << ',' << fm(pt.multi) << ','
              << fm(pt.uni) << '\n';
      emit_filtered_plot(ctx, "fig3.gp", "fig3.csv", "mu", "value per m", gs,
                         2, {3, 4}, {"multi g =", "uni g ="}, false);
      break;
    }
    case 4:
    case 5: {
      const std::vector<double> gs = figure == 4
                                         ? std::vector<double>{1.5, 2, 3, 10}
                                         : std::vector<double>{0.5, 0.25, 0.125, 0.1};
      const auto xs = parse_grid("0.01:0.99:0.01");
      const std::string name = figure == 4 ? "fig4.csv" : "fig5.csv";
      write_opi_curves(ctx, name, gs, xs);
      emit_filtered_plot(ctx, figure == 4 ? "fig4.gp" : "fig5.gp", name, "x",
                         "satisfied ratio", gs, 2, {3, 4},
                         {"DQI g =", "Prange g ="}, false);
      break;
    }
    default:
      throw invariant_violation("figure must be between 1 and 5");
  }
  std::cout << "wrote figure " << figure << " data\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-weighted DQI workbench (MULTIDQI_THREADS caps workers)"};
  app.require_subcommand(1);
  app.set_config("--config");

  CommonOpts com;
  app.add_option("--out", com.out, "output directory");
  app.add_option("--seed", com.seed, "RNG seed");
  app.add_option("--cap", com.cap, "enumeration cap");
  app.add_flag("--strict-distance", com.strict,
               "enforce the dual-distance hypotheses");

  // gamma
  std::vector<double> g_list{1.0, 2.0}, theta_list{0.5, 0.5}, mu_list;
  double kappa = 0.0;
  std::string mu_grid;
  auto* sc_gamma = app.add_subcommand("gamma", "asymptotic objective values");
  sc_gamma->add_option("--g", g_list, "block weights");
  sc_gamma->add_option("--theta", theta_list, "block densities");
  sc_gamma->add_option("--kappa", kappa, "field skew parameter");
  sc_gamma->add_option("--mu-grid", mu_grid, "start:stop:step");
  sc_gamma->add_option("--mu", mu_list, "explicit mu values");
  sc_gamma->callback([&] {
    run_gamma(com, g_list, theta_list, kappa, mu_grid, mu_list);
  });

  // regimes
  double rg_g = 2.0, rg_mu = 0.25, rg_m = 1000.0;
  std::vector<double> rg_theta{0.5, 0.5};
  double rg_kappa = 0.0;
  auto* sc_reg = app.add_subcommand("regimes", "two-block scaling regimes");
  sc_reg->add_option("--g", rg_g, "second block weight");
  sc_reg->add_option("--theta", rg_theta, "densities");
  sc_reg->add_option("--kappa", rg_kappa, "field skew parameter");
  sc_reg->add_option("--mu", rg_mu, "error budget fraction");
  sc_reg->add_option("--m", rg_m, "total constraint count");
  sc_reg->callback(
      [&] { run_regimes(com, rg_g, rg_theta, rg_kappa, rg_mu, rg_m); });

  // spectrum
  std::uint32_t sp_p = 2, sp_r = 1;
  std::size_t sp_n = 10, sp_l = 3;
  std::vector<std::size_t> sp_sizes{8, 8};
  std::vector<double> sp_weights{1.0, 2.0};
  auto* sc_spec = app.add_subcommand("spectrum", "block-degree operator");
  sc_spec->add_option("--p", sp_p, "field order");
  sc_spec->add_option("--n", sp_n, "variable count");
  sc_spec->add_option("--sizes", sp_sizes, "block sizes");
  sc_spec->add_option("--weights", sp_weights, "block weights");
  sc_spec->add_option("--r", sp_r, "target set size");
  sc_spec->add_option("--l", sp_l, "degree budget");
  sc_spec->callback(
      [&] { run_spectrum(com, sp_p, sp_n, sp_sizes, sp_weights, sp_r, sp_l); });

  // simulate cross-check
  std::uint32_t cc_p = 2, cc_r = 0;
  std::size_t cc_n = 8, cc_m = 12, cc_l = 2;
  std::vector<std::size_t> cc_sizes;
  std::vector<double> cc_weights;
  bool cc_dump = false;
  auto* sc_sim = app.add_subcommand("simulate", "state-vector simulation");
  sc_sim->require_subcommand(1);
  auto* sc_cc = sc_sim->add_subcommand("cross-check",
                                       "direct vs Fourier-route state");
  sc_cc->add_option("--p", cc_p, "field order");
  sc_cc->add_option("--n", cc_n, "variable count");
  sc_cc->add_option("--m", cc_m, "total constraints");
  sc_cc->add_option("--l", cc_l, "degree budget");
  sc_cc->add_option("--sizes", cc_sizes, "explicit block sizes");
  sc_cc->add_option("--weights", cc_weights, "block weights");
  sc_cc->add_option("--r", cc_r, "target set size (0 = default)");
  sc_cc->add_flag("--dump-state", cc_dump, "write state.txt");
  sc_cc->callback([&] {
    run_cross_check(com, cc_p, cc_n, cc_m, cc_l, cc_sizes, cc_weights, cc_r,
                    cc_dump);
  });

  // concentration
  std::vector<std::size_t> co_sizes{10, 6}, co_J{2, 2}, co_r{2, 2};
  std::vector<double> co_weights{1.0, 2.0};
  std::size_t co_n = 10;
  double co_eps = 0.15;
  auto* sc_con = app.add_subcommand("concentration", "rectangle-state bands");
  sc_con->add_option("--sizes", co_sizes, "block sizes");
  sc_con->add_option("--weights", co_weights, "block weights");
  sc_con->add_option("--n", co_n, "variable count");
  sc_con->add_option("--J", co_J, "window base per block");
  sc_con->add_option("--r", co_r, "window width parameter per block");
  sc_con->add_option("--eps", co_eps, "band half-width");
  sc_con->callback([&] {
    run_concentration(com, co_sizes, co_weights, co_n, co_J, co_r, co_eps);
  });

  // decode rs-check
  std::uint32_t de_p = 7;
  std::size_t de_n = 4, de_radius = 0, de_bdd = 200;
  auto* sc_dec = app.add_subcommand("decode", "syndrome decoders");
  sc_dec->require_subcommand(1);
  auto* sc_rs = sc_dec->add_subcommand("rs-check", "exhaustive decoder sweep");
  sc_rs->add_option("--p", de_p, "field order");
  sc_rs->add_option("--n", de_n, "syndrome length");
  sc_rs->add_option("--radius", de_radius, "decode radius (0 = max)");
  sc_rs->add_option("--bdd-samples", de_bdd, "cross-check count");
  sc_rs->callback([&] { run_rs_check(com, de_p, de_n, de_radius, de_bdd); });

  // opi
  std::vector<double> op_gs{1.5, 2.0, 3.0, 10.0};
  std::string op_grid = "0.01:0.99:0.01";
  std::uint32_t op_p = 11;
  std::size_t op_n = 3, op_trials = 50;
  double op_g = 2.0;
  auto* sc_opi = app.add_subcommand("opi", "weighted polynomial intersection");
  sc_opi->require_subcommand(1);
  auto* sc_dom = sc_opi->add_subcommand("dominance", "DQI vs Prange verdict");
  sc_dom->add_option("--g", op_gs, "weights to scan");
  sc_dom->add_option("--x-grid", op_grid, "start:stop:step");
  sc_dom->callback([&] { run_opi_dominance(com, op_gs, op_grid, true); });
  auto* sc_cur = sc_opi->add_subcommand("curves", "ratio curves only");
  sc_cur->add_option("--g", op_gs, "weights to scan");
  sc_cur->add_option("--x-grid", op_grid, "start:stop:step");
  sc_cur->callback([&] { run_opi_dominance(com, op_gs, op_grid, false); });
  auto* sc_e2e = sc_opi->add_subcommand("end-to-end", "small-field pipeline");
  sc_e2e->add_option("--p", op_p, "field order");
  sc_e2e->add_option("--n", op_n, "degree bound");
  sc_e2e->add_option("--g", op_g, "second block weight");
  sc_e2e->add_option("--trials", op_trials, "baseline trials");
  sc_e2e->callback([&] { run_opi_end_to_end(com, op_p, op_n, op_g, op_trials); });

  // hamdqi
  std::string hm_file;
  std::size_t hm_n = 5;
  std::vector<std::size_t> hm_sizes{3, 2};
  std::vector<double> hm_weights{1.0, 2.0};
  std::vector<double> hm_pcoef{0.0, 1.0, 0.5};
  double hm_beta = 0.5, hm_delta = 0.1;
  auto* sc_ham = app.add_subcommand("hamdqi", "commuting-Hamiltonian pipeline");
  sc_ham->require_subcommand(1);
  auto* sc_chk = sc_ham->add_subcommand("check", "coefficients + protocol");
  sc_chk->add_option("--ham", hm_file, "Hamiltonian file");
  sc_chk->add_option("--n", hm_n, "qubit count");
  sc_chk->add_option("--sizes", hm_sizes, "terms per block");
  sc_chk->add_option("--weights", hm_weights, "block weights");
  sc_chk->add_option("--pcoef", hm_pcoef, "polynomial coefficients");
  sc_chk->callback([&] {
    run_hamdqi_check(com, hm_file, hm_n, hm_sizes, hm_weights, hm_pcoef);
  });
  auto* sc_gib = sc_ham->add_subcommand("gibbs", "approximation distance");
  sc_gib->add_option("--ham", hm_file, "Hamiltonian file");
  sc_gib->add_option("--n", hm_n, "qubit count");
  sc_gib->add_option("--sizes", hm_sizes, "terms per block");
  sc_gib->add_option("--weights", hm_weights, "block weights");
  sc_gib->add_option("--beta", hm_beta, "inverse temperature");
  sc_gib->add_option("--delta", hm_delta, "distance bound");
  sc_gib->callback([&] {
    run_hamdqi_gibbs(com, hm_file, hm_n, hm_sizes, hm_weights, hm_beta,
                     hm_delta);
  });

  // reproduce-figure
  int fig_n = 1;
  auto* sc_fig = app.add_subcommand("reproduce-figure", "figure data + script");
  sc_fig->add_option("figure", fig_n, "figure number (1-5)")->required();
  sc_fig->callback([&] { run_figure(com, fig_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const invariant_violation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
