#include "mem/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mem/errors.hpp"
#include "mem/io.hpp"
#include "mem/oracle.hpp"

namespace mem::cli {

namespace fs = std::filesystem;

// ---- Config -----------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

const char* const kKnownPrefixes[] = {
    "fidelity.", "observation.", "operator.", "regularizer.",
    "solver.",   "output.",      "barcode.",  "oracle.",
    "resolved.",
};

bool known_key(const std::string& key) {
  if (key == "kernel" || key == "seed") return true;
  for (const char* p : kKnownPrefixes) {
    if (key.rfind(p, 0) == 0) return true;
  }
  return false;
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not a key = value pair");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config: empty key or value at line " +
                        std::to_string(lineno));
    }
    if (!known_key(key)) {
      throw ConfigError("config: unknown key '" + key + "'");
    }
    cfg.kv_[key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

const std::string& Config::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) {
    throw ConfigError("config: missing required key '" + key + "'");
  }
  return it->second;
}

std::string Config::get_or(const std::string& key,
                           const std::string& dflt) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? dflt : it->second;
}

double Config::get_num(const std::string& key) const {
  const std::string& s = get(key);
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' is not a number: " + s);
  }
}

double Config::get_num_or(const std::string& key, double dflt) const {
  return has(key) ? get_num(key) : dflt;
}

long Config::get_int(const std::string& key) const {
  const std::string& s = get(key);
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' is not an integer: " + s);
  }
}

long Config::get_int_or(const std::string& key, long dflt) const {
  return has(key) ? get_int(key) : dflt;
}

void Config::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

void Config::set_num(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  kv_[key] = os.str();
}

std::string Config::serialize() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv_) os << k << " = " << v << '\n';
  return os.str();
}

// ---- Rng ---------------------------------------------------------------------

double Rng::uniform() {
  return std::generate_canonical<double, 53>(gen_);
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("rng: gamma shape must be positive");
  if (shape < 1.0) {
    // boost to shape + 1, then scale back
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

long Rng::poisson(double rate) {
  if (!(rate > 0.0)) throw DomainError("rng: poisson rate must be positive");
  if (rate < 30.0) {
    // CDF inversion
    double p = std::exp(-rate);
    double f = p;
    double u = uniform();
    long k = 0;
    while (u > f && k < 100000) {
      ++k;
      p *= rate / double(k);
      f += p;
    }
    return k;
  }
  // PTRS transformed rejection (Hormann)
  const double b = 0.931 + 2.53 * std::sqrt(rate);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double lr = std::log(rate);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::abs(u);
    long k = long(std::floor((2.0 * a / us + b) * u + rate + 0.43));
    if (us >= 0.07 && v <= v_r) return k;
    if (k < 0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        double(k) * lr - rate - std::lgamma(double(k) + 1.0)) {
      return k;
    }
  }
}

// ---- generators ---------------------------------------------------------------

std::vector<std::pair<long, long>> parse_mask(const std::string& spec,
                                              Eigen::Index length) {
  std::vector<std::pair<long, long>> out;
  if (spec == "none" || spec.empty()) return out;
  if (spec == "all") {
    out.emplace_back(0, long(length) - 1);
    return out;
  }
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t dash = item.find('-', 1);  // allow negative first index
    long lo, hi;
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stol(item);
      } else {
        lo = std::stol(item.substr(0, dash));
        hi = std::stol(item.substr(dash + 1));
      }
    } catch (const std::exception&) {
      throw ConfigError("config: bad mask range '" + item + "'");
    }
    if (lo < 0 || hi >= long(length) || lo > hi) {
      throw ConfigError("config: mask range '" + item +
                        "' outside [0, length)");
    }
    out.emplace_back(lo, hi);
  }
  return out;
}

Barcode gen_barcode(Eigen::Index length,
                    const std::vector<std::pair<long, long>>& mask,
                    std::uint64_t seed) {
  if (length < 1) throw DomainError("gen: barcode length must be >= 1");
  constexpr double eps = 1e-6;  // Bernoulli parameters must stay in (0,1)
  Rng rng(seed);
  Barcode bc;
  bc.x_true.resize(length);
  bc.p = Vec::Constant(length, 0.5);
  for (Eigen::Index i = 0; i < length; ++i) {
    bc.x_true(i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
  }
  for (const auto& [lo, hi] : mask) {
    for (long i = lo; i <= hi; ++i) {
      bc.p(i) = bc.x_true(i) > 0.5 ? 1.0 - eps : eps;
    }
  }
  return bc;
}

Vec gen_observation(FidelityKind family, const LinearOperator& a,
                    const Vec& x_true, double noise, std::uint64_t seed) {
  if (x_true.size() != a.cols()) {
    throw DomainError("gen: x_true length must match operator columns");
  }
  if (noise < 0.0) throw DomainError("gen: noise level must be >= 0");
  Rng rng(seed);
  Vec mean_obs = a.apply(x_true);
  Vec y(mean_obs.size());
  switch (family) {
    case FidelityKind::normal:
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        y(i) = mean_obs(i) + (noise > 0.0 ? noise * rng.normal() : 0.0);
      }
      break;
    case FidelityKind::poisson:
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        double rate = std::max(mean_obs(i), 1e-8);
        y(i) = double(rng.poisson(rate));
      }
      break;
    case FidelityKind::gamma:
      if ((mean_obs.array() <= 0.0).any()) {
        throw DomainError("gen: Gamma observations need positive means");
      }
      if (noise == 0.0) {
        y = mean_obs;
      } else {
        double shape = 1.0 / (noise * noise);
        for (Eigen::Index i = 0; i < y.size(); ++i) {
          y(i) = mean_obs(i) * rng.gamma(shape) / shape;
        }
      }
      break;
  }
  return y;
}

// ---- assembly -----------------------------------------------------------------

namespace {

FidelityKind parse_family(const std::string& name) {
  if (name == "normal") return FidelityKind::normal;
  if (name == "poisson") return FidelityKind::poisson;
  if (name == "gamma") return FidelityKind::gamma;
  throw ConfigError("config: unknown fidelity.family '" + name + "'");
}

Boundary parse_boundary(const std::string& name) {
  if (name == "reflect") return Boundary::reflect;
  if (name == "zero_pad") return Boundary::zero_pad;
  throw ConfigError("config: unknown operator.boundary '" + name + "'");
}

LinearOperator operator_from_config(const Config& cfg) {
  std::string kind = cfg.get("operator.kind");
  if (kind == "identity") {
    return LinearOperator::identity(cfg.get_int("operator.n"));
  }
  if (kind == "dense") {
    return LinearOperator::dense(read_matrix(cfg.get("operator.path")));
  }
  if (kind == "gaussian_blur_1d") {
    return LinearOperator::gaussian_blur_1d(
        cfg.get_int("operator.n"), cfg.get_num("operator.sigma"),
        parse_boundary(cfg.get_or("operator.boundary", "reflect")));
  }
  if (kind == "gaussian_blur_2d") {
    return LinearOperator::gaussian_blur_2d(
        cfg.get_int("operator.height"), cfg.get_int("operator.width"),
        cfg.get_num("operator.sigma"),
        parse_boundary(cfg.get_or("operator.boundary", "reflect")));
  }
  throw ConfigError("config: unknown operator.kind '" + kind + "'");
}

Prior prior_from_config(const Config& cfg, Eigen::Index d) {
  const std::string name = cfg.get("regularizer.distribution");
  using RD = ReferenceDistribution;
  if (name == "bernoulli_vector") {
    Vec p = read_vector(cfg.get("regularizer.p_file"));
    if (p.size() != d) {
      throw DomainError("config: regularizer.p_file length must equal the "
                        "solution dimension");
    }
    std::vector<RD> factors;
    factors.reserve(size_t(p.size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      factors.push_back(RD::bernoulli(p(i)));
    }
    return Prior::per_coordinate(std::move(factors));
  }
  if (name == "normal") {
    return Prior::iid(RD::normal(cfg.get_num("regularizer.mu"),
                                 cfg.get_num("regularizer.sigma")));
  }
  if (name == "nig") {
    Vec mu(1), beta(1);
    mu << cfg.get_num("regularizer.mu");
    beta << cfg.get_num("regularizer.beta");
    Mat sigma(1, 1);
    sigma << cfg.get_num_or("regularizer.sigma", 1.0);
    return Prior::iid(RD::normal_inverse_gaussian(
        mu, beta, cfg.get_num("regularizer.alpha"),
        cfg.get_num("regularizer.delta"), sigma));
  }
  if (name == "gamma") {
    return Prior::iid(RD::gamma(cfg.get_num("regularizer.alpha"),
                                cfg.get_num("regularizer.beta")));
  }
  if (name == "laplace") {
    return Prior::iid(RD::laplace(cfg.get_num("regularizer.mu"),
                                  cfg.get_num("regularizer.b")));
  }
  if (name == "poisson") {
    return Prior::iid(RD::poisson(cfg.get_num("regularizer.lambda")));
  }
  if (name == "bernoulli") {
    return Prior::iid(RD::bernoulli(cfg.get_num("regularizer.p")));
  }
  if (name == "multinomial") {
    Vec p(1);
    p << cfg.get_num("regularizer.p");
    return Prior::iid(RD::multinomial(cfg.get_int("regularizer.n"), p));
  }
  if (name == "negative_multinomial") {
    Vec p(1);
    p << cfg.get_num("regularizer.p");
    return Prior::iid(
        RD::negative_multinomial(p, cfg.get_num("regularizer.x0")));
  }
  if (name == "discrete_uniform") {
    return Prior::iid(RD::discrete_uniform(cfg.get_int("regularizer.a"),
                                           cfg.get_int("regularizer.b")));
  }
  if (name == "continuous_uniform") {
    return Prior::iid(RD::continuous_uniform(cfg.get_num("regularizer.a"),
                                             cfg.get_num("regularizer.b")));
  }
  if (name == "logistic") {
    return Prior::iid(RD::logistic(cfg.get_num("regularizer.mu"),
                                   cfg.get_num("regularizer.s")));
  }
  throw ConfigError("config: unknown regularizer.distribution '" + name + "'");
}

KernelKind parse_kernel(const std::string& name, FidelityKind family) {
  if (name == "auto") return paired_kernel(family);
  if (name == "energy") return KernelKind::energy;
  if (name == "boltzmann_shannon") return KernelKind::boltzmann_shannon;
  if (name == "burg") return KernelKind::burg;
  throw ConfigError("config: unknown kernel '" + name + "'");
}

Vec x0_from_config(const Config& cfg, const Problem& p, Eigen::Index d) {
  std::string spec = cfg.get_or("solver.x0", "");
  if (spec.empty()) {
    if (p.reg) return p.reg->prior.mean_vector(d);
    return p.kernel == KernelKind::energy ? Vec(Vec::Zero(d))
                                          : Vec(Vec::Ones(d));
  }
  if (spec == "mean") {
    if (!p.reg) throw ConfigError("config: solver.x0 = mean needs a prior");
    return p.reg->prior.mean_vector(d);
  }
  if (spec == "zeros") return Vec::Zero(d);
  if (spec == "ones") return Vec::Ones(d);
  if (spec.rfind("const:", 0) == 0) {
    return Vec::Constant(d, std::stod(spec.substr(6)));
  }
  Vec x = read_vector(spec);
  if (x.size() != d) {
    throw DomainError("config: solver.x0 file has the wrong length");
  }
  return x;
}

void write_trace_csv(const std::string& path, const SolverTrace& trace) {
  std::ofstream out(path);
  if (!out) throw ConfigError("io: cannot write '" + path + "'");
  out.precision(17);
  out << "k,objective,residual,change\n";
  for (const auto& pt : trace.points) {
    out << pt.k << ',' << pt.objective << ',' << pt.residual << ','
        << pt.change << '\n';
  }
}

std::string out_path(const Config& cfg, const std::string& name) {
  fs::path dir(cfg.get("output.dir"));
  fs::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

// ---- subcommands ----------------------------------------------------------------

int cmd_run(const Config& cfg_in) {
  Config cfg = cfg_in;
  const std::uint64_t seed = std::uint64_t(cfg.get_int_or("seed", 0));

  LinearOperator op = operator_from_config(cfg);
  FidelityKind family = parse_family(cfg.get("fidelity.family"));

  Vec yhat;
  std::string obs = cfg.get("fidelity.observation");
  if (obs == "generate") {
    Vec x_true = read_vector(cfg.get("observation.x_true"));
    double noise = cfg.get_num_or("observation.noise", 0.0);
    yhat = gen_observation(family, op, x_true, noise, seed);
    write_vector(out_path(cfg, "y.txt"), yhat);
  } else {
    yhat = read_vector(obs);
  }

  const Eigen::Index d = op.cols();
  FidelityFamily fid = FidelityFamily::make(family, op, std::move(yhat));

  const std::string solver = cfg.get_or("solver.name", "bpg");
  SolverOptions opts;
  opts.max_iters = int(cfg.get_int_or("solver.max_iters", 500));
  opts.tol = cfg.get_num_or("solver.tol", 1e-9);
  opts.trace_stride = int(cfg.get_int_or("solver.trace_stride", 1));
  std::string step = cfg.get_or("solver.step", "auto");
  if (step != "auto") opts.step = cfg.get_num("solver.step");

  SolverTrace trace;
  if (solver == "cp_nig_tv") {
    Eigen::Index h = cfg.get_int("operator.height");
    Eigen::Index w = cfg.get_int("operator.width");
    Vec x0 = cfg.has("solver.x0")
                 ? read_vector(cfg.get("solver.x0"))
                 : fid.yhat;
    trace = chambolle_pock_nig_tv(
        fid.op, fid.yhat, h, w, cfg.get_num("solver.delta"),
        cfg.get_num("solver.s"), cfg.get_num("solver.tau"), std::move(x0),
        opts);
    cfg.set("resolved.kernel", "energy");
  } else {
    std::optional<Regularizer> reg;
    std::string dist = cfg.get_or("regularizer.distribution", "none");
    if (dist != "none") {
      reg = Regularizer::plain(prior_from_config(cfg, d),
                               cfg.get_num("regularizer.weight"));
    }
    KernelKind kernel = parse_kernel(cfg.get_or("kernel", "auto"), family);
    std::optional<double> override_l;
    if (cfg.has("solver.smoothness")) {
      override_l = cfg.get_num("solver.smoothness");
    }
    Problem prob =
        Problem::make(std::move(fid), std::move(reg), kernel, override_l);
    Vec x0 = x0_from_config(cfg, prob, d);
    if (solver == "bpg") {
      trace = bpg(prob, std::move(x0), opts);
    } else if (solver == "fista") {
      trace = fista(prob, std::move(x0), opts);
    } else {
      throw ConfigError("config: unknown solver.name '" + solver + "'");
    }
    cfg.set("resolved.kernel", kernel_name(prob.kernel));
  }

  write_vector(out_path(cfg, "solution.txt"), trace.x);
  write_trace_csv(out_path(cfg, "trace.csv"), trace);
  cfg.set_num("resolved.step", trace.step);
  cfg.set("resolved.iterations", std::to_string(trace.iterations));
  std::ofstream manifest(out_path(cfg, "manifest.txt"));
  manifest << cfg.serialize();
  return 0;
}

int cmd_gen_barcode(const Config& cfg) {
  Eigen::Index length = cfg.get_int("barcode.length");
  auto mask = parse_mask(cfg.get_or("barcode.mask", "none"), length);
  Barcode bc =
      gen_barcode(length, mask, std::uint64_t(cfg.get_int_or("seed", 0)));
  write_vector(out_path(cfg, "x_true.txt"), bc.x_true);
  write_vector(out_path(cfg, "prior_p.txt"), bc.p);
  return 0;
}

int cmd_gen_observation(const Config& cfg) {
  LinearOperator op = operator_from_config(cfg);
  FidelityKind family = parse_family(cfg.get("fidelity.family"));
  Vec x_true = read_vector(cfg.get("observation.x_true"));
  Vec y = gen_observation(family, op, x_true,
                          cfg.get_num_or("observation.noise", 0.0),
                          std::uint64_t(cfg.get_int_or("seed", 0)));
  write_vector(out_path(cfg, "y.txt"), y);
  return 0;
}

namespace {

// Interior sampling windows for the conjugate battery.
struct CatalogEntry {
  ReferenceDistribution dist;
  double lo, hi;
};

std::vector<CatalogEntry> oracle_catalog() {
  using RD = ReferenceDistribution;
  std::vector<CatalogEntry> cat;
  cat.push_back({RD::normal(0.3, 1.5), -3.0, 3.0});
  {
    Vec mu(1), beta(1);
    mu << 0.2;
    beta << 0.3;
    Mat s(1, 1);
    s << 1.2;
    cat.push_back({RD::normal_inverse_gaussian(mu, beta, 1.5, 0.7, s), -3.0, 3.0});
  }
  cat.push_back({RD::gamma(2.0, 1.5), 0.1, 5.0});
  cat.push_back({RD::laplace(0.4, 0.8), -3.0, 3.0});
  cat.push_back({RD::poisson(2.5), 0.1, 6.0});
  cat.push_back({RD::bernoulli(0.35), 0.02, 0.98});
  {
    Vec p(1);
    p << 0.3;
    cat.push_back({RD::multinomial(4, p), 0.05, 3.9});
  }
  {
    Vec p(1);
    p << 0.4;
    cat.push_back({RD::negative_multinomial(p, 2.0), 0.05, 6.0});
  }
  cat.push_back({RD::discrete_uniform(-1, 4), -0.9, 3.9});
  cat.push_back({RD::continuous_uniform(-0.5, 2.0), -0.45, 1.95});
  cat.push_back({RD::logistic(0.3, 0.7), -3.0, 3.0});
  return cat;
}

}  // namespace

int cmd_oracle(const Config& cfg) {
  const std::uint64_t seed = std::uint64_t(cfg.get_int_or("seed", 7));
  const int samples = int(cfg.get_int_or("oracle.samples", 20));
  Rng rng(seed);
  std::vector<OracleReport> reports;

  for (const auto& entry : oracle_catalog()) {
    for (int s = 0; s < samples; ++s) {
      double y = entry.lo + (entry.hi - entry.lo) * rng.uniform();
      double analytic = cramer_value1(entry.dist, y);
      double oracle = numeric_conjugate(entry.dist, y);
      reports.push_back(make_report(
          "conjugate/" + entry.dist.name(), analytic, oracle, 1e-6));
    }
  }

  // prox spot checks against the dense scalar oracle
  const KernelKind kernels[] = {KernelKind::energy,
                                KernelKind::boltzmann_shannon,
                                KernelKind::burg};
  for (KernelKind k : kernels) {
    for (const auto& entry : oracle_catalog()) {
      double lo = k == KernelKind::energy ? entry.lo : std::max(entry.lo, 0.05);
      if (!(lo < entry.hi)) continue;
      double xbar = lo + (entry.hi - lo) * rng.uniform();
      double t = 0.25 + rng.uniform();
      Vec xb(1);
      xb << xbar;
      ProxResult pr =
          bregman_prox(ProxRequest{k, entry.dist, t, xb});
      double dense = dense_prox_1d(k, entry.dist, t, xbar);
      reports.push_back(make_report("prox/" + std::string(kernel_name(k)) +
                                        "/" + entry.dist.name(),
                                    pr.x(0), dense, 1e-7));
    }
  }

  // Table-3 descent rows on a seeded dense instance
  {
    Mat a(4, 6);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        a(i, j) = 0.1 + rng.uniform();
      }
    }
    Vec yh(4);
    for (Eigen::Index i = 0; i < 4; ++i) yh(i) = 0.5 + 2.0 * rng.uniform();
    LinearOperator op = LinearOperator::dense(a);
    auto fidN = FidelityFamily::make(FidelityKind::normal, op, yh);
    auto fidP = FidelityFamily::make(FidelityKind::poisson, op, yh);
    auto fidG = FidelityFamily::make(FidelityKind::gamma, op, yh);
    reports.push_back(descent_lemma_check(fidN, KernelKind::energy,
                                          smoothness_constant(fidN), 200,
                                          seed + 1));
    reports.push_back(descent_lemma_check(fidP, KernelKind::boltzmann_shannon,
                                          smoothness_constant(fidP), 200,
                                          seed + 2));
    reports.push_back(descent_lemma_check(fidG, KernelKind::burg,
                                          smoothness_constant(fidG), 200,
                                          seed + 3));
  }

  std::ofstream out(out_path(cfg, "oracle_report.csv"));
  write_reports_csv(out, reports);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  return all_pass ? 0 : 3;
}

int run_main(int argc, const char* const* argv) {
  auto usage = []() {
    std::cerr << "usage: mem run <config>\n"
              << "       mem gen barcode <config>\n"
              << "       mem gen observation <config>\n"
              << "       mem oracle <config>\n";
    return 1;
  };
  if (argc < 3) return usage();
  std::string cmd = argv[1];
  std::string sub, cfg_path;
  if (cmd == "gen") {
    if (argc < 4) return usage();
    sub = argv[2];
    cfg_path = argv[3];
  } else {
    cfg_path = argv[2];
  }

  try {
    Config cfg = Config::parse_file(cfg_path);
    if (cmd == "run") return cmd_run(cfg);
    if (cmd == "oracle") return cmd_oracle(cfg);
    if (cmd == "gen" && sub == "barcode") return cmd_gen_barcode(cfg);
    if (cmd == "gen" && sub == "observation") return cmd_gen_observation(cfg);
    return usage();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const StepSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace mem::cli
