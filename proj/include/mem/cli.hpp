#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mem/models.hpp"
#include "mem/solvers.hpp"

namespace mem::cli {

// Flat key-value configuration: one `key = value` pair per line, dotted
// section prefixes, '#' comments. The serialized form doubles as the run
// manifest.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& dflt) const;
  double get_num(const std::string& key) const;
  double get_num_or(const std::string& key, double dflt) const;
  long get_int(const std::string& key) const;
  long get_int_or(const std::string& key, long dflt) const;

  void set(const std::string& key, const std::string& value);
  void set_num(const std::string& key, double value);

  std::string serialize() const;  // sorted keys
  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Deterministic sampling; only determinism and mean correctness are
// contractual.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();               // [0, 1)
  double normal();                // Box-Muller
  double gamma(double shape);     // Marsaglia-Tsang, any shape > 0
  long poisson(double rate);      // inversion below 30, PTRS rejection above

 private:
  std::mt19937_64 gen_;
};

struct Barcode {
  Vec x_true;  // binary
  Vec p;       // Bernoulli parameter per pixel
};

// Random binary vector plus its prior parameters: 1/2 at free pixels; at
// masked (symbology) pixels the ground-truth value clamped into (0,1) by
// epsilon = 1e-6.
Barcode gen_barcode(Eigen::Index length,
                    const std::vector<std::pair<long, long>>& mask,
                    std::uint64_t seed);

// "none" | "all" | comma-separated inclusive ranges, e.g. "0-7,56-63".
std::vector<std::pair<long, long>> parse_mask(const std::string& spec,
                                              Eigen::Index length);

// Synthetic observations: Normal -> A x + noise * N(0, I); Poisson ->
// counts at rates A x (clamped to >= 1e-8); Gamma -> mean-(A x) draws with
// relative spread `noise`.
Vec gen_observation(FidelityKind family, const LinearOperator& a,
                    const Vec& x_true, double noise, std::uint64_t seed);

// Subcommand drivers; return process exit codes (0 ok, 1 config parse,
// 2 domain validation, 3 solver/oracle failure).
int cmd_run(const Config& cfg);
int cmd_gen_barcode(const Config& cfg);
int cmd_gen_observation(const Config& cfg);
int cmd_oracle(const Config& cfg);

int run_main(int argc, const char* const* argv);

}  // namespace mem::cli
