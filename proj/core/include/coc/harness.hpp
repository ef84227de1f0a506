#pragma once

// Channel model, decoding simulation and seeded random search over start
// subspaces.
//
// Randomness: Rng is mt19937_64 with a rejection-sampled below(), so
// streams are identical across standard libraries. Trial t of a run with
// seed s draws from Rng(trial_seed(s, t)), which makes serial and parallel
// runs agree bit for bit.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coc/decoder.hpp"
#include "coc/orbit.hpp"

namespace coc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  Elem element(unsigned q) { return static_cast<Elem>(below(q)); }

 private:
  std::mt19937_64 eng_;
};

/// splitmix64(seed ^ trial)
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

Mat random_matrix(unsigned q, std::size_t rows, std::size_t cols, Rng& rng);
Mat random_invertible(unsigned q, std::size_t n, Rng& rng);
/// Row space of a uniformly random full-rank k x n matrix.
Subspace random_subspace(unsigned q, std::size_t k, std::size_t n, Rng& rng);

struct ChannelConfig {
  unsigned erasures = 0;
  unsigned errors = 0;
  std::uint64_t seed = 0;
};

/// V' = `erasures` directions of V removed, E = `errors` random vectors
/// outside V, R = V' + E after a random change of basis.
Subspace transmit(const Subspace& v, const ChannelConfig& cfg);

struct FailureRecord {
  std::uint64_t trial = 0;
  std::uint64_t sent_exponent = 0;
  unsigned distance = 0;  // d(R, sent)
  std::uint64_t exhaustive_exponent = 0;
  bool exhaustive_unique = false;
  std::uint64_t lf_exponent = 0;
  bool lf_unique = false;
};

struct SimulationStats {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  ChannelConfig channel;
  std::uint64_t exhaustive_success = 0;
  std::uint64_t lf_success = 0;
  std::uint64_t exhaustive_unique = 0;
  std::uint64_t lf_unique = 0;
  std::uint64_t exhaustive_candidates = 0;
  std::uint64_t lf_candidates = 0;
  std::vector<FailureRecord> failures;

  double exhaustive_rate() const { return trials ? double(exhaustive_success) / double(trials) : 0.0; }
  double lf_rate() const { return trials ? double(lf_success) / double(trials) : 0.0; }
  friend bool operator==(const SimulationStats&, const SimulationStats&) = default;
};

inline bool operator==(const ChannelConfig& a, const ChannelConfig& b) {
  return a.erasures == b.erasures && a.errors == b.errors && a.seed == b.seed;
}
inline bool operator==(const FailureRecord& a, const FailureRecord& b) {
  return a.trial == b.trial && a.sent_exponent == b.sent_exponent && a.distance == b.distance &&
         a.exhaustive_exponent == b.exhaustive_exponent && a.exhaustive_unique == b.exhaustive_unique &&
         a.lf_exponent == b.lf_exponent && a.lf_unique == b.lf_unique;
}

/// cfg.seed is the run seed; per-trial channel seeds derive from it.
SimulationStats simulate_decoding(const CyclicOrbitCode& code, const ChannelConfig& cfg, std::uint64_t trials,
                                  unsigned jobs = 1);

struct SearchCell {
  std::uint64_t cardinality = 0;
  std::uint64_t trial = 0;
  Subspace start;
};

struct SearchReport {
  unsigned q = 2;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t generator_order = 0;
  std::string generator;  // blocks as text
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// best cardinality per minimum distance
  std::map<unsigned, SearchCell> cells;

  std::string to_csv() const;
  std::string to_json() const;
};

struct SearchConfig {
  ElementaryDivisorSpec generator;
  std::size_t k = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Stop once every listed (distance, cardinality) target is met.
  std::map<unsigned, std::uint64_t> targets;
};

/// Every reported cell is re-checked with analyze_naive.
SearchReport random_search(const SearchConfig& cfg);

}  // namespace coc
