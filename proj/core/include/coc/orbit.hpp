#pragma once

// Cyclic orbit codes U<M> and their parameters.
//
// analyze_naive() walks the orbit and is the reference for everything else.
// The regime analyzers work in the field (or ring) representation instead:
// every nonzero start vector is mapped through phi, and the relation
// u_m = u_l M^g becomes an exponent difference collected in a
// DifferenceMultiset. Folding that multiset onto the exponents g of the group
// gives, for each g, the count q^dim(U cap U M^g) - 1, from which cardinality,
// minimum distance and distance distribution follow.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coc/canonical.hpp"
#include "coc/linalg.hpp"

namespace coc {

enum class Regime { primitive, irreducible, completely_reducible, non_semisimple, general };

std::string to_string(Regime r);

class CyclicOrbitCode {
 public:
  /// Generator is build_generator(blocks).
  CyclicOrbitCode(ElementaryDivisorSpec blocks, Subspace start);
  /// Arbitrary invertible generator; regime is general.
  CyclicOrbitCode(Mat generator, Subspace start);

  const Mat& generator() const noexcept { return generator_; }
  const Subspace& start() const noexcept { return start_; }
  const std::optional<ElementaryDivisorSpec>& block_structure() const noexcept { return blocks_; }
  Regime regime() const noexcept { return regime_; }

  unsigned q() const noexcept { return generator_.q(); }
  std::size_t n() const noexcept { return generator_.rows(); }
  std::size_t k() const noexcept { return start_.dim(); }
  /// Order of the generator matrix.
  std::uint64_t generator_order() const noexcept { return order_; }

  CyclicOrbitCode with_start(Subspace start) const;

 private:
  Mat generator_;
  Subspace start_;
  std::optional<ElementaryDivisorSpec> blocks_;
  Regime regime_ = Regime::general;
  std::uint64_t order_ = 0;
};

struct CodeParams {
  std::uint64_t cardinality = 0;
  /// nullopt for single-codeword codes.
  std::optional<unsigned> min_distance;
  /// D_0, D_2, ..., D_2k (entry i counts codewords at distance 2i).
  std::optional<std::vector<std::uint64_t>> distribution;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::string to_string(const CodeParams& p);

/// Multiset of exponent differences. Keys are tuples with one coordinate per
/// block, each reduced modulo that block's modulus. kFree in a coordinate
/// stands for every residue of that coordinate at once.
class DifferenceMultiset {
 public:
  static constexpr std::int64_t kFree = std::numeric_limits<std::int64_t>::min();
  using Key = std::vector<std::int64_t>;

  explicit DifferenceMultiset(std::vector<std::uint64_t> moduli);

  void add(Key key, std::uint64_t count = 1);
  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  /// Multiplicity of a concrete key, counting entries whose free coordinates
  /// match it.
  std::uint64_t multiplicity(const Key& key) const;
  std::uint64_t max_multiplicity() const;

  /// counts[g] for g in Z_order, where the generator power g acts as
  /// (g mod moduli[0], g mod moduli[1], ...). Keys not reachable by any g
  /// are dropped.
  std::vector<std::uint64_t> fold(std::uint64_t order) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::map<Key, std::uint64_t> entries_;
};

/// Extra findings of an analyzer that do not change its result.
struct Diagnostics {
  std::vector<std::string> notes;
};

inline constexpr std::uint64_t kDefaultOrbitCap = std::uint64_t{1} << 20;

/// [U, UM, UM^2, ...] up to the first return to U.
std::vector<Subspace> enumerate_orbit(const CyclicOrbitCode& code, std::uint64_t cap = kDefaultOrbitCap);

/// Reference analysis by orbit enumeration; includes the distribution.
CodeParams analyze_naive(const CyclicOrbitCode& code, std::uint64_t cap = kDefaultOrbitCap);

/// Turns per-exponent intersection counts (counts[g] = q^dim(U cap UM^g) - 1
/// for g in [1, order)) into parameters, following the difference-set
/// argument: the largest count below q^k - 1 gives the distance, the least
/// exponent with a full count gives the cardinality.
CodeParams params_from_counts(unsigned q, std::size_t k, std::span<const std::uint64_t> counts);

/// Difference multiset of the start point under a primitive companion
/// generator (keys mod q^n - 1).
DifferenceMultiset primitive_differences(const CyclicOrbitCode& code);

CodeParams analyze_primitive(const CyclicOrbitCode& code);
CodeParams analyze_irreducible(const CyclicOrbitCode& code, Diagnostics* diag = nullptr);
CodeParams analyze_reducible_blocks(const CyclicOrbitCode& code);
CodeParams analyze_nonsemisimple(const CyclicOrbitCode& code, Diagnostics* diag = nullptr);

/// Fast analyzer for the code's regime when one applies, naive otherwise.
/// The name of the analyzer used is stored in *used when given.
CodeParams analyze(const CyclicOrbitCode& code, std::string* used = nullptr);

enum class StartShape { single, diagonal, concatenated };

struct BoundsReport {
  StartShape shape = StartShape::single;
  std::vector<std::uint64_t> component_cardinalities;
  std::vector<std::optional<unsigned>> component_distances;
  /// Exact for the diagonal shape: lcm of the component cardinalities.
  std::optional<std::uint64_t> cardinality;
  /// d(C) >= min_i d(C_i).
  std::optional<unsigned> distance_lower_bound;
  /// Diagonal shape with pairwise coprime component cardinalities.
  bool distance_is_exact = false;
  /// d(C) >= sum_{j not in J} d(C_j) with J = {i : |C_i| = |C|} nonempty.
  std::optional<unsigned> distance_sum_bound;
  /// lcm(r_i) | g | lcm(s_i) for the stabilizer <M^g> of U.
  std::uint64_t stabilizer_lower = 1;
  std::uint64_t stabilizer_upper = 1;
};

std::string to_string(StartShape s);

/// Start shape relative to the generator's block layout; throws when the
/// start is neither block-diagonal nor full-rank in every column block.
StartShape start_shape(const CyclicOrbitCode& code);

/// The component codes rs(U_i)<M_i> for the detected shape.
std::vector<CyclicOrbitCode> component_codes(const CyclicOrbitCode& code);

BoundsReport block_bounds(const CyclicOrbitCode& code, std::span<const CodeParams> components);

/// Naive analysis (always with distribution).
CodeParams distance_distribution(const CyclicOrbitCode& code, std::uint64_t cap = kDefaultOrbitCap);

/// (U^perp)<M^t>.
CyclicOrbitCode dual_code(const CyclicOrbitCode& code);

/// Distance distributions of the code and its dual coincide.
bool macwilliams_check(const CyclicOrbitCode& code, std::uint64_t cap = kDefaultOrbitCap);

}  // namespace coc
