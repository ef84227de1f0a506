#pragma once

// Minimum subspace distance decoding of irreducible cyclic orbit codes.
//
// Each pair (v, u) with v in R and u in the start space proposes the
// codeword U P^e where alpha^e = phi(v)/phi(u). The exhaustive decoder tries
// every pair; decode_lf restricts v to the sparse combinations L_f of a
// basis of R and stops as soon as a candidate is close enough to be the
// unique nearest codeword.

#include <cstdint>
#include <optional>
#include <vector>

#include "coc/orbit.hpp"

namespace coc {

struct DecodeResult {
  Subspace codeword;
  std::uint64_t group_exponent = 0;  // codeword = U P^group_exponent
  unsigned distance = 0;
  bool unique = false;
  std::uint64_t candidates_examined = 0;
  /// Every exponent in [0, |C|) reaching the best distance (unique: one).
  std::vector<std::uint64_t> tied_exponents;
};

class OrbitDecoder {
 public:
  /// Requires a single irreducible block and at least two codewords.
  explicit OrbitDecoder(const CyclicOrbitCode& code);

  const CyclicOrbitCode& code() const noexcept { return code_; }
  std::uint64_t cardinality() const noexcept { return orbit_.size(); }
  /// 2 * delta
  unsigned min_distance() const noexcept { return min_distance_; }
  const Subspace& codeword(std::uint64_t exponent) const { return orbit_[exponent % orbit_.size()]; }

  DecodeResult decode_exhaustive(const Subspace& received) const;
  DecodeResult decode_lf(const Subspace& received, std::optional<unsigned> f = std::nullopt) const;

 private:
  struct Search;
  std::optional<std::uint64_t> exponent_of(std::uint32_t v, std::size_t start_slot) const;
  void check_received(const Subspace& r) const;

  CyclicOrbitCode code_;
  FieldCtxPtr ctx_;
  std::vector<Subspace> orbit_;
  unsigned min_distance_ = 0;
  std::vector<std::uint32_t> start_;      // packed nonzero start elements
  std::vector<std::uint32_t> start_inv_;  // their inverses
  std::vector<std::int64_t> power_log_;   // packed element -> e with alpha^e, or -1
};

DecodeResult decode_exhaustive(const Subspace& received, const CyclicOrbitCode& code);
DecodeResult decode_lf(const Subspace& received, const CyclicOrbitCode& code, std::optional<unsigned> f = std::nullopt);

/// Nonzero combinations of the rows of r_basis with support size 1..f+1 and
/// nonzero coefficients on the support, by support size, then support
/// (lexicographic), then coefficients.
std::vector<Vec> lf_set(const Mat& r_basis, unsigned f);

/// sum_{i=1}^{f+1} C(k', i) (q-1)^i
std::uint64_t lf_set_size(std::uint64_t q, unsigned k_prime, unsigned f);

/// floor((k' - k + delta - 1)/2) clamped to [0, k'-1], where 2 delta = d(C).
unsigned error_capability(const CyclicOrbitCode& code, unsigned k_prime);
unsigned error_capability(std::size_t k, unsigned min_distance, unsigned k_prime);

}  // namespace coc
