#pragma once

// Spread codes as cyclic orbit codes of a Singer cycle, plus the
// non-primitive variant where ord(p) = (q^n - 1)/(q^k - 1).

#include <cstdint>
#include <optional>

#include "coc/orbit.hpp"

namespace coc {

struct SpreadSpec {
  unsigned q = 2;
  std::size_t k = 1;
  std::size_t n = 1;
  /// Primitive of degree n; least_primitive() when absent.
  std::optional<Poly> poly;
};

/// (q^n - 1)/(q^k - 1); throws unless k divides n.
std::uint64_t spread_size(unsigned q, std::size_t k, std::size_t n);

/// phi^{-1}(alpha^{ic}) for i = 0, ..., k-1, before canonicalization.
std::vector<Vec> spread_basis(const SpreadSpec& spec);

CyclicOrbitCode build_spread(const SpreadSpec& spec);

/// Spread from an irreducible p of degree n with ord(p) = (q^n-1)/(q^k-1):
/// the lexicographically first k-subspace (depth-first over packed vector
/// indices) whose nonzero vectors meet every <alpha>-orbit at most once.
CyclicOrbitCode build_nonprimitive_spread(const Poly& p, std::size_t k);

/// Every nonzero vector is covered exactly once and the orbit has
/// (q^n - 1)/(q^k - 1) members.
bool verify_spread(const CyclicOrbitCode& code, std::uint64_t cap = kDefaultOrbitCap);

}  // namespace coc
