#pragma once

// Cyclic subgroups of GL_n(F_q) up to conjugacy: generators in rational
// canonical form and the (partition, order) type that classifies them.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coc/linalg.hpp"

namespace coc {

struct ElementaryDivisor {
  Poly p;            // monic irreducible
  unsigned exp = 1;  // block is the companion matrix of p^exp

  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

struct ElementaryDivisorSpec {
  unsigned q = 2;
  std::vector<ElementaryDivisor> blocks;

  std::size_t dimension() const;
  /// Size of each block, deg(p) * exp.
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const ElementaryDivisorSpec&, const ElementaryDivisorSpec&) = default;
};

/// diag(M_{p_1^{e_1}}, ..., M_{p_t^{e_t}}).
Mat build_generator(const ElementaryDivisorSpec& spec, bool require_invertible = true);

/// Order of the companion matrix of p^e: ord(p) * char^t with char^t >= e
/// minimal.
std::uint64_t elementary_divisor_order(const ElementaryDivisor& d, const PrimeField& base);

/// lcm of the block orders; the exact order of build_generator(spec).
std::uint64_t generator_order(const ElementaryDivisorSpec& spec);

/// One irreducible factor class in a matrix type.
struct TypeEntry {
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::vector<unsigned> partition;  // descending

  friend auto operator<=>(const TypeEntry&, const TypeEntry&) = default;
  friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

/// e(A) and o(A), entries sorted by (order, degree, partition).
struct MatrixType {
  std::vector<TypeEntry> entries;

  std::vector<std::vector<unsigned>> partitions() const;
  std::vector<std::uint64_t> orders() const;
  std::string to_string() const;

  friend bool operator==(const MatrixType&, const MatrixType&) = default;
};

/// det(xI - A) via Hessenberg reduction.
Poly characteristic_polynomial(const Mat& a);

/// Monic irreducible factors with multiplicities, by trial division over
/// irreducibles of degree <= deg/2 in poly_less order.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f);

inline constexpr std::size_t kDefaultTypeBound = 12;

MatrixType matrix_type(const Mat& a, std::size_t max_dim = kDefaultTypeBound);

/// Decides conjugacy of <A> and <B>.
bool same_group_type(const Mat& a, const Mat& b);

}  // namespace coc
