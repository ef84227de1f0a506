#pragma once

// Arithmetic over prime fields F_q, the polynomial ring F_q[x] and quotient
// rings F_q[x]/(f). A quotient ring by a primitive polynomial carries a full
// discrete-log table for its root alpha = x mod f.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coc/error.hpp"

namespace coc {

using Elem = std::uint8_t;

/// Largest supported prime; elements are stored in one byte.
inline constexpr unsigned kMaxPrime = 251;

class PrimeField {
 public:
  explicit PrimeField(unsigned q);

  unsigned q() const noexcept { return q_; }

  Elem reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(q_);
    return static_cast<Elem>(r < 0 ? r + q_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    unsigned s = unsigned{a} + b;
    return static_cast<Elem>(s >= q_ ? s - q_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(a >= b ? a - b : a + q_ - b);
  }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>(a == 0 ? 0 : q_ - a); }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((unsigned{a} * b) % q_);
  }
  /// Throws on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  unsigned q_;
  std::vector<Elem> inverse_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Least e >= 1 with a^e = 1 mod m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Univariate polynomial over F_q with coefficients stored in ascending
/// degree. The representation is normalized: no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient list and no degree.
class Poly {
 public:
  explicit Poly(unsigned q = 2) : q_(q) {}
  Poly(unsigned q, std::vector<Elem> ascending);

  static Poly monomial(unsigned q, std::size_t degree, Elem c = 1);
  static Poly constant(unsigned q, Elem c) { return monomial(q, 0, c); }
  static Poly x(unsigned q) { return monomial(q, 1); }

  /// Parses space-separated ascending coefficients, e.g. "1 1 0 0 0 0 1".
  static Poly parse(unsigned q, std::string_view text);

  unsigned q() const noexcept { return q_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  /// nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
  Elem leading() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  /// Same text format as parse(); the zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  unsigned q_;
  std::vector<Elem> c_;
};

/// Total order used for every deterministic scan: by degree, then by the
/// coefficient vector read as a base-q number (constant term least
/// significant). Among monic polynomials of one degree this is enumeration
/// order of monic_poly().
bool poly_less(const Poly& a, const Poly& b);

/// The index-th monic polynomial of the given degree, 0 <= index < q^degree.
Poly monic_poly(unsigned q, std::size_t degree, std::uint64_t index);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

/// Euclidean division; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// (base^exp) mod m.
Poly powmod(const Poly& base, std::uint64_t exp, const Poly& m);

Poly poly_pow(const Poly& base, unsigned exp);

/// Least e >= 1 with x^e = 1 mod f.
std::uint64_t poly_order(const Poly& f, const PrimeField& base);
bool is_irreducible(const Poly& f, const PrimeField& base);
/// Throws on reducible input.
bool is_primitive(const Poly& f, const PrimeField& base);

/// Least monic irreducible polynomial (in poly_less order) of the given
/// degree and order.
Poly find_irreducible_with_order(const PrimeField& base, std::size_t degree,
                                 std::uint64_t order);

/// Least primitive polynomial of the given degree.
Poly least_primitive(const PrimeField& base, std::size_t degree);

/// Quotient ring F_q[x]/(f) for monic f with f(0) != 0.
///
/// Elements are addressed by a packed index sum_i c_i q^i, which is how the
/// analyzers key their tables. When f is primitive the context holds the
/// power table of alpha = x mod f and its inverse (the discrete log).
class FieldCtx {
 public:
  /// Upper bound on the ring size for which tables are built.
  static constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

  static std::shared_ptr<const FieldCtx> make(const Poly& modulus);

  const PrimeField& base() const noexcept { return base_; }
  const Poly& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  bool is_irreducible() const noexcept { return irreducible_; }
  bool is_primitive() const noexcept { return primitive_; }
  /// Order of x in the unit group.
  std::uint64_t order() const noexcept { return order_; }

  std::uint32_t pack(std::span<const Elem> coeffs) const;
  std::vector<Elem> unpack(std::uint32_t index) const;

  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_x_index(std::uint32_t a) const;

  /// Index of alpha^e (primitive contexts only).
  std::uint32_t exp_index(std::uint64_t e) const;
  /// Discrete log of a nonzero element (primitive contexts only).
  std::uint64_t dlog_index(std::uint32_t a) const;

 private:
  FieldCtx(PrimeField base, Poly modulus);

  PrimeField base_;
  Poly modulus_;
  std::size_t n_ = 0;
  std::uint64_t size_ = 0;
  bool irreducible_ = false;
  bool primitive_ = false;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Element v_0 + v_1 x + ... + v_{n-1} x^{n-1} of a quotient ring.
class RingElem {
 public:
  RingElem(FieldCtxPtr ctx, std::vector<Elem> coeffs);

  static RingElem zero(FieldCtxPtr ctx);
  static RingElem one(FieldCtxPtr ctx);
  /// x^e mod f.
  static RingElem x_pow(FieldCtxPtr ctx, std::uint64_t e);
  static RingElem from_index(FieldCtxPtr ctx, std::uint32_t index);

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  const FieldCtxPtr& ctx_ptr() const noexcept { return ctx_; }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  std::uint32_t index() const { return ctx_->pack(c_); }
  Poly to_poly() const { return Poly(ctx_->base().q(), c_); }

  bool is_zero() const noexcept;
  bool is_unit() const;

  /// Throws "non-unit divisor" for zero divisors.
  RingElem inverse() const;
  RingElem pow(std::uint64_t e) const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator/(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  FieldCtxPtr ctx_;
  std::vector<Elem> c_;
};

enum class RingOp { add, mul, inv, div };

/// Dispatches one ring operation; for RingOp::inv the second operand is
/// ignored.
RingElem ring_arith(const RingElem& a, const RingElem& b, RingOp op);

/// phi(v) = sum_i v_i alpha^i.
RingElem phi(std::span<const Elem> v, const FieldCtxPtr& ctx);
std::vector<Elem> phi_inv(const RingElem& u);

/// log_alpha(u) in Z_{q^n - 1}.
std::uint64_t dlog(const RingElem& u);

}  // namespace coc
