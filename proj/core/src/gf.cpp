#include "coc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace coc {

__extension__ typedef unsigned __int128 u128;

// ---------------------------------------------------------------------------
// integers

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) throw Error("multiplicative order: base not coprime to modulus");
  std::uint64_t x = a % m;
  std::uint64_t e = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<u128>(x) * a) % m);
    ++e;
  }
  return e;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(unsigned q) : q_(q) {
  if (!is_prime(q)) throw Error("base field order " + std::to_string(q) + " is not prime");
  if (q > kMaxPrime) throw Error("base field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxPrime));
  inverse_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    // a^(q-2)
    unsigned r = 1, b = a, e = q - 2;
    while (e > 0) {
      if (e & 1) r = r * b % q;
      b = b * b % q;
      e >>= 1;
    }
    inverse_[a] = static_cast<Elem>(r);
  }
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0 || a >= q_) throw Error("inverse of zero in F_" + std::to_string(q_));
  return inverse_[a];
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(unsigned q, std::vector<Elem> ascending) : q_(q), c_(std::move(ascending)) {
  for (auto& c : c_) c = static_cast<Elem>(c % q_);
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(unsigned q, std::size_t degree, Elem c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(q, std::move(v));
}

namespace {

std::vector<Elem> parse_digits(unsigned q, std::string_view text, const char* what) {
  std::vector<Elem> out;
  const bool has_space = std::any_of(text.begin(), text.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  });
  auto push = [&](std::string_view tok) {
    unsigned v = 0;
    if (tok.empty()) return;
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(std::string(what) + ": invalid token '" + std::string(tok) + "'");
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v >= 1000) break;
    }
    if (v >= q)
      throw Error(std::string(what) + ": coefficient " + std::string(tok) + " out of range for q = " +
                  std::to_string(q));
    out.push_back(static_cast<Elem>(v));
  };
  if (!has_space && q <= 10) {
    for (char ch : text) push(std::string_view(&ch, 1));
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      push(text.substr(i, j - i));
      i = j;
    }
  }
  if (out.empty()) throw Error(std::string(what) + ": empty coefficient list");
  return out;
}

}  // namespace

Poly Poly::parse(unsigned q, std::string_view text) {
  return Poly(q, parse_digits(q, text, "polynomial"));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << unsigned{c_[i]};
  }
  return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

Poly monic_poly(unsigned q, std::size_t degree, std::uint64_t index) {
  std::vector<Elem> c(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    c[i] = static_cast<Elem>(index % q);
    index /= q;
  }
  c[degree] = 1;
  return Poly(q, std::move(c));
}

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (a.q() != b.q()) throw Error("polynomials over different fields");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const unsigned q = a.q();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Elem>((a.coeff(i) + b.coeff(i)) % q);
  return Poly(q, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const unsigned q = a.q();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Elem>((a.coeff(i) + q - b.coeff(i)) % q);
  return Poly(q, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const unsigned q = a.q();
  if (a.is_zero() || b.is_zero()) return Poly(q);
  std::vector<unsigned> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      acc[i + j] = (acc[i + j] + unsigned{a.coeffs()[i]} * b.coeffs()[j]) % q;
  }
  return Poly(q, std::vector<Elem>(acc.begin(), acc.end()));
}

Poly scale(const Poly& a, Elem c) {
  std::vector<Elem> v = a.coeffs();
  for (auto& x : v) x = static_cast<Elem>((unsigned{x} * c) % a.q());
  return Poly(a.q(), std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error("polynomial division by zero");
  const PrimeField F(a.q());
  const std::size_t db = *b.degree();
  std::vector<Elem> r = a.coeffs();
  if (r.size() <= db) return {Poly(a.q()), a};
  std::vector<Elem> quo(r.size() - db, 0);
  const Elem lead_inv = F.inv(b.leading());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs()[j]));
  }
  r.resize(db);
  return {Poly(a.q(), std::move(quo)), Poly(a.q(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

namespace {

Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, PrimeField(a.q()).inv(a.leading()));
}

// Returns (g, s) with s*a = g mod m, g = gcd(a, m) monic.
std::pair<Poly, Poly> inverse_gcd(const Poly& a, const Poly& m) {
  const unsigned q = a.q();
  Poly r0 = m, r1 = a % m;
  Poly s0(q), s1 = Poly::constant(q, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    Poly s2 = s0 - quo * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  const Elem li = PrimeField(q).inv(r0.leading());
  return {scale(r0, li), scale(s0, li)};
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& m) {
  Poly result = Poly::constant(base.q(), 1) % m;
  Poly b = base % m;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    exp >>= 1;
    if (exp) b = (b * b) % m;
  }
  return result;
}

Poly poly_pow(const Poly& base, unsigned exp) {
  Poly r = Poly::constant(base.q(), 1);
  for (unsigned i = 0; i < exp; ++i) r = r * base;
  return r;
}

namespace {

void check_order_input(const Poly& f, const PrimeField& base) {
  if (f.q() != base.q()) throw Error("polynomial is not over the given base field");
  if (!f.degree() || *f.degree() == 0) throw Error("order undefined for zero or constant polynomial");
  if (!f.is_monic()) throw Error("order requires a monic polynomial");
  if (f.coeff(0) == 0) throw Error("order undefined when f(0) = 0");
}

}  // namespace

bool is_irreducible(const Poly& f, const PrimeField& base) {
  if (f.q() != base.q()) throw Error("polynomial is not over the given base field");
  if (!f.degree() || *f.degree() == 0) throw Error("irreducibility test needs a nonconstant polynomial");
  const std::size_t n = *f.degree();
  if (n == 1) return true;
  const Poly m = make_monic(f);
  const Poly x = Poly::x(base.q());
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod(h, base.q(), m);
    if (*gcd(h - x, m).degree() != 0) return false;
  }
  return true;
}

std::uint64_t poly_order(const Poly& f, const PrimeField& base) {
  check_order_input(f, base);
  const std::size_t m = *f.degree();
  const Poly x = Poly::x(base.q());
  const Poly one = Poly::constant(base.q(), 1);
  if (is_irreducible(f, base)) {
    std::uint64_t e = ipow(base.q(), static_cast<unsigned>(m)) - 1;
    for (std::uint64_t p : prime_factors(e)) {
      while (e % p == 0 && powmod(x, e / p, f) == one) e /= p;
    }
    return e;
  }
  const std::uint64_t bound = ipow(base.q(), static_cast<unsigned>(m)) - 1;
  Poly cur = x % f;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (cur == one) return e;
    cur = (cur * x) % f;
  }
  throw Error("poly_order: no order found below q^deg - 1");
}

bool is_primitive(const Poly& f, const PrimeField& base) {
  if (!is_irreducible(f, base)) throw Error("is_primitive: polynomial is reducible");
  if (f.coeff(0) == 0) return false;  // only x itself
  const Poly g = make_monic(f);
  return poly_order(g, base) == ipow(base.q(), static_cast<unsigned>(*g.degree())) - 1;
}

Poly find_irreducible_with_order(const PrimeField& base, std::size_t degree, std::uint64_t order) {
  const unsigned q = base.q();
  if (degree == 0 || order == 0) throw Error("no such polynomial: degree and order must be positive");
  const std::uint64_t group = ipow(q, static_cast<unsigned>(degree)) - 1;
  if (group % order != 0 || multiplicative_order(q, order) != degree)
    throw Error("no such polynomial: no irreducible of degree " + std::to_string(degree) + " has order " +
                std::to_string(order));
  const std::uint64_t count = ipow(q, static_cast<unsigned>(degree));
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly p = monic_poly(q, degree, i);
    if (p.coeff(0) == 0) continue;
    if (is_irreducible(p, base) && poly_order(p, base) == order) return p;
  }
  throw Error("no such polynomial: exhaustive scan found none");
}

Poly least_primitive(const PrimeField& base, std::size_t degree) {
  return find_irreducible_with_order(base, degree, ipow(base.q(), static_cast<unsigned>(degree)) - 1);
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(PrimeField base, Poly modulus) : base_(std::move(base)), modulus_(std::move(modulus)) {}

std::shared_ptr<const FieldCtx> FieldCtx::make(const Poly& modulus) {
  PrimeField base(modulus.q());
  if (!modulus.degree() || *modulus.degree() == 0) throw Error("ring modulus must be nonconstant");
  if (!modulus.is_monic()) throw Error("ring modulus must be monic");
  if (modulus.coeff(0) == 0) throw Error("ring modulus must have nonzero constant term");
  std::shared_ptr<FieldCtx> ctx(new FieldCtx(base, modulus));
  ctx->n_ = *modulus.degree();
  if (ctx->n_ > 32) throw Error("ring too large");
  long double approx = 1;
  for (std::size_t i = 0; i < ctx->n_; ++i) approx *= base.q();
  if (approx > static_cast<long double>(kMaxTableSize)) throw Error("ring too large for table-based arithmetic");
  ctx->size_ = ipow(base.q(), static_cast<unsigned>(ctx->n_));
  ctx->irreducible_ = coc::is_irreducible(modulus, base);
  ctx->order_ = poly_order(modulus, base);
  ctx->primitive_ = ctx->irreducible_ && ctx->order_ == ctx->size_ - 1;
  if (ctx->primitive_) {
    ctx->exp_.resize(ctx->order_);
    ctx->log_.assign(ctx->size_, 0);
    std::uint32_t cur = 1;  // packed index of the constant 1
    for (std::uint64_t e = 0; e < ctx->order_; ++e) {
      ctx->exp_[e] = cur;
      ctx->log_[cur] = static_cast<std::uint32_t>(e);
      cur = ctx->mul_x_index(cur);
    }
  }
  return ctx;
}

std::uint32_t FieldCtx::pack(std::span<const Elem> coeffs) const {
  if (coeffs.size() != n_) throw Error("dimension mismatch: expected " + std::to_string(n_) + " coordinates");
  std::uint64_t idx = 0;
  for (std::size_t i = n_; i-- > 0;) idx = idx * base_.q() + coeffs[i];
  return static_cast<std::uint32_t>(idx);
}

std::vector<Elem> FieldCtx::unpack(std::uint32_t index) const {
  std::vector<Elem> c(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    c[i] = static_cast<Elem>(index % base_.q());
    index /= base_.q();
  }
  return c;
}

std::uint32_t FieldCtx::mul_x_index(std::uint32_t a) const {
  const unsigned q = base_.q();
  std::uint64_t top_weight = size_ / q;
  const Elem top = static_cast<Elem>(a / top_weight);
  std::uint64_t shifted = (a % top_weight) * q;
  if (top == 0) return static_cast<std::uint32_t>(shifted);
  // subtract top * f_i at position i for i < n (x^n = -sum f_i x^i)
  std::vector<Elem> c = unpack(static_cast<std::uint32_t>(shifted));
  for (std::size_t i = 0; i < n_; ++i) c[i] = base_.sub(c[i], base_.mul(top, modulus_.coeff(i)));
  return pack(c);
}

std::uint32_t FieldCtx::mul_index(std::uint32_t a, std::uint32_t b) const {
  if (primitive_) {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % order_];
  }
  // sum_i a_i (b x^i)
  const auto ca = unpack(a);
  std::uint32_t shifted = b;
  std::vector<Elem> sum(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (ca[i] != 0) {
      const auto cb = unpack(shifted);
      for (std::size_t j = 0; j < n_; ++j) sum[j] = base_.add(sum[j], base_.mul(ca[i], cb[j]));
    }
    shifted = mul_x_index(shifted);
  }
  return pack(sum);
}

std::uint32_t FieldCtx::exp_index(std::uint64_t e) const {
  if (!primitive_) throw Error("power table requires a primitive modulus");
  return exp_[e % order_];
}

std::uint64_t FieldCtx::dlog_index(std::uint32_t a) const {
  if (!primitive_) throw Error("discrete log requires a primitive modulus");
  if (a == 0) throw Error("discrete log of zero");
  if (a >= size_) throw Error("element index out of range");
  return log_[a];
}

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(FieldCtxPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw Error("ring element without context");
  if (c_.size() != ctx_->degree())
    throw Error("dimension mismatch: expected " + std::to_string(ctx_->degree()) + " coordinates, got " +
                std::to_string(c_.size()));
  for (auto& c : c_) c = static_cast<Elem>(c % ctx_->base().q());
}

RingElem RingElem::zero(FieldCtxPtr ctx) {
  const auto n = ctx->degree();
  return RingElem(std::move(ctx), std::vector<Elem>(n, 0));
}

RingElem RingElem::one(FieldCtxPtr ctx) {
  std::vector<Elem> c(ctx->degree(), 0);
  c[0] = 1;
  return RingElem(std::move(ctx), std::move(c));
}

RingElem RingElem::x_pow(FieldCtxPtr ctx, std::uint64_t e) {
  const unsigned q = ctx->base().q();
  Poly r = powmod(Poly::x(q), e, ctx->modulus());
  std::vector<Elem> c(ctx->degree(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
  return RingElem(std::move(ctx), std::move(c));
}

RingElem RingElem::from_index(FieldCtxPtr ctx, std::uint32_t index) {
  auto c = ctx->unpack(index);
  return RingElem(std::move(ctx), std::move(c));
}

bool RingElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Elem e) { return e == 0; });
}

bool RingElem::is_unit() const {
  if (is_zero()) return false;
  return *gcd(to_poly(), ctx_->modulus()).degree() == 0;
}

namespace {

void require_same_ctx(const RingElem& a, const RingElem& b) {
  if (&a.ctx() != &b.ctx() && a.ctx().modulus() != b.ctx().modulus())
    throw Error("ring elements from different quotient rings");
}

RingElem from_poly(const FieldCtxPtr& ctx, const Poly& p) {
  Poly r = p % ctx->modulus();
  std::vector<Elem> c(ctx->degree(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
  return RingElem(ctx, std::move(c));
}

}  // namespace

RingElem RingElem::inverse() const {
  if (is_zero()) throw Error("non-unit divisor");
  auto [g, s] = inverse_gcd(to_poly(), ctx_->modulus());
  if (!g.degree() || *g.degree() != 0) throw Error("non-unit divisor");
  return from_poly(ctx_, s);
}

RingElem RingElem::pow(std::uint64_t e) const {
  return from_poly(ctx_, powmod(to_poly(), e, ctx_->modulus()));
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ctx(a, b);
  std::vector<Elem> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx().base().add(a.c_[i], b.c_[i]);
  return RingElem(a.ctx_, std::move(c));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_ctx(a, b);
  std::vector<Elem> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx().base().sub(a.c_[i], b.c_[i]);
  return RingElem(a.ctx_, std::move(c));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ctx(a, b);
  return from_poly(a.ctx_, a.to_poly() * b.to_poly());
}

RingElem operator/(const RingElem& a, const RingElem& b) {
  require_same_ctx(a, b);
  return a * b.inverse();
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ctx().modulus() == b.ctx().modulus() && a.c_ == b.c_;
}

RingElem ring_arith(const RingElem& a, const RingElem& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::mul: return a * b;
    case RingOp::inv: return a.inverse();
    case RingOp::div: return a / b;
  }
  throw Error("unknown ring operation");
}

RingElem phi(std::span<const Elem> v, const FieldCtxPtr& ctx) {
  return RingElem(ctx, std::vector<Elem>(v.begin(), v.end()));
}

std::vector<Elem> phi_inv(const RingElem& u) { return {u.coeffs().begin(), u.coeffs().end()}; }

std::uint64_t dlog(const RingElem& u) {
  if (u.is_zero()) throw Error("discrete log of zero");
  return u.ctx().dlog_index(u.index());
}

}  // namespace coc
