#include "coc/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace coc {

Mat::Mat(unsigned q, std::size_t rows, std::size_t cols) : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat::Mat(unsigned q, std::size_t rows, std::size_t cols, std::vector<Elem> row_major)
    : q_(q), rows_(rows), cols_(cols), a_(std::move(row_major)) {
  if (a_.size() != rows * cols) throw Error("matrix entry count does not match its shape");
  for (auto& x : a_) x = static_cast<Elem>(x % q_);
}

Mat Mat::identity(unsigned q, std::size_t n) {
  Mat m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(unsigned q, const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rows[r][c] % q);
  }
  return m;
}

Mat Mat::parse(unsigned q, std::string_view text) {
  std::vector<Vec> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const bool blank = std::all_of(line.begin(), line.end(), [](char ch) {
      return ch == ' ' || ch == '\t' || ch == '\r';
    });
    if (!blank) {
      try {
        Vec v;
        const bool spaced = line.find_first_of(" \t") != std::string_view::npos;
        if (!spaced && q <= 10) {
          for (char ch : line) {
            if (ch == '\r') continue;
            if (ch < '0' || ch > '9' || static_cast<unsigned>(ch - '0') >= q)
              throw Error(std::string("invalid digit '") + ch + "'");
            v.push_back(static_cast<Elem>(ch - '0'));
          }
        } else {
          std::istringstream is{std::string(line)};
          std::string tok;
          while (is >> tok) {
            unsigned val = 0;
            for (char ch : tok) {
              if (ch < '0' || ch > '9') throw Error("invalid token '" + tok + "'");
              val = val * 10 + static_cast<unsigned>(ch - '0');
              if (val >= 1000) break;
            }
            if (val >= q) throw Error("entry '" + tok + "' out of range for q = " + std::to_string(q));
            v.push_back(static_cast<Elem>(val));
          }
        }
        rows.push_back(std::move(v));
      } catch (const Error& e) {
        throw Error("matrix line " + std::to_string(rows.size() + 1) + ": " + e.what());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw Error("matrix: no rows");
  const std::size_t cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != cols)
      throw Error("matrix line " + std::to_string(r + 1) + ": expected " + std::to_string(cols) + " entries");
  return from_rows(q, rows, cols);
}

bool Mat::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << unsigned{(*this)(r, c)};
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.q() != b.q()) throw Error("matrices over different fields");
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  const unsigned q = a.q();
  Mat out(q, a.rows(), b.cols());
  std::vector<unsigned> acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const unsigned x = a(r, k);
      if (x == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t c = 0; c < b.cols(); ++c) acc[c] += x * brow[c];
    }
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = static_cast<Elem>(acc[c] % q);
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum shape mismatch");
  std::vector<Elem> d(a.data().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<Elem>((a.data()[i] + b.data()[i]) % a.q());
  return Mat(a.q(), a.rows(), a.cols(), std::move(d));
}

Mat scale(const Mat& a, Elem c) {
  std::vector<Elem> d(a.data());
  for (auto& x : d) x = static_cast<Elem>((unsigned{x} * c) % a.q());
  return Mat(a.q(), a.rows(), a.cols(), std::move(d));
}

Mat transpose(const Mat& a) {
  Mat t(a.q(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

Mat mat_pow(const Mat& a, std::uint64_t e) {
  if (!a.square()) throw Error("matrix power of a non-square matrix");
  Mat result = Mat::identity(a.q(), a.rows());
  Mat b = a;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

RrefResult rref(const Mat& m) {
  const PrimeField F(m.q());
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Elem inv = F.inv(a(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

bool is_invertible(const Mat& m) { return m.square() && rank(m) == m.rows(); }

Mat inverse(const Mat& a) {
  if (!a.square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Mat aug(a.q(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  auto res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] != n - 1) throw Error("singular matrix");
  return column_block(res.reduced, n, n);
}

Mat vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw Error("vstack column mismatch");
  std::vector<Elem> d(top.data());
  d.insert(d.end(), bottom.data().begin(), bottom.data().end());
  return Mat(top.q(), top.rows() + bottom.rows(), top.cols(), std::move(d));
}

Mat block_diag(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error("block_diag of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_field(b, blocks.front());
    rows += b.rows();
    cols += b.cols();
  }
  Mat m(blocks.front().q(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Mat column_block(const Mat& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) throw Error("column block out of range");
  Mat m(a.q(), a.rows(), count);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = a(r, first + c);
  return m;
}

Vec row_times(std::span<const Elem> v, const Mat& a) {
  if (v.size() != a.rows()) throw Error("vector-matrix shape mismatch");
  std::vector<unsigned> acc(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const auto row = a.row(k);
    for (std::size_t c = 0; c < a.cols(); ++c) acc[c] += unsigned{v[k]} * row[c];
  }
  Vec out(a.cols());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = static_cast<Elem>(acc[c] % a.q());
  return out;
}

Mat poly_eval(const Poly& p, const Mat& a) {
  if (!a.square()) throw Error("polynomial of a non-square matrix");
  Mat result(a.q(), a.rows(), a.cols());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    result = result * a;
    if (c[i] != 0)
      for (std::size_t d = 0; d < a.rows(); ++d) result(d, d) = static_cast<Elem>((result(d, d) + c[i]) % a.q());
  }
  return result;
}

Mat right_kernel(const Mat& a) {
  const auto res = rref(a);
  const PrimeField F(a.q());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec w(a.cols(), 0);
    w[f] = 1;
    for (std::size_t i = 0; i < res.rank; ++i) w[res.pivots[i]] = F.neg(res.reduced(i, f));
    rows.push_back(std::move(w));
  }
  return Mat::from_rows(a.q(), rows, a.cols());
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const Mat& generators) {
  auto res = rref(generators);
  Subspace s;
  Mat b(generators.q(), res.rank, generators.cols());
  for (std::size_t r = 0; r < res.rank; ++r)
    for (std::size_t c = 0; c < generators.cols(); ++c) b(r, c) = res.reduced(r, c);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(res.pivots);
  return s;
}

Subspace Subspace::span(unsigned q, std::size_t n, const std::vector<Vec>& rows) {
  return span(Mat::from_rows(q, rows, n));
}

Subspace Subspace::zero(unsigned q, std::size_t n) { return span(Mat(q, 0, n)); }

Subspace Subspace::full(unsigned q, std::size_t n) { return span(Mat::identity(q, n)); }

Subspace Subspace::transform(const Mat& a) const {
  if (a.rows() != ambient_dim()) throw Error("transform: ambient dimension mismatch");
  if (dim() == 0) return zero(q(), a.cols());
  return span(basis_ * a);
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw Error("contains: ambient dimension mismatch");
  // Reduce v against the RREF rows using their pivots.
  const PrimeField F(q());
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(c, basis_(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

std::vector<Vec> Subspace::nonzero_elements() const {
  const unsigned qq = q();
  const std::size_t k = dim(), n = ambient_dim();
  const std::uint64_t total = ipow(qq, static_cast<unsigned>(k));
  std::vector<Vec> out;
  out.reserve(total ? total - 1 : 0);
  std::vector<Elem> coef(k, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    // increment base-q counter
    for (std::size_t i = 0; i < k; ++i) {
      if (++coef[i] < qq) break;
      coef[i] = 0;
    }
    Vec v(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Elem>((v[j] + unsigned{coef[i]} * basis_(i, j)) % qq);
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.q() != v.q()) throw Error("ambient space mismatch");
}

}  // namespace

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return u.dim() + v.dim() - rank(vstack(u.basis(), v.basis()));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::span(vstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  // (U cap V) = (U^perp + V^perp)^perp
  return dual(subspace_sum(dual(u), dual(v)));
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
  return static_cast<unsigned>(u.dim() + v.dim() - 2 * intersection_dim(u, v));
}

Subspace dual(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.q(), u.ambient_dim());
  return Subspace::span(right_kernel(u.basis()));
}

// ---------------------------------------------------------------------------

Mat companion_matrix(const Poly& f) {
  if (!f.degree() || *f.degree() == 0) throw Error("companion matrix needs a polynomial of degree >= 1");
  if (!f.is_monic()) throw Error("companion matrix needs a monic polynomial");
  const std::size_t n = *f.degree();
  const PrimeField F(f.q());
  Mat m(f.q(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = F.neg(f.coeff(j));
  return m;
}

std::uint64_t matrix_order(const Mat& m) {
  if (!is_invertible(m)) throw Error("matrix_order of a singular matrix");
  const std::uint64_t bound = ipow(m.q(), static_cast<unsigned>(m.rows()));
  Mat cur = m;
  for (std::uint64_t t = 1; t <= bound; ++t) {
    if (cur.is_identity()) return t;
    cur = cur * m;
  }
  throw Error("matrix_order: order exceeds q^n");
}

std::uint64_t matrix_order(const Mat& m, std::uint64_t known_multiple) {
  if (!is_invertible(m)) throw Error("matrix_order of a singular matrix");
  if (known_multiple == 0 || !mat_pow(m, known_multiple).is_identity()) return matrix_order(m);
  std::uint64_t e = known_multiple;
  for (std::uint64_t p : prime_factors(known_multiple))
    while (e % p == 0 && mat_pow(m, e / p).is_identity()) e /= p;
  return e;
}

RingElem psi(const Mat& a, const FieldCtxPtr& ctx) {
  const std::size_t n = ctx->degree();
  if (!a.square() || a.rows() != n || a.q() != ctx->base().q()) throw Error("psi: dimension mismatch");
  // e_0 P^i = e_i for i < n, so the coefficients lambda are the first row.
  Vec lambda(a.row(0).begin(), a.row(0).end());
  RingElem u(ctx, lambda);
  if (!(psi_inv(u) == a)) throw Error("psi: matrix is not a polynomial in the companion matrix");
  return u;
}

Mat psi_inv(const RingElem& u) {
  const Mat p = companion_matrix(u.ctx().modulus());
  return poly_eval(u.to_poly(), p);
}

}  // namespace coc
