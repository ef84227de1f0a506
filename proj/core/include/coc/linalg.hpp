#pragma once

// Dense linear algebra over F_q and subspaces of F_q^n kept in reduced row
// echelon form. Vectors are rows; matrices act from the right (U A).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coc/gf.hpp"

namespace coc {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(unsigned q, std::size_t rows, std::size_t cols);
  Mat(unsigned q, std::size_t rows, std::size_t cols, std::vector<Elem> row_major);

  static Mat identity(unsigned q, std::size_t n);
  static Mat from_rows(unsigned q, const std::vector<Vec>& rows, std::size_t cols);
  /// One row per line, digits separated by spaces (or packed when q <= 10).
  static Mat parse(unsigned q, std::string_view text);

  unsigned q() const noexcept { return q_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {a_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return a_; }

  bool is_identity() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  unsigned q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Elem c);
Mat transpose(const Mat& a);
Mat mat_pow(const Mat& a, std::uint64_t e);
/// Throws on singular input.
Mat inverse(const Mat& a);
Mat vstack(const Mat& top, const Mat& bottom);
Mat block_diag(std::span<const Mat> blocks);
/// Columns [first, first + count).
Mat column_block(const Mat& a, std::size_t first, std::size_t count);
/// v A for a row vector v.
Vec row_times(std::span<const Elem> v, const Mat& a);
/// p(A) for a square matrix A.
Mat poly_eval(const Poly& p, const Mat& a);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
bool is_invertible(const Mat& m);
/// Basis (as rows) of {x : A x^T = 0}, i.e. the right kernel.
Mat right_kernel(const Mat& a);

/// A subspace of F_q^n stored as the unique RREF of any spanning set, so
/// equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const Mat& generators);
  static Subspace span(unsigned q, std::size_t n, const std::vector<Vec>& rows);
  static Subspace zero(unsigned q, std::size_t n);
  static Subspace full(unsigned q, std::size_t n);

  unsigned q() const noexcept { return basis_.q(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// U A.
  Subspace transform(const Mat& a) const;
  bool contains(std::span<const Elem> v) const;

  /// The q^k - 1 nonzero vectors, ordered by their coefficient vector on
  /// the basis read as a base-q number (first basis row least significant).
  std::vector<Vec> nonzero_elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis_.data() < b.basis_.data();
  }

 private:
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t intersection_dim(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
/// dim U + dim V - 2 dim(U cap V).
unsigned subspace_distance(const Subspace& u, const Subspace& v);
/// Orthogonal complement under the standard dot product.
Subspace dual(const Subspace& u);

/// n x n matrix with ones on the superdiagonal and -f_0, ..., -f_{n-1} in
/// the last row; v M_f corresponds to v(x) x mod f.
Mat companion_matrix(const Poly& f);

/// Least t >= 1 with M^t = I by repeated multiplication.
std::uint64_t matrix_order(const Mat& m);
/// Same, given any multiple of the order (divisor descent on it).
std::uint64_t matrix_order(const Mat& m, std::uint64_t known_multiple);

/// psi(sum lambda_i P^i) = sum lambda_i alpha^i where P is the companion
/// matrix of the context modulus. Throws when A is not in F_q[P].
RingElem psi(const Mat& a, const FieldCtxPtr& ctx);
Mat psi_inv(const RingElem& u);

}  // namespace coc
