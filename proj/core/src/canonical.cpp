#include "coc/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coc {

std::size_t ElementaryDivisorSpec::dimension() const {
  std::size_t n = 0;
  for (auto s : block_sizes()) n += s;
  return n;
}

std::vector<std::size_t> ElementaryDivisorSpec::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) {
    if (!b.p.degree()) throw Error("elementary divisor with zero polynomial");
    out.push_back(*b.p.degree() * b.exp);
  }
  return out;
}

Mat build_generator(const ElementaryDivisorSpec& spec, bool require_invertible) {
  if (spec.blocks.empty()) throw Error("generator spec has no blocks");
  const PrimeField F(spec.q);
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    const std::string where = "block " + std::to_string(i) + ": ";
    if (b.p.q() != spec.q) throw Error(where + "polynomial over a different field");
    if (b.exp == 0) throw Error(where + "exponent must be >= 1");
    if (!b.p.degree() || *b.p.degree() == 0) throw Error(where + "polynomial must be nonconstant");
    if (!b.p.is_monic()) throw Error(where + "polynomial must be monic");
    if (!is_irreducible(b.p, F)) throw Error(where + "polynomial " + b.p.to_string() + " is reducible");
    if (require_invertible && b.p.coeff(0) == 0) throw Error(where + "p(0) = 0 gives a singular block");
    mats.push_back(companion_matrix(poly_pow(b.p, b.exp)));
  }
  return block_diag(mats);
}

std::uint64_t elementary_divisor_order(const ElementaryDivisor& d, const PrimeField& base) {
  std::uint64_t ord = poly_order(d.p, base);
  std::uint64_t pw = 1;
  while (pw < d.exp) pw *= base.q();
  return ord * pw;
}

std::uint64_t generator_order(const ElementaryDivisorSpec& spec) {
  const PrimeField F(spec.q);
  std::uint64_t l = 1;
  for (const auto& b : spec.blocks) l = std::lcm(l, elementary_divisor_order(b, F));
  return l;
}

std::vector<std::vector<unsigned>> MatrixType::partitions() const {
  std::vector<std::vector<unsigned>> out;
  for (const auto& e : entries) out.push_back(e.partition);
  return out;
}

std::vector<std::uint64_t> MatrixType::orders() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.push_back(e.order);
  return out;
}

std::string MatrixType::to_string() const {
  std::ostringstream os;
  os << "e=(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << '(';
    for (std::size_t j = 0; j < entries[i].partition.size(); ++j) {
      if (j) os << ',';
      os << entries[i].partition[j];
    }
    os << ')';
  }
  os << ") o=(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i].order;
  }
  os << ')';
  return os.str();
}

Poly characteristic_polynomial(const Mat& a) {
  if (!a.square()) throw Error("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const unsigned q = a.q();
  const PrimeField F(q);
  Mat h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    const std::size_t col = m - 1;
    std::size_t piv = m;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Elem inv = F.inv(h(m, col));
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, col) == 0) continue;
      const Elem t = F.mul(h(i, col), inv);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(t, h(m, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = F.add(h(r, m), F.mul(t, h(r, i)));
    }
  }
  std::vector<Poly> p(n + 1, Poly(q));
  p[0] = Poly::constant(q, 1);
  const Poly x = Poly::x(q);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (x - Poly::constant(q, h(m - 1, m - 1))) * p[m - 1];
    Elem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h(m - i, m - i - 1));
      const Elem c = F.mul(h(m - i - 1, m - 1), t);
      if (c != 0) p[m] = p[m] - scale(p[m - i - 1], c);
    }
  }
  return p[n];
}

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) {
  if (!f.degree() || *f.degree() == 0) throw Error("factor: polynomial must be nonconstant");
  if (!f.is_monic()) throw Error("factor: polynomial must be monic");
  const unsigned q = f.q();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f;
  for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
    const std::uint64_t count = ipow(q, static_cast<unsigned>(d));
    for (std::uint64_t i = 0; i < count && 2 * d <= *rest.degree(); ++i) {
      // Every smaller factor is already divided out, so a divisor of this
      // degree is irreducible.
      const Poly p = monic_poly(q, d, i);
      unsigned mult = 0;
      for (;;) {
        auto [quo, rem] = divmod(rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult > 0) out.emplace_back(p, mult);
    }
  }
  if (rest.degree() && *rest.degree() > 0) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == rest; });
    if (it != out.end())
      ++it->second;
    else
      out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

MatrixType matrix_type(const Mat& a, std::size_t max_dim) {
  if (!a.square()) throw Error("matrix_type of a non-square matrix");
  if (a.rows() > max_dim)
    throw Error("matrix_type: size " + std::to_string(a.rows()) + " exceeds bound " + std::to_string(max_dim));
  if (!is_invertible(a)) throw Error("matrix_type of a singular matrix");
  const std::size_t n = a.rows();
  const PrimeField F(a.q());
  MatrixType type;
  for (const auto& [p, mult] : factor(characteristic_polynomial(a))) {
    const std::size_t d = *p.degree();
    const Mat b = poly_eval(p, a);
    // blocks_at_least[j] = number of blocks p^e with e >= j + 1
    std::vector<unsigned> blocks_at_least;
    Mat bj = b;
    std::size_t prev = 0;
    for (unsigned j = 1;; ++j) {
      const std::size_t nullity = (n - rank(bj)) / d;
      if (nullity == prev) throw Error("matrix_type: kernel sequence stalled (inconsistent factorization)");
      blocks_at_least.push_back(static_cast<unsigned>(nullity - prev));
      prev = nullity;
      if (nullity == mult) break;
      if (j > mult) throw Error("matrix_type: kernel sequence overran the multiplicity");
      bj = bj * b;
    }
    std::vector<unsigned> partition;
    for (std::size_t j = blocks_at_least.size(); j-- > 0;) {
      const unsigned next = j + 1 < blocks_at_least.size() ? blocks_at_least[j + 1] : 0;
      for (unsigned c = next; c < blocks_at_least[j]; ++c) partition.push_back(static_cast<unsigned>(j + 1));
    }
    type.entries.push_back({poly_order(p, F), d, std::move(partition)});
  }
  std::sort(type.entries.begin(), type.entries.end());
  return type;
}

bool same_group_type(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("same_group_type: size mismatch");
  return matrix_type(a) == matrix_type(b);
}

}  // namespace coc
