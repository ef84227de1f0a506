#pragma once

#include <random>

#include "coc/linalg.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::M to_m(const coc::Mat& a) {
  oracle::M m(a.rows(), oracle::V(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

inline coc::Vec bits(std::string_view s) {
  coc::Vec v;
  for (char c : s) v.push_back(static_cast<coc::Elem>(c - '0'));
  return v;
}

inline coc::Subspace rows(unsigned q, std::size_t n, std::initializer_list<std::string_view> r) {
  std::vector<coc::Vec> v;
  for (auto s : r) v.push_back(bits(s));
  return coc::Subspace::span(q, n, v);
}

inline coc::Mat random_mat(unsigned q, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  coc::Mat m(q, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<coc::Elem>(rng() % q);
  return m;
}

inline coc::Mat random_gl(unsigned q, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_mat(q, n, n, rng);
    if (coc::is_invertible(m)) return m;
  }
}

inline coc::Subspace random_sub(unsigned q, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_mat(q, k, n, rng);
    if (coc::rank(m) == k) return coc::Subspace::span(m);
  }
}

inline oracle::Set elements(const coc::Subspace& s) {
  return oracle::span(to_m(s.basis()), static_cast<int>(s.q()), s.ambient_dim());
}

}  // namespace testutil
