#include "coc/spread.hpp"

#include <functional>

namespace coc {

std::uint64_t spread_size(unsigned q, std::size_t k, std::size_t n) {
  if (k == 0 || n == 0 || n % k != 0)
    throw Error("spread needs k | n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  return (ipow(q, static_cast<unsigned>(n)) - 1) / (ipow(q, static_cast<unsigned>(k)) - 1);
}

namespace {

Poly resolve_poly(const SpreadSpec& spec) {
  const PrimeField F(spec.q);
  if (!spec.poly) return least_primitive(F, spec.n);
  const Poly& p = *spec.poly;
  if (p.q() != spec.q) throw Error("spread polynomial is over a different field");
  if (!p.degree() || *p.degree() != spec.n)
    throw Error("spread polynomial must have degree n = " + std::to_string(spec.n));
  if (!p.is_monic() || !is_irreducible(p, F) || !is_primitive(p, F))
    throw Error("spread polynomial " + p.to_string() + " is not primitive");
  return p;
}

}  // namespace

std::vector<Vec> spread_basis(const SpreadSpec& spec) {
  const std::uint64_t c = spread_size(spec.q, spec.k, spec.n);
  const auto ctx = FieldCtx::make(resolve_poly(spec));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < spec.k; ++i) rows.push_back(ctx->unpack(ctx->exp_index(i * c)));
  return rows;
}

CyclicOrbitCode build_spread(const SpreadSpec& spec) {
  const Poly p = resolve_poly(spec);
  SpreadSpec resolved = spec;
  resolved.poly = p;
  return CyclicOrbitCode(ElementaryDivisorSpec{spec.q, {{p, 1}}}, Subspace::span(spec.q, spec.n, spread_basis(resolved)));
}

CyclicOrbitCode build_nonprimitive_spread(const Poly& p, std::size_t k) {
  const unsigned q = p.q();
  const PrimeField F(q);
  if (!p.degree() || !p.is_monic() || !is_irreducible(p, F)) throw Error("non-primitive spread needs a monic irreducible polynomial");
  const std::size_t n = *p.degree();
  const std::uint64_t want = spread_size(q, k, n);
  const auto ctx = FieldCtx::make(p);
  if (ctx->order() != want)
    throw Error("ord(p) = " + std::to_string(ctx->order()) + " but a spread needs " + std::to_string(want));

  // orbit id of every nonzero element under multiplication by alpha
  std::vector<std::uint32_t> orbit(ctx->size(), 0);
  std::uint32_t next_id = 0;
  for (std::uint32_t s = 1; s < ctx->size(); ++s) {
    if (orbit[s]) continue;
    ++next_id;
    std::uint32_t cur = s;
    do {
      orbit[cur] = next_id;
      cur = ctx->mul_x_index(cur);
    } while (cur != s);
  }

  auto add_vec = [&](std::uint32_t a, std::uint32_t b, Elem scalar) {
    const auto va = ctx->unpack(a), vb = ctx->unpack(b);
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = F.add(va[i], F.mul(scalar, vb[i]));
    return ctx->pack(out);
  };

  std::vector<std::uint32_t> span{0};  // elements of the current subspace
  std::vector<bool> used(next_id + 1, false);
  std::vector<std::uint32_t> chosen;
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t from) -> bool {
    if (chosen.size() == k) return true;
    for (std::uint32_t v = from; v < ctx->size(); ++v) {
      std::vector<std::uint32_t> fresh;
      bool ok = true;
      for (Elem c = 1; c < q && ok; ++c)
        for (auto s : span) {
          const auto w = add_vec(s, v, c);
          if (w == 0 || used[orbit[w]]) {
            ok = false;
            break;
          }
          for (auto f : fresh)
            if (orbit[f] == orbit[w]) ok = false;
          if (!ok) break;
          fresh.push_back(w);
        }
      if (!ok) continue;
      for (auto w : fresh) used[orbit[w]] = true;
      const auto saved = span.size();
      span.insert(span.end(), fresh.begin(), fresh.end());
      chosen.push_back(v);
      if (dfs(v + 1)) return true;
      chosen.pop_back();
      span.resize(saved);
      for (auto w : fresh) used[orbit[w]] = false;
    }
    return false;
  };
  if (!dfs(1)) throw Error("no start subspace meets every orbit at most once");
  std::vector<Vec> rows;
  for (auto v : chosen) rows.push_back(ctx->unpack(v));
  return CyclicOrbitCode(ElementaryDivisorSpec{q, {{p, 1}}}, Subspace::span(q, n, rows));
}

bool verify_spread(const CyclicOrbitCode& code, std::uint64_t cap) {
  const std::size_t n = code.n(), k = code.k();
  if (n % k != 0) return false;
  const auto orbit = enumerate_orbit(code, cap);
  if (orbit.size() != spread_size(code.q(), k, n)) return false;
  const unsigned q = code.q();
  std::vector<bool> covered(ipow(q, static_cast<unsigned>(n)), false);
  for (const auto& w : orbit)
    for (const auto& v : w.nonzero_elements()) {
      std::uint64_t idx = 0;
      for (std::size_t i = n; i-- > 0;) idx = idx * q + v[i];
      if (covered[idx]) return false;
      covered[idx] = true;
    }
  return true;
}

}  // namespace coc
