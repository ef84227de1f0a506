#include "coc/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coc {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::primitive: return "primitive";
    case Regime::irreducible: return "irreducible";
    case Regime::completely_reducible: return "completely_reducible";
    case Regime::non_semisimple: return "non_semisimple";
    case Regime::general: return "general";
  }
  return "general";
}

std::string to_string(StartShape s) {
  switch (s) {
    case StartShape::single: return "single";
    case StartShape::diagonal: return "diag";
    case StartShape::concatenated: return "concat";
  }
  return "single";
}

std::string to_string(const CodeParams& p) {
  std::ostringstream os;
  os << "(" << p.cardinality << ", ";
  if (p.min_distance)
    os << *p.min_distance;
  else
    os << "undefined";
  os << ")";
  if (p.distribution) {
    os << " D=[";
    for (std::size_t i = 0; i < p.distribution->size(); ++i) os << (i ? "," : "") << (*p.distribution)[i];
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CyclicOrbitCode

namespace {

void check_start(const Mat& generator, const Subspace& start) {
  if (start.ambient_dim() != generator.rows() || start.q() != generator.q())
    throw Error("start subspace does not live in the generator's space");
  if (start.dim() == 0) throw Error("start subspace must have dimension >= 1");
}

Regime classify_regime(const ElementaryDivisorSpec& spec) {
  const PrimeField F(spec.q);
  if (spec.blocks.size() == 1) {
    const auto& b = spec.blocks.front();
    if (b.exp == 1) return is_primitive(b.p, F) ? Regime::primitive : Regime::irreducible;
    if (b.exp == 2) return Regime::non_semisimple;
    return Regime::general;
  }
  const bool all_simple =
      std::all_of(spec.blocks.begin(), spec.blocks.end(), [](const auto& b) { return b.exp == 1; });
  return all_simple ? Regime::completely_reducible : Regime::general;
}

}  // namespace

CyclicOrbitCode::CyclicOrbitCode(ElementaryDivisorSpec blocks, Subspace start)
    : generator_(build_generator(blocks)), start_(std::move(start)) {
  check_start(generator_, start_);
  regime_ = classify_regime(blocks);
  order_ = matrix_order(generator_, coc::generator_order(blocks));
  blocks_ = std::move(blocks);
}

CyclicOrbitCode::CyclicOrbitCode(Mat generator, Subspace start)
    : generator_(std::move(generator)), start_(std::move(start)) {
  if (!is_invertible(generator_)) throw Error("generator must be invertible");
  check_start(generator_, start_);
  order_ = matrix_order(generator_);
}

CyclicOrbitCode CyclicOrbitCode::with_start(Subspace start) const {
  check_start(generator_, start);
  CyclicOrbitCode c = *this;
  c.start_ = std::move(start);
  return c;
}

// ---------------------------------------------------------------------------
// DifferenceMultiset

namespace {

std::int64_t mod(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = a % mm;
  return r < 0 ? r + mm : r;
}

// x with x = r1 (m1), x = r2 (m2); nullopt when inconsistent. Result mod lcm.
std::optional<std::pair<std::int64_t, std::uint64_t>> crt(std::int64_t r1, std::uint64_t m1, std::int64_t r2,
                                                          std::uint64_t m2) {
  // extended gcd on m1, m2
  std::int64_t a = static_cast<std::int64_t>(m1), b = static_cast<std::int64_t>(m2);
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    std::tie(a, b) = std::make_pair(b, a - t * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
  }
  const std::int64_t g = a;  // m1 * x0 = g (mod m2)
  if ((r2 - r1) % g != 0) return std::nullopt;
  const std::uint64_t l = m1 / static_cast<std::uint64_t>(g) * m2;
  const std::int64_t step = static_cast<std::int64_t>(m2) / g;
  const std::int64_t t = mod(static_cast<std::int64_t>((static_cast<long long>((r2 - r1) / g) * x0) % step), step);
  return std::make_pair(mod(r1 + static_cast<std::int64_t>(m1) * t, l), l);
}

}  // namespace

DifferenceMultiset::DifferenceMultiset(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error("difference multiset needs at least one modulus");
  for (auto m : moduli_)
    if (m == 0) throw Error("difference multiset modulus must be positive");
}

void DifferenceMultiset::add(Key key, std::uint64_t count) {
  if (key.size() != moduli_.size()) throw Error("difference key has wrong arity");
  for (std::size_t i = 0; i < key.size(); ++i)
    if (key[i] != kFree) key[i] = mod(key[i], moduli_[i]);
  entries_[std::move(key)] += count;
}

std::uint64_t DifferenceMultiset::multiplicity(const Key& key) const {
  if (key.size() != moduli_.size()) throw Error("difference key has wrong arity");
  std::uint64_t total = 0;
  for (const auto& [k, c] : entries_) {
    bool match = true;
    for (std::size_t i = 0; i < k.size() && match; ++i)
      match = k[i] == kFree || key[i] == kFree || k[i] == mod(key[i], moduli_[i]);
    if (match) total += c;
  }
  return total;
}

std::uint64_t DifferenceMultiset::max_multiplicity() const {
  std::uint64_t best = 0;
  for (const auto& [k, c] : entries_) best = std::max(best, multiplicity(k));
  return best;
}

std::vector<std::uint64_t> DifferenceMultiset::fold(std::uint64_t order) const {
  std::vector<std::uint64_t> counts(order, 0);
  for (const auto& [key, c] : entries_) {
    std::int64_t r = 0;
    std::uint64_t m = 1;
    bool ok = true;
    for (std::size_t i = 0; i < key.size() && ok; ++i) {
      if (key[i] == kFree) continue;
      auto s = crt(r, m, key[i], moduli_[i]);
      if (!s) {
        ok = false;
        break;
      }
      std::tie(r, m) = *s;
    }
    if (!ok) continue;
    for (auto g = static_cast<std::uint64_t>(r); g < order; g += m) counts[g] += c;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// naive

std::vector<Subspace> enumerate_orbit(const CyclicOrbitCode& code, std::uint64_t cap) {
  std::vector<Subspace> orbit{code.start()};
  Subspace cur = code.start().transform(code.generator());
  while (!(cur == code.start())) {
    if (orbit.size() >= cap) throw Error("orbit exceeds cap of " + std::to_string(cap) + " codewords");
    orbit.push_back(cur);
    cur = cur.transform(code.generator());
  }
  return orbit;
}

CodeParams analyze_naive(const CyclicOrbitCode& code, std::uint64_t cap) {
  const auto orbit = enumerate_orbit(code, cap);
  const std::size_t k = code.k();
  std::vector<std::uint64_t> dist(k + 1, 0);
  for (const auto& w : orbit) ++dist[k - intersection_dim(code.start(), w)];
  CodeParams p;
  p.cardinality = orbit.size();
  for (std::size_t i = 1; i <= k; ++i)
    if (dist[i] > 0) {
      p.min_distance = static_cast<unsigned>(2 * i);
      break;
    }
  p.distribution = std::move(dist);
  return p;
}

// ---------------------------------------------------------------------------
// difference-set analyzers

namespace {

// d with count = q^d - 1.
unsigned dim_from_count(unsigned q, std::uint64_t count) {
  std::uint64_t pw = 1;
  unsigned d = 0;
  while (pw - 1 < count) {
    pw *= q;
    ++d;
  }
  if (pw - 1 != count)
    throw Error("internal error: multiplicity " + std::to_string(count) + " is not of the form q^d - 1");
  return d;
}

std::vector<Vec> start_elements(const CyclicOrbitCode& code) { return code.start().nonzero_elements(); }

const ElementaryDivisorSpec& require_blocks(const CyclicOrbitCode& code, const char* who) {
  if (!code.block_structure()) throw Error(std::string(who) + ": generator has no block structure");
  return *code.block_structure();
}

}  // namespace

CodeParams params_from_counts(unsigned q, std::size_t k, std::span<const std::uint64_t> counts) {
  const std::uint64_t order = counts.size();
  const std::uint64_t full = ipow(q, static_cast<unsigned>(k)) - 1;
  CodeParams p;
  std::uint64_t c = 0;
  for (std::uint64_t g = 1; g < order; ++g) c = std::max(c, counts[g]);
  if (c > full) throw Error("internal error: multiplicity exceeds q^k - 1");
  dim_from_count(q, c);

  std::uint64_t length = order;
  if (c == full) {
    // Least exponent with full multiplicity stabilizes U; it is the orbit length.
    length = 1;
    while (counts[length] != full) ++length;
  }
  p.cardinality = std::max<std::uint64_t>(length, 1);
  std::vector<std::uint64_t> dist(k + 1, 0);
  dist[0] = 1;
  std::uint64_t best = 0;
  for (std::uint64_t g = 1; g < length; ++g) {
    const unsigned d = dim_from_count(q, counts[g]);
    ++dist[k - d];
    best = std::max(best, counts[g]);
  }
  if (p.cardinality > 1) p.min_distance = static_cast<unsigned>(2 * (k - dim_from_count(q, best)));
  p.distribution = std::move(dist);
  return p;
}

DifferenceMultiset primitive_differences(const CyclicOrbitCode& code) {
  const auto& spec = require_blocks(code, "analyze_primitive");
  if (code.regime() != Regime::primitive) throw Error("analyze_primitive: generator is not a primitive companion matrix");
  const auto ctx = FieldCtx::make(spec.blocks.front().p);
  const std::uint64_t order = ctx->size() - 1;
  std::vector<std::int64_t> logs;
  for (const auto& u : start_elements(code)) logs.push_back(static_cast<std::int64_t>(ctx->dlog_index(ctx->pack(u))));
  DifferenceMultiset d({order});
  for (std::size_t l = 0; l < logs.size(); ++l)
    for (std::size_t m = 0; m < logs.size(); ++m)
      if (l != m) d.add({logs[m] - logs[l]});
  return d;
}

CodeParams analyze_primitive(const CyclicOrbitCode& code) {
  const auto d = primitive_differences(code);
  const auto counts = d.fold(d.moduli().front());
  return params_from_counts(code.q(), code.k(), counts);
}

namespace {

// Orbits of multiplication by x on the nonzero elements of a quotient ring:
// element = rep * x^pos, with rep the least packed index in its orbit.
struct XOrbits {
  std::vector<std::uint32_t> rep;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> length;  // by element
};

XOrbits x_orbits(const FieldCtx& ctx) {
  const std::uint64_t size = ctx.size();
  XOrbits t;
  t.rep.assign(size, 0);
  t.pos.assign(size, 0);
  t.length.assign(size, 0);
  std::vector<bool> seen(size, false);
  for (std::uint32_t start = 1; start < size; ++start) {
    if (seen[start]) continue;
    std::uint32_t cur = start;
    std::uint32_t j = 0;
    std::vector<std::uint32_t> members;
    do {
      seen[cur] = true;
      t.rep[cur] = start;
      t.pos[cur] = j++;
      members.push_back(cur);
      cur = ctx.mul_x_index(cur);
    } while (cur != start);
    for (auto e : members) t.length[e] = j;
  }
  return t;
}

}  // namespace

CodeParams analyze_irreducible(const CyclicOrbitCode& code, Diagnostics* diag) {
  const auto& spec = require_blocks(code, "analyze_irreducible");
  if (code.regime() != Regime::primitive && code.regime() != Regime::irreducible)
    throw Error("analyze_irreducible: generator polynomial is reducible or not a single block");
  const auto ctx = FieldCtx::make(spec.blocks.front().p);
  const std::uint64_t order = ctx->order();
  const XOrbits orbits = x_orbits(*ctx);

  // Group start elements by orbit O_i with phi(u) = rep_i * alpha^b.
  std::map<std::uint32_t, std::vector<std::int64_t>> by_orbit;
  for (const auto& u : start_elements(code)) {
    const auto idx = ctx->pack(u);
    by_orbit[orbits.rep[idx]].push_back(orbits.pos[idx]);
  }
  DifferenceMultiset d({order});
  for (const auto& [rep, bs] : by_orbit)
    for (std::size_t l = 0; l < bs.size(); ++l)
      for (std::size_t m = 0; m < bs.size(); ++m)
        if (l != m) d.add({bs[m] - bs[l]});

  const std::uint64_t start_count = ipow(code.q(), static_cast<unsigned>(code.k())) - 1;
  if (diag && by_orbit.size() == start_count)
    diag->notes.push_back("every start element lies in its own orbit: cardinality ord(P), distance 2k");
  return params_from_counts(code.q(), code.k(), d.fold(order));
}

CodeParams analyze_reducible_blocks(const CyclicOrbitCode& code) {
  const auto& spec = require_blocks(code, "analyze_reducible_blocks");
  if (spec.blocks.size() != 2 || spec.blocks[0].exp != 1 || spec.blocks[1].exp != 1)
    throw Error("analyze_reducible_blocks: generator must have exactly two simple blocks");
  const auto ctx1 = FieldCtx::make(spec.blocks[0].p);
  const auto ctx2 = FieldCtx::make(spec.blocks[1].p);
  if (!ctx1->is_primitive() || !ctx2->is_primitive())
    throw Error("analyze_reducible_blocks: both blocks must be primitive");
  const std::size_t n1 = ctx1->degree();
  const std::uint64_t N1 = ctx1->size() - 1, N2 = ctx2->size() - 1;
  const std::uint64_t order = std::lcm(N1, N2);

  struct Logs {
    std::int64_t b;
    std::int64_t b2;
  };
  std::vector<Logs> s1, s2, s3;
  for (const auto& u : start_elements(code)) {
    const std::span<const Elem> all(u);
    const auto i1 = ctx1->pack(all.subspan(0, n1));
    const auto i2 = ctx2->pack(all.subspan(n1));
    const std::int64_t b = i1 ? static_cast<std::int64_t>(ctx1->dlog_index(i1)) : 0;
    const std::int64_t b2 = i2 ? static_cast<std::int64_t>(ctx2->dlog_index(i2)) : 0;
    if (i1 && i2)
      s1.push_back({b, b2});
    else if (i1)
      s2.push_back({b, 0});
    else
      s3.push_back({0, b2});
  }

  constexpr auto kFree = DifferenceMultiset::kFree;
  DifferenceMultiset d({N1, N2});
  for (std::size_t l = 0; l < s1.size(); ++l)
    for (std::size_t m = 0; m < s1.size(); ++m)
      if (l != m) d.add({s1[m].b - s1[l].b, s1[m].b2 - s1[l].b2});
  // Vectors with one zero projection: the other coordinate of the group
  // exponent is unconstrained, and a vector may return to itself before the
  // full group order, so diagonal pairs count as well.
  for (const auto& l : s2)
    for (const auto& m : s2) d.add({m.b - l.b, kFree});
  for (const auto& l : s3)
    for (const auto& m : s3) d.add({kFree, m.b2 - l.b2});
  return params_from_counts(code.q(), code.k(), d.fold(order));
}

CodeParams analyze_nonsemisimple(const CyclicOrbitCode& code, Diagnostics* diag) {
  const auto& spec = require_blocks(code, "analyze_nonsemisimple");
  if (code.regime() != Regime::non_semisimple) throw Error("analyze_nonsemisimple: generator is not of the form p^2");
  const Poly f = poly_pow(spec.blocks.front().p, 2);
  const auto ctx = FieldCtx::make(f);
  const std::uint64_t order = ctx->order();
  const XOrbits orbits = x_orbits(*ctx);

  std::vector<RingElem> elems;
  for (const auto& u : start_elements(code)) elems.push_back(phi(u, ctx));

  // Exponents of <x>: the orbit of 1 under x, with positions as logs.
  const std::uint32_t one = 1;
  DifferenceMultiset d({order});
  for (std::size_t j = 0; j < elems.size(); ++j) {
    const auto uj = elems[j].index();
    const std::uint64_t cycle = orbits.length[uj];
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto ui = elems[i].index();
      if (orbits.rep[ui] != orbits.rep[uj]) continue;
      std::int64_t b = -1;
      if (elems[j].is_unit()) {
        const auto quotient = (elems[i] / elems[j]).index();
        if (orbits.rep[quotient] == orbits.rep[one]) b = orbits.pos[quotient];
      } else {
        std::uint32_t cur = uj;
        for (std::uint64_t e = 0; e < order; ++e, cur = ctx->mul_x_index(cur))
          if (cur == ui) {
            b = static_cast<std::int64_t>(e);
            break;
          }
      }
      if (b < 0) throw Error("internal error: same-orbit elements without a connecting power of x");
      // u_i = u_j x^b and x^cycle fixes u_j; the diagonal i == j records
      // nontrivial self-returns of non-units.
      for (std::uint64_t t = static_cast<std::uint64_t>(b); t < order; t += cycle)
        if (!(i == j && t == 0)) d.add({static_cast<std::int64_t>(t)});
    }
  }
  auto params = params_from_counts(code.q(), code.k(), d.fold(order));
  const std::uint64_t stated = ipow(code.q(), static_cast<unsigned>(code.n() / 2)) - 1;
  if (diag && params.cardinality != stated)
    diag->notes.push_back("orbit closure gives cardinality " + std::to_string(params.cardinality) +
                          ", not q^(n/2) - 1 = " + std::to_string(stated));
  return params;
}

CodeParams analyze(const CyclicOrbitCode& code, std::string* used) {
  auto set = [&](const char* name) {
    if (used) *used = name;
  };
  switch (code.regime()) {
    case Regime::primitive:
      set("primitive");
      return analyze_primitive(code);
    case Regime::irreducible:
      set("irreducible");
      return analyze_irreducible(code);
    case Regime::non_semisimple:
      set("non_semisimple");
      return analyze_nonsemisimple(code);
    case Regime::completely_reducible: {
      const auto& b = code.block_structure()->blocks;
      const PrimeField F(code.q());
      if (b.size() == 2 && is_primitive(b[0].p, F) && is_primitive(b[1].p, F)) {
        set("reducible_blocks");
        return analyze_reducible_blocks(code);
      }
      break;
    }
    case Regime::general: break;
  }
  set("naive");
  return analyze_naive(code);
}

// ---------------------------------------------------------------------------
// block bounds

namespace {

struct BlockLayout {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> size;
};

BlockLayout layout(const CyclicOrbitCode& code) {
  BlockLayout l;
  if (!code.block_structure()) {
    l.offset = {0};
    l.size = {code.n()};
    return l;
  }
  std::size_t off = 0;
  for (auto s : code.block_structure()->block_sizes()) {
    l.offset.push_back(off);
    l.size.push_back(s);
    off += s;
  }
  return l;
}

// U cap (coordinates of block i), projected onto the block's columns.
Subspace block_part(const Subspace& u, std::size_t offset, std::size_t size) {
  const std::size_t n = u.ambient_dim();
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < n; ++c) {
    if (c >= offset && c < offset + size) continue;
    Vec e(n, 0);
    e[c] = 1;
    rows.push_back(std::move(e));
  }
  // vectors of U vanishing outside the block = U cap span(block unit vectors)
  const Subspace outside_perp = dual(Subspace::span(u.q(), n, rows));
  const Subspace inter = intersection(u, outside_perp);
  return Subspace::span(column_block(inter.basis(), offset, size));
}

Mat block_matrix(const Mat& m, std::size_t offset, std::size_t size) {
  Mat out(m.q(), size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = m(offset + r, offset + c);
  return out;
}

}  // namespace

StartShape start_shape(const CyclicOrbitCode& code) {
  const auto l = layout(code);
  if (l.size.size() == 1) return StartShape::single;
  const Subspace& u = code.start();
  std::size_t total = 0;
  bool all_nonzero = true;
  for (std::size_t i = 0; i < l.size.size(); ++i) {
    const auto part = block_part(u, l.offset[i], l.size[i]).dim();
    total += part;
    all_nonzero = all_nonzero && part > 0;
  }
  if (total == u.dim() && all_nonzero) return StartShape::diagonal;
  bool full_rank = true;
  for (std::size_t i = 0; i < l.size.size(); ++i)
    full_rank = full_rank && rank(column_block(u.basis(), l.offset[i], l.size[i])) == u.dim();
  if (full_rank) return StartShape::concatenated;
  throw Error("shape mismatch: start is neither block-diagonal nor full rank in every column block");
}

std::vector<CyclicOrbitCode> component_codes(const CyclicOrbitCode& code) {
  const auto shape = start_shape(code);
  if (shape == StartShape::single) return {code};
  const auto l = layout(code);
  const auto& spec = *code.block_structure();
  std::vector<CyclicOrbitCode> out;
  for (std::size_t i = 0; i < l.size.size(); ++i) {
    ElementaryDivisorSpec one{spec.q, {spec.blocks[i]}};
    Subspace part = shape == StartShape::diagonal
                        ? block_part(code.start(), l.offset[i], l.size[i])
                        : Subspace::span(column_block(code.start().basis(), l.offset[i], l.size[i]));
    out.emplace_back(std::move(one), std::move(part));
  }
  return out;
}

BoundsReport block_bounds(const CyclicOrbitCode& code, std::span<const CodeParams> components) {
  const auto l = layout(code);
  if (components.size() != l.size.size())
    throw Error("block_bounds: expected " + std::to_string(l.size.size()) + " component parameter sets");
  BoundsReport rep;
  rep.shape = start_shape(code);
  for (const auto& c : components) {
    rep.component_cardinalities.push_back(c.cardinality);
    rep.component_distances.push_back(c.min_distance);
  }
  std::optional<unsigned> min_d;
  for (const auto& d : rep.component_distances)
    if (d) min_d = min_d ? std::min(*min_d, *d) : *d;
  rep.distance_lower_bound = min_d;

  if (rep.shape == StartShape::single) {
    rep.cardinality = components.front().cardinality;
    rep.distance_is_exact = true;
  } else if (rep.shape == StartShape::diagonal) {
    std::uint64_t card = 1;
    for (auto c : rep.component_cardinalities) card = std::lcm(card, c);
    rep.cardinality = card;
    bool coprime = true;
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = i + 1; j < components.size(); ++j)
        coprime = coprime && std::gcd(rep.component_cardinalities[i], rep.component_cardinalities[j]) == 1;
    rep.distance_is_exact = coprime;
    bool any_in_j = false, any_outside = false;
    unsigned sum = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (rep.component_cardinalities[i] == card) {
        any_in_j = true;
      } else {
        any_outside = true;
        sum += rep.component_distances[i].value_or(0);
      }
    }
    if (any_in_j && any_outside) rep.distance_sum_bound = sum;
  }

  // Stabilizer window from the column blocks of the start basis.
  const Mat& basis = code.start().basis();
  std::uint64_t lo = 1, hi = 1;
  for (std::size_t i = 0; i < l.size.size(); ++i) {
    const Mat ui = column_block(basis, l.offset[i], l.size[i]);
    const Mat mi = block_matrix(code.generator(), l.offset[i], l.size[i]);
    const Subspace rs = Subspace::span(ui);
    std::uint64_t r = 1;
    for (Subspace cur = rs.transform(mi); !(cur == rs); cur = cur.transform(mi)) ++r;
    std::uint64_t s = 1;
    for (Mat cur = ui * mi; !(cur == ui); cur = cur * mi) ++s;
    lo = std::lcm(lo, r);
    hi = std::lcm(hi, s);
  }
  rep.stabilizer_lower = lo;
  rep.stabilizer_upper = hi;
  return rep;
}

// ---------------------------------------------------------------------------
// distribution and duality

CodeParams distance_distribution(const CyclicOrbitCode& code, std::uint64_t cap) { return analyze_naive(code, cap); }

CyclicOrbitCode dual_code(const CyclicOrbitCode& code) {
  Subspace d = dual(code.start());
  if (d.dim() == 0) throw Error("dual of the full space is the zero space, not a code");
  return CyclicOrbitCode(transpose(code.generator()), std::move(d));
}

bool macwilliams_check(const CyclicOrbitCode& code, std::uint64_t cap) {
  auto trim = [](std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  const auto a = distance_distribution(code, cap);
  const auto b = distance_distribution(dual_code(code), cap);
  return a.cardinality == b.cardinality && trim(*a.distribution) == trim(*b.distribution);
}

}  // namespace coc
