#include "coc/decoder.hpp"

#include <algorithm>

namespace coc {

namespace {

std::uint64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

std::uint64_t lf_set_size(std::uint64_t q, unsigned k_prime, unsigned f) {
  std::uint64_t total = 0;
  for (unsigned i = 1; i <= f + 1 && i <= k_prime; ++i) total += binomial(k_prime, i) * ipow(q - 1, i);
  return total;
}

unsigned error_capability(std::size_t k, unsigned min_distance, unsigned k_prime) {
  if (k_prime == 0) return 0;
  const long delta = min_distance / 2;
  const long v = (static_cast<long>(k_prime) - static_cast<long>(k) + delta - 1);
  const long cap = v < 0 ? 0 : v / 2;
  return static_cast<unsigned>(std::min<long>(cap, static_cast<long>(k_prime) - 1));
}

unsigned error_capability(const CyclicOrbitCode& code, unsigned k_prime) {
  const auto d = analyze(code).min_distance;
  if (!d) throw Error("error capability needs a code with at least two codewords");
  return error_capability(code.k(), *d, k_prime);
}

std::vector<Vec> lf_set(const Mat& r_basis, unsigned f) {
  const std::size_t kp = r_basis.rows();
  if (f >= kp) throw Error("lf_set: f = " + std::to_string(f) + " must be below dim R = " + std::to_string(kp));
  if (rank(r_basis) != kp) throw Error("lf_set: basis rows are linearly dependent");
  const PrimeField F(r_basis.q());
  const unsigned q = r_basis.q();
  std::vector<Vec> out;
  for (std::size_t s = 1; s <= f + 1; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<Elem> coef(s, 1);
      for (;;) {
        Vec v(r_basis.cols(), 0);
        for (std::size_t i = 0; i < s; ++i) {
          const auto row = r_basis.row(idx[i]);
          for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], F.mul(coef[i], row[c]));
        }
        out.push_back(std::move(v));
        std::size_t j = s;
        while (j > 0 && coef[j - 1] == q - 1) coef[--j] = 1;
        if (j == 0) break;
        ++coef[j - 1];
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == kp - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

OrbitDecoder::OrbitDecoder(const CyclicOrbitCode& code) : code_(code) {
  if (code.regime() != Regime::primitive && code.regime() != Regime::irreducible)
    throw Error("decoder needs a generator that is the companion matrix of an irreducible polynomial");
  ctx_ = FieldCtx::make(code.block_structure()->blocks.front().p);
  orbit_ = enumerate_orbit(code);
  if (orbit_.size() < 2) throw Error("decoder needs a code with at least two codewords");
  const auto params = analyze(code);
  min_distance_ = *params.min_distance;

  for (const auto& u : code.start().nonzero_elements()) {
    const auto idx = ctx_->pack(u);
    start_.push_back(idx);
    start_inv_.push_back(RingElem::from_index(ctx_, idx).inverse().index());
  }
  power_log_.assign(ctx_->size(), -1);
  std::uint32_t cur = 1;
  for (std::uint64_t e = 0; e < ctx_->order(); ++e) {
    power_log_[cur] = static_cast<std::int64_t>(e);
    cur = ctx_->mul_x_index(cur);
  }
}

std::optional<std::uint64_t> OrbitDecoder::exponent_of(std::uint32_t v, std::size_t slot) const {
  const auto e = power_log_[ctx_->mul_index(v, start_inv_[slot])];
  if (e < 0) return std::nullopt;
  return static_cast<std::uint64_t>(e);
}

void OrbitDecoder::check_received(const Subspace& r) const {
  if (r.q() != code_.q() || r.ambient_dim() != code_.n())
    throw Error("received space does not live in the code's ambient space");
  if (r.dim() == 0) throw Error("received space is zero");
}

// Best candidates so far, keyed by intersection dimension.
struct OrbitDecoder::Search {
  const OrbitDecoder& dec;
  const Subspace& received;
  std::vector<int> score;  // per codeword index; -1 = not computed
  std::size_t best_dim = 0;
  std::vector<std::uint64_t> best;
  std::uint64_t examined = 0;

  Search(const OrbitDecoder& d, const Subspace& r) : dec(d), received(r), score(d.orbit_.size(), -1) {}

  std::size_t visit(std::uint64_t exponent) {
    const std::uint64_t i = exponent % dec.orbit_.size();
    if (score[i] < 0) {
      score[i] = static_cast<int>(intersection_dim(received, dec.orbit_[i]));
      const auto s = static_cast<std::size_t>(score[i]);
      if (s > best_dim || best.empty()) {
        best_dim = s;
        best = {i};
      } else if (s == best_dim) {
        best.push_back(i);
      }
    }
    return static_cast<std::size_t>(score[i]);
  }

  DecodeResult result(bool certified) {
    DecodeResult r;
    r.candidates_examined = examined;
    if (best.empty()) {
      r.codeword = dec.orbit_.front();
      r.distance = subspace_distance(received, r.codeword);
      r.tied_exponents = {0};
      return r;
    }
    std::sort(best.begin(), best.end());
    r.group_exponent = best.front();
    r.codeword = dec.orbit_[best.front()];
    r.distance = subspace_distance(received, r.codeword);
    r.tied_exponents = best;
    r.unique = certified || best.size() == 1;
    return r;
  }
};

DecodeResult OrbitDecoder::decode_exhaustive(const Subspace& received) const {
  check_received(received);
  Search s(*this, received);
  for (const auto& v : received.nonzero_elements()) {
    const auto vi = ctx_->pack(v);
    for (std::size_t j = 0; j < start_.size(); ++j) {
      ++s.examined;
      if (auto e = exponent_of(vi, j)) s.visit(*e);
    }
  }
  auto r = s.result(false);
  // Candidates never proposed meet R trivially; they tie only at dimension 0.
  if (s.best_dim == 0) r.unique = false;
  return r;
}

DecodeResult OrbitDecoder::decode_lf(const Subspace& received, std::optional<unsigned> f) const {
  check_received(received);
  const auto kp = static_cast<unsigned>(received.dim());
  const unsigned level = f ? *f : error_capability(code_.k(), min_distance_, kp);
  if (level >= kp) throw Error("decode_lf: f = " + std::to_string(level) + " must be below dim R = " + std::to_string(kp));
  // d(R, V) <= delta - 1  <=>  2 dim(R cap V) >= k + k' - delta + 1
  const long need2 = static_cast<long>(code_.k()) + kp - min_distance_ / 2 + 1;
  Search s(*this, received);
  for (const auto& v : lf_set(received.basis(), level)) {
    const auto vi = ctx_->pack(v);
    for (std::size_t j = 0; j < start_.size(); ++j) {
      ++s.examined;
      const auto e = exponent_of(vi, j);
      if (!e) continue;
      const auto dim = s.visit(*e);
      if (2 * static_cast<long>(dim) >= need2) {
        s.best = {*e % orbit_.size()};
        s.best_dim = dim;
        return s.result(true);
      }
    }
  }
  auto r = s.result(false);
  r.unique = false;
  return r;
}

DecodeResult decode_exhaustive(const Subspace& received, const CyclicOrbitCode& code) {
  return OrbitDecoder(code).decode_exhaustive(received);
}

DecodeResult decode_lf(const Subspace& received, const CyclicOrbitCode& code, std::optional<unsigned> f) {
  return OrbitDecoder(code).decode_lf(received, f);
}

}  // namespace coc
