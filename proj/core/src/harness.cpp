#include "coc/harness.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace coc {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = eng_();
    if (x < limit) return x % n;
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = (seed ^ trial) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat random_matrix(unsigned q, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(q, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.element(q);
  return m;
}

Mat random_invertible(unsigned q, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_matrix(q, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Subspace random_subspace(unsigned q, std::size_t k, std::size_t n, Rng& rng) {
  if (k == 0 || k > n) throw Error("random_subspace: need 1 <= k <= n");
  for (;;) {
    Mat m = random_matrix(q, k, n, rng);
    if (rank(m) == k) return Subspace::span(m);
  }
}

Subspace transmit(const Subspace& v, const ChannelConfig& cfg) {
  const std::size_t k = v.dim(), n = v.ambient_dim();
  const unsigned q = v.q();
  if (cfg.erasures > k)
    throw Error("transmit: " + std::to_string(cfg.erasures) + " erasures exceed dim V = " + std::to_string(k));
  if (k + cfg.errors > n)
    throw Error("transmit: " + std::to_string(cfg.errors) + " errors do not fit outside V in dimension " +
                std::to_string(n));
  Rng rng(cfg.seed);
  const Mat mixed = random_invertible(q, k, rng) * v.basis();
  std::vector<Vec> kept;
  for (std::size_t r = cfg.erasures; r < k; ++r) kept.emplace_back(mixed.row(r).begin(), mixed.row(r).end());

  Subspace forbidden = v;
  std::vector<Vec> errs;
  while (errs.size() < cfg.errors) {
    Vec e(n);
    for (auto& x : e) x = rng.element(q);
    if (forbidden.contains(e)) continue;
    forbidden = subspace_sum(forbidden, Subspace::span(q, n, {e}));
    errs.push_back(std::move(e));
  }
  std::vector<Vec> rows = kept;
  rows.insert(rows.end(), errs.begin(), errs.end());
  if (rows.empty()) return Subspace::zero(q, n);
  const Mat r = Mat::from_rows(q, rows, n);
  return Subspace::span(random_invertible(q, r.rows(), rng) * r);
}

// ---------------------------------------------------------------------------

namespace {

template <class Fn>
void run_parallel(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  const std::uint64_t count = end - begin;
  if (jobs == 1 || count < 2) {
    fn(0u, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t lo = begin + count * j / jobs, hi = begin + count * (j + 1) / jobs;
    pool.emplace_back([&, j, lo, hi] {
      try {
        fn(j, lo, hi);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

SimulationStats simulate_decoding(const CyclicOrbitCode& code, const ChannelConfig& cfg, std::uint64_t trials,
                                  unsigned jobs) {
  const OrbitDecoder dec(code);
  struct Outcome {
    bool ex_ok, lf_ok, ex_unique, lf_unique;
    std::uint64_t ex_cand, lf_cand;
    FailureRecord rec;
  };
  std::vector<Outcome> out(trials);
  run_parallel(0, trials, jobs, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      Rng rng(trial_seed(cfg.seed, t));
      const std::uint64_t e = rng.below(dec.cardinality());
      const Subspace& sent = dec.codeword(e);
      const Subspace r = transmit(sent, {cfg.erasures, cfg.errors, rng.next()});
      Outcome& o = out[t];
      if (r.dim() == 0) {
        o = {false, false, false, false, 0, 0, {t, e, static_cast<unsigned>(sent.dim()), 0, false, 0, false}};
        continue;
      }
      const auto ex = dec.decode_exhaustive(r);
      const auto lf = dec.decode_lf(r);
      o.ex_ok = ex.group_exponent == e;
      o.lf_ok = lf.group_exponent == e;
      o.ex_unique = ex.unique;
      o.lf_unique = lf.unique;
      o.ex_cand = ex.candidates_examined;
      o.lf_cand = lf.candidates_examined;
      o.rec = {t, e, subspace_distance(r, sent), ex.group_exponent, ex.unique, lf.group_exponent, lf.unique};
    }
  });
  SimulationStats s;
  s.trials = trials;
  s.seed = cfg.seed;
  s.channel = cfg;
  for (const auto& o : out) {
    s.exhaustive_success += o.ex_ok;
    s.lf_success += o.lf_ok;
    s.exhaustive_unique += o.ex_unique;
    s.lf_unique += o.lf_unique;
    s.exhaustive_candidates += o.ex_cand;
    s.lf_candidates += o.lf_cand;
    if (!o.ex_ok || !o.lf_ok || !o.ex_unique || !o.lf_unique) s.failures.push_back(o.rec);
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::string blocks_text(const ElementaryDivisorSpec& spec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i)
    os << (i ? "; " : "") << "[" << spec.blocks[i].p.to_string() << "]^" << spec.blocks[i].exp;
  return os.str();
}

bool better(const SearchCell& a, const SearchCell& b) {
  return a.cardinality != b.cardinality ? a.cardinality > b.cardinality : a.trial < b.trial;
}

void merge_cell(std::map<unsigned, SearchCell>& into, unsigned d, const SearchCell& c) {
  auto it = into.find(d);
  if (it == into.end())
    into.emplace(d, c);
  else if (better(c, it->second))
    it->second = c;
}

bool targets_met(const std::map<unsigned, SearchCell>& cells, const std::map<unsigned, std::uint64_t>& targets) {
  if (targets.empty()) return false;
  for (const auto& [d, card] : targets) {
    auto it = cells.find(d);
    if (it == cells.end() || it->second.cardinality < card) return false;
  }
  return true;
}

constexpr std::uint64_t kChunk = 4096;

}  // namespace

SearchReport random_search(const SearchConfig& cfg) {
  const std::size_t n = cfg.generator.dimension();
  if (cfg.k == 0 || cfg.k > n) throw Error("random_search: need 1 <= k <= n");
  const unsigned q = cfg.generator.q;
  const CyclicOrbitCode base(cfg.generator, Subspace::full(q, n));

  SearchReport rep;
  rep.q = q;
  rep.k = cfg.k;
  rep.n = n;
  rep.generator_order = base.generator_order();
  rep.generator = blocks_text(cfg.generator);
  rep.seed = cfg.seed;

  const unsigned jobs = std::max(1u, cfg.jobs);
  std::uint64_t done = 0;
  while (done < cfg.trials && !targets_met(rep.cells, cfg.targets)) {
    const std::uint64_t end = std::min(cfg.trials, done + kChunk);
    std::vector<std::map<unsigned, SearchCell>> partial(jobs);
    run_parallel(done, end, jobs, [&](unsigned j, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t t = lo; t < hi; ++t) {
        Rng rng(trial_seed(cfg.seed, t));
        Subspace u = random_subspace(q, cfg.k, n, rng);
        const auto p = analyze(base.with_start(u));
        if (!p.min_distance) continue;
        merge_cell(partial[j], *p.min_distance, {p.cardinality, t, std::move(u)});
      }
    });
    for (const auto& m : partial)
      for (const auto& [d, c] : m) merge_cell(rep.cells, d, c);
    done = end;
  }
  rep.trials = done;

  for (const auto& [d, cell] : rep.cells) {
    const auto naive = analyze_naive(base.with_start(cell.start));
    if (naive.cardinality != cell.cardinality || naive.min_distance != d)
      throw Error("internal error: search cell (" + std::to_string(cell.cardinality) + ", " + std::to_string(d) +
                  ") disagrees with orbit enumeration " + to_string(naive));
  }
  return rep;
}

std::string SearchReport::to_csv() const {
  std::ostringstream os;
  os << "q,k,n,order,distance,cardinality\n";
  for (const auto& [d, c] : cells) os << q << ',' << k << ',' << n << ',' << generator_order << ',' << d << ',' << c.cardinality << '\n';
  return os.str();
}

std::string SearchReport::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = q;
  j["k"] = k;
  j["n"] = n;
  j["generator"] = generator;
  j["generator_order"] = generator_order;
  j["seed"] = seed;
  j["trials"] = trials;
  auto cells_json = nlohmann::ordered_json::array();
  for (const auto& [d, c] : cells) {
    nlohmann::ordered_json cell;
    cell["distance"] = d;
    cell["cardinality"] = c.cardinality;
    cell["trial"] = c.trial;
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < c.start.dim(); ++r) {
      std::string s;
      for (auto x : c.start.basis().row(r)) s += (q <= 10 ? std::to_string(x) : std::to_string(x) + " ");
      if (q > 10) s.pop_back();
      rows.push_back(s);
    }
    cell["start"] = rows;
    cells_json.push_back(cell);
  }
  j["cells"] = cells_json;
  return j.dump(2);
}

}  // namespace coc
