#include "coc_tools/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "coc/code_spec.hpp"
#include "coc/decoder.hpp"
#include "coc/harness.hpp"
#include "coc/spread.hpp"
#include "coc_tools/golden.hpp"

namespace coc::tools {

namespace {

struct Options {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string poly;
  std::string code;
  std::string received;
  std::string matrix;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1000;
  unsigned jobs = 1;
  std::string format = "json";
  std::string lf;
  std::uint64_t order = 0;
  unsigned erasures = 0;
  unsigned errors = 0;
  bool naive = false;
  bool nonprimitive = false;
  bool loop_table = false;
  std::size_t kmax = 10;
};

// A file path when one exists, inline coefficients otherwise.
Poly load_poly(unsigned q, const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) text = read_text_file(arg);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return parse_poly_text(q, text);
}

CodeSpecFile load_spec(const std::string& path) {
  try {
    return parse_code_spec(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw CLI::RequiredError("--seed");
  return *o.seed;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto spec = load_spec(o.code);
  const auto code = to_code(spec);
  std::string used = "naive";
  Diagnostics diag;
  CodeParams p;
  if (o.naive) {
    p = analyze_naive(code);
  } else if (code.regime() == Regime::irreducible) {
    used = "irreducible";
    p = analyze_irreducible(code, &diag);
  } else if (code.regime() == Regime::non_semisimple) {
    used = "non_semisimple";
    p = analyze_nonsemisimple(code, &diag);
  } else {
    p = analyze(code, &used);
  }
  if (!p.distribution) p.distribution = distance_distribution(code).distribution;
  std::optional<BoundsReport> bounds;
  if (code.block_structure() && code.block_structure()->blocks.size() > 1) {
    try {
      std::vector<CodeParams> comps;
      for (const auto& c : component_codes(code)) comps.push_back(analyze(c));
      bounds = block_bounds(code, comps);
    } catch (const Error& e) {
      diag.notes.push_back(std::string("no block bounds: ") + e.what());
    }
  }
  if (o.format == "csv") {
    out << "cardinality,min_distance,regime\n"
        << p.cardinality << ',' << (p.min_distance ? std::to_string(*p.min_distance) : "") << ','
        << to_string(code.regime()) << '\n';
  } else {
    out << params_to_json(p, to_string(code.regime()), used, bounds, diag.notes);
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Mat m;
  if (!o.matrix.empty()) {
    m = Mat::parse(o.q, read_text_file(o.matrix));
  } else if (!o.code.empty()) {
    m = build_generator(load_spec(o.code).generator_spec());
  } else if (!o.poly.empty()) {
    m = companion_matrix(load_poly(o.q, o.poly));
  } else {
    throw CLI::ValidationError("classify", "one of --matrix, --code, --poly is required");
  }
  out << matrix_type_to_json(matrix_type(m));
  return 0;
}

int cmd_spread(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.k == 0) throw CLI::ValidationError("spread", "--n and --k are required");
  std::optional<Poly> p;
  if (!o.poly.empty()) p = load_poly(o.q, o.poly);
  if (o.nonprimitive) {
    if (!p) throw CLI::ValidationError("spread", "--nonprimitive needs --poly");
    if (*p->degree() != o.n) throw Error("--poly has degree " + std::to_string(*p->degree()) + ", not n");
    out << to_json(from_code(build_nonprimitive_spread(*p, o.k)));
  } else {
    out << to_json(from_code(build_spread({o.q, o.k, o.n, p})));
  }
  return 0;
}

ElementaryDivisorSpec search_generator(const Options& o) {
  if (!o.code.empty()) return load_spec(o.code).generator_spec();
  const PrimeField F(o.q);
  if (!o.poly.empty()) return {o.q, {{load_poly(o.q, o.poly), 1}}};
  if (o.n == 0) throw CLI::ValidationError("search", "--n is required without --poly or --code");
  if (o.order) return {o.q, {{find_irreducible_with_order(F, o.n, o.order), 1}}};
  return {o.q, {{least_primitive(F, o.n), 1}}};
}

int cmd_search(const Options& o, std::ostream& out) {
  const std::uint64_t seed = require_seed(o);
  if (o.k == 0) throw CLI::ValidationError("search", "--k is required");
  SearchConfig cfg{search_generator(o), o.k, o.trials, seed, o.jobs, {}};
  const auto rep = random_search(cfg);
  out << (o.format == "csv" ? rep.to_csv() : rep.to_json() + "\n");
  return 0;
}

int cmd_decode(const Options& o, std::ostream& out) {
  if (o.loop_table) {
    out << "k,f,exhaustive,lf\n";
    for (std::size_t k = 4; k <= o.kmax; ++k) {
      const unsigned f = static_cast<unsigned>(k / 2 - 2);
      out << k << ',' << f << ',' << ipow(o.q, static_cast<unsigned>(k)) - 1 << ','
          << lf_set_size(o.q, static_cast<unsigned>(k), f) << '\n';
    }
    return 0;
  }
  if (o.code.empty() || o.received.empty()) throw CLI::ValidationError("decode", "--code and --received are required");
  const auto code = to_code(load_spec(o.code));
  const Mat r = Mat::parse(code.q(), read_text_file(o.received));
  if (r.cols() != code.n()) throw Error(o.received + ": rows have " + std::to_string(r.cols()) + " entries, expected " + std::to_string(code.n()));
  const Subspace received = Subspace::span(r);
  const OrbitDecoder dec(code);
  const auto kp = static_cast<unsigned>(received.dim());
  if (o.lf.empty()) {
    const auto res = dec.decode_exhaustive(received);
    out << decode_result_to_json(res, kp ? kp - 1 : 0, (ipow(code.q(), static_cast<unsigned>(code.k())) - 1) * (ipow(code.q(), kp) - 1));
    return 0;
  }
  unsigned f = 0;
  if (o.lf == "auto") {
    f = error_capability(code.k(), dec.min_distance(), kp);
  } else {
    try {
      f = static_cast<unsigned>(std::stoul(o.lf));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--lf", "expects a non-negative integer or 'auto'");
    }
  }
  const auto res = dec.decode_lf(received, f);
  out << decode_result_to_json(res, f, (ipow(code.q(), static_cast<unsigned>(code.k())) - 1) * lf_set_size(code.q(), kp, f));
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const std::uint64_t seed = require_seed(o);
  const auto code = to_code(load_spec(o.code));
  const auto stats = simulate_decoding(code, {o.erasures, o.errors, seed}, o.trials, o.jobs);
  if (o.format == "csv") {
    out << "trials,erasures,errors,exhaustive_success,lf_success,exhaustive_candidates,lf_candidates\n"
        << stats.trials << ',' << o.erasures << ',' << o.errors << ',' << stats.exhaustive_success << ','
        << stats.lf_success << ',' << stats.exhaustive_candidates << ',' << stats.lf_candidates << '\n';
  } else {
    out << simulation_to_json(stats);
  }
  return 0;
}

int cmd_selftest(std::ostream& out) {
  int failed = 0;
  for (const auto& anchor : golden_anchors()) {
    std::string detail;
    bool ok = false;
    try {
      ok = anchor.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << anchor.name;
    if (!detail.empty()) out << " (" << detail << ")";
    out << '\n';
    failed += !ok;
  }
  out << (failed ? std::to_string(failed) + " anchor(s) failed\n" : "all anchors passed\n");
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic orbit codes: construction, analysis, decoding and search", "coc"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) { sub->add_option("--q", o.q, "field size (prime)")->check(CLI::Range(2u, 251u)); };
  auto add_seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "64-bit seed (required)");
    sub->add_option("--trials", o.trials, "number of trials");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"})); };

  auto* analyze = app.add_subcommand("analyze", "cardinality, distance and distribution of a code spec");
  analyze->add_option("--code", o.code, "code spec JSON")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--naive", o.naive, "enumerate the orbit instead of using a fast analyzer");
  add_format(analyze);

  auto* classify = app.add_subcommand("classify", "matrix type of a generator");
  add_common(classify);
  classify->add_option("--matrix", o.matrix, "matrix file")->check(CLI::ExistingFile);
  classify->add_option("--code", o.code, "code spec JSON (its generator)")->check(CLI::ExistingFile);
  classify->add_option("--poly", o.poly, "companion of this polynomial");

  auto* spread = app.add_subcommand("spread", "emit a spread code spec");
  add_common(spread);
  spread->add_option("--n", o.n)->required();
  spread->add_option("--k", o.k)->required();
  spread->add_option("--poly", o.poly, "polynomial file or coefficients");
  spread->add_flag("--nonprimitive", o.nonprimitive, "irreducible --poly of order (q^n-1)/(q^k-1)");

  auto* search = app.add_subcommand("search", "seeded random search over start subspaces");
  add_common(search);
  add_seeded(search);
  add_format(search);
  search->add_option("--n", o.n);
  search->add_option("--k", o.k)->required();
  search->add_option("--poly", o.poly, "generator polynomial");
  search->add_option("--order", o.order, "least irreducible of degree n with this order");
  search->add_option("--code", o.code, "take the generator from a code spec")->check(CLI::ExistingFile);

  auto* decode = app.add_subcommand("decode", "minimum distance decoding of a received space");
  add_common(decode);
  decode->add_option("--code", o.code)->check(CLI::ExistingFile);
  decode->add_option("--received", o.received, "matrix file whose rows span R")->check(CLI::ExistingFile);
  decode->add_option("--lf", o.lf, "use the L_f decoder with this f, or 'auto'");
  decode->add_flag("--loop-table", o.loop_table, "print candidate counts q^k-1 vs |L_f| as CSV");
  decode->add_option("--kmax", o.kmax, "largest k for --loop-table");

  auto* simulate = app.add_subcommand("simulate", "decode over the erasure/error channel");
  add_seeded(simulate);
  add_format(simulate);
  simulate->add_option("--code", o.code)->required()->check(CLI::ExistingFile);
  simulate->add_option("--erasures", o.erasures);
  simulate->add_option("--errors", o.errors);

  auto* selftest = app.add_subcommand("selftest", "run the golden examples");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (spread->parsed()) return cmd_spread(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (decode->parsed()) return cmd_decode(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace coc::tools
