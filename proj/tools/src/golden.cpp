#include "coc_tools/golden.hpp"

#include <sstream>

#include "coc/canonical.hpp"
#include "coc/decoder.hpp"
#include "coc/harness.hpp"
#include "coc/orbit.hpp"
#include "coc/spread.hpp"

namespace coc::tools {

namespace {

Vec bits(std::string_view s) {
  Vec v;
  for (char c : s) v.push_back(static_cast<Elem>(c - '0'));
  return v;
}

Subspace rows(std::size_t n, std::initializer_list<std::string_view> r) {
  std::vector<Vec> v;
  for (auto s : r) v.push_back(bits(s));
  return Subspace::span(2, n, v);
}

Poly p2(std::string_view coeffs) { return Poly::parse(2, coeffs); }

template <class T>
bool expect_eq(const T& got, const T& want, std::string& detail) {
  std::ostringstream os;
  if constexpr (std::is_same_v<T, CodeParams>) {
    os << "got " << to_string(got) << ", want " << to_string(want);
  } else if constexpr (std::is_same_v<T, Poly>) {
    os << "got [" << got.to_string() << "], want [" << want.to_string() << "]";
  } else {
    os << "got " << got << ", want " << want;
  }
  detail = os.str();
  return got == want;
}

bool params_are(const CodeParams& p, std::uint64_t card, unsigned d, std::string& detail) {
  detail = to_string(p);
  return p.cardinality == card && p.min_distance == d;
}

const Poly kP4 = Poly::parse(2, "1 1 0 0 1");          // x^4+x+1
const Poly kP6 = Poly::parse(2, "1 1 0 0 0 0 1");      // x^6+x+1
const Poly kP5 = Poly::parse(2, "1 1 1 1 1");          // x^4+x^3+x^2+x+1

CyclicOrbitCode block_code(const Subspace& start) { return CyclicOrbitCode(ElementaryDivisorSpec{2, {{kP4, 1}, {kP6, 1}}}, start); }

const Subspace& diag_start() {
  static const Subspace s = rows(10, {"1000000000", "0110000000", "0000100000", "0000010111"});
  return s;
}
const Subspace& concat_start() {
  static const Subspace s = rows(10, {"1000100000", "0110010111"});
  return s;
}

bool search_has(const SearchReport& r, std::initializer_list<std::pair<unsigned, std::uint64_t>> cells, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (auto [d, card] : cells) {
    auto it = r.cells.find(d);
    const std::uint64_t got = it == r.cells.end() ? 0 : it->second.cardinality;
    os << "d=" << d << ":" << got << " ";
    ok = ok && got == card;
  }
  detail = os.str() + "after " + std::to_string(r.trials) + " trials";
  return ok;
}

}  // namespace

std::vector<GoldenAnchor> golden_anchors() {
  const PrimeField F2(2);
  std::vector<GoldenAnchor> a;
  a.push_back({"order of x^4+x^3+x^2+x+1 is 5", [=](std::string& d) { return expect_eq<std::uint64_t>(poly_order(kP5, F2), 5, d); }});
  a.push_back({"order of x^6+x+1 is 63", [=](std::string& d) { return expect_eq<std::uint64_t>(poly_order(kP6, F2), 63, d); }});
  a.push_back({"x^4+x+1 and x^6+x+1 are primitive", [=](std::string& d) {
                 d = "";
                 return is_primitive(kP4, F2) && is_primitive(kP6, F2);
               }});
  a.push_back({"x^4+x^3+x^2+x+1 is not primitive", [=](std::string& d) {
                 d = "";
                 return !is_primitive(kP5, F2);
               }});
  a.push_back({"least degree-6 polynomial of order 63", [=](std::string& d) {
                 return expect_eq(find_irreducible_with_order(F2, 6, 63), kP6, d);
               }});
  a.push_back({"least degree-4 polynomial of order 5", [=](std::string& d) {
                 return expect_eq(find_irreducible_with_order(F2, 4, 5), kP5, d);
               }});
  a.push_back({"dlog of 000110 and 111100 mod x^6+x+1 are 9 and 18", [](std::string& d) {
                 const auto ctx = FieldCtx::make(kP6);
                 const auto a9 = dlog(phi(bits("000110"), ctx));
                 const auto a18 = dlog(phi(bits("111100"), ctx));
                 d = std::to_string(a9) + ", " + std::to_string(a18);
                 return a9 == 9 && a18 == 18;
               }});
  a.push_back({"(x^2+x+1)^2 block is the companion of x^4+x^2+1", [](std::string& d) {
                 const Mat m = build_generator(ElementaryDivisorSpec{2, {{p2("1 1 1"), 2}}});
                 d = "";
                 return m == companion_matrix(p2("1 0 1 0 1"));
               }});
  a.push_back({"type of diag(M_{x^4+x+1}, M_{x^6+x+1})", [](std::string& d) {
                 const Mat m = build_generator(ElementaryDivisorSpec{2, {{kP4, 1}, {kP6, 1}}});
                 return expect_eq<std::string>(matrix_type(m).to_string(), "e=((1),(1)) o=(15,63)", d);
               }});
  a.push_back({"<M_{x^4+x+1}> and <M_{x^4+x^3+x^2+x+1}> are not conjugate", [](std::string& d) {
                 d = "";
                 return !same_group_type(companion_matrix(kP4), companion_matrix(kP5));
               }});
  a.push_back({"spread q=2 n=6 k=3 start rows", [](std::string& d) {
                 const auto b = spread_basis({2, 3, 6, kP6});
                 std::string got;
                 for (const auto& r : b) {
                   for (auto x : r) got += char('0' + x);
                   got += ' ';
                 }
                 return expect_eq<std::string>(got, "100000 000110 111100 ", d);
               }});
  a.push_back({"spread q=2 n=6 k=3 is (9, 6)", [](std::string& d) {
                 const auto c = build_spread({2, 3, 6, kP6});
                 return params_are(analyze_primitive(c), 9, 6, d) && params_are(analyze_naive(c), 9, 6, d) && verify_spread(c);
               }});
  a.push_back({"spread q=2 n=6 k=2 is (21, 4)", [](std::string& d) {
                 const auto c = build_spread({2, 2, 6, kP6});
                 return params_are(analyze_primitive(c), 21, 4, d) && params_are(analyze_naive(c), 21, 4, d) && verify_spread(c);
               }});
  a.push_back({"spread q=2 n=6 k=3 distribution and MacWilliams", [](std::string& d) {
                 const auto c = build_spread({2, 3, 6, kP6});
                 const auto p = distance_distribution(c);
                 d = to_string(p);
                 return *p.distribution == std::vector<std::uint64_t>{1, 0, 0, 8} && macwilliams_check(c);
               }});
  a.push_back({"x^4+x^3+x^2+x+1 start {1000,0011,1011} is (5, 4) and a spread", [](std::string& d) {
                 const CyclicOrbitCode c(ElementaryDivisorSpec{2, {{kP5, 1}}}, rows(4, {"1000", "0011"}));
                 return params_are(analyze_irreducible(c), 5, 4, d) && params_are(analyze_naive(c), 5, 4, d) &&
                        verify_spread(c);
               }});
  a.push_back({"block component U_1 under x^4+x+1 is (5, 4)", [](std::string& d) {
                 const CyclicOrbitCode c(ElementaryDivisorSpec{2, {{kP4, 1}}}, rows(4, {"1000", "0110"}));
                 return params_are(analyze_primitive(c), 5, 4, d) && params_are(analyze_naive(c), 5, 4, d);
               }});
  a.push_back({"block component U_2 under x^6+x+1 is (21, 4)", [](std::string& d) {
                 const CyclicOrbitCode c(ElementaryDivisorSpec{2, {{kP6, 1}}}, rows(6, {"100000", "010111"}));
                 return params_are(analyze_primitive(c), 21, 4, d) && params_are(analyze_naive(c), 21, 4, d);
               }});
  a.push_back({"block-diagonal start is (105, 4)", [](std::string& d) {
                 const auto c = block_code(diag_start());
                 return params_are(analyze_reducible_blocks(c), 105, 4, d) && params_are(analyze_naive(c), 105, 4, d);
               }});
  a.push_back({"concatenated start is (315, 4)", [](std::string& d) {
                 const auto c = block_code(concat_start());
                 return params_are(analyze_reducible_blocks(c), 315, 4, d) && params_are(analyze_naive(c), 315, 4, d);
               }});
  a.push_back({"block bounds: lcm 105 and exact distance 4", [](std::string& d) {
                 const auto c = block_code(diag_start());
                 std::vector<CodeParams> comps;
                 for (const auto& x : component_codes(c)) comps.push_back(analyze(x));
                 const auto b = block_bounds(c, comps);
                 d = "cardinality " + std::to_string(b.cardinality.value_or(0)) + ", lower bound " +
                     std::to_string(b.distance_lower_bound.value_or(0)) + (b.distance_is_exact ? " exact" : " not exact");
                 return b.shape == StartShape::diagonal && b.cardinality == 105u && b.distance_lower_bound == 4u &&
                        b.distance_is_exact;
               }});
  a.push_back({"concatenated bounds: distance >= 4", [](std::string& d) {
                 const auto c = block_code(concat_start());
                 std::vector<CodeParams> comps;
                 for (const auto& x : component_codes(c)) comps.push_back(analyze(x));
                 const auto b = block_bounds(c, comps);
                 d = "lower bound " + std::to_string(b.distance_lower_bound.value_or(0));
                 return b.shape == StartShape::concatenated && b.distance_lower_bound == 4u;
               }});
  a.push_back({"search q=2 k=2 n=4 finds d=2:15, d=4:5", [](std::string& d) {
                 SearchConfig cfg{{2, {{kP4, 1}}}, 2, 500, 1, 1, {}};
                 return search_has(random_search(cfg), {{2, 15}, {4, 5}}, d);
               }});
  a.push_back({"search q=2 k=3 n=6 finds d=2:63, d=4:63, d=6:9", [](std::string& d) {
                 SearchConfig cfg{{2, {{kP6, 1}}}, 3, 2000, 1, 1, {}};
                 return search_has(random_search(cfg), {{2, 63}, {4, 63}, {6, 9}}, d);
               }});
  a.push_back({"search order-33 degree-10 k=2 finds d=2:33, d=4:33", [](std::string& d) {
                 const Poly p = find_irreducible_with_order(PrimeField(2), 10, 33);
                 SearchConfig cfg{{2, {{p, 1}}}, 2, 2000, 1, 1, {}};
                 return search_has(random_search(cfg), {{2, 33}, {4, 33}}, d);
               }});
  a.push_back({"error capability examples", [](std::string& d) {
                 const unsigned a1 = error_capability(3, 6, 3), a2 = error_capability(2, 4, 3), a3 = error_capability(3, 2, 3);
                 d = std::to_string(a1) + " " + std::to_string(a2) + " " + std::to_string(a3);
                 return a1 == 1 && a2 == 1 && a3 == 0;
               }});
  return a;
}

}  // namespace coc::tools
