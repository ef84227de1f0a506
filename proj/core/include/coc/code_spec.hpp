#pragma once

// Text and JSON formats shared by the command line tools.
//
// Code spec file:
//   {"q": 2, "blocks": [{"poly": "1 1 0 0 1", "exp": 1}],
//    "start": ["1000", "0110"], "shape": "diag" | "concat" | "free"}
// Rows are digit strings; for q <= 10 the digits may be packed ("0110"),
// otherwise they are separated by spaces.

#include <string>
#include <string_view>
#include <vector>

#include "coc/harness.hpp"
#include "coc/orbit.hpp"

namespace coc {

struct CodeSpecFile {
  unsigned q = 2;
  std::vector<ElementaryDivisor> blocks;
  std::vector<Vec> start;
  std::string shape = "free";

  ElementaryDivisorSpec generator_spec() const { return {q, blocks}; }
  friend bool operator==(const CodeSpecFile&, const CodeSpecFile&) = default;
};

/// Errors name the offending field, e.g. "blocks[1].poly: ...".
CodeSpecFile parse_code_spec(std::string_view json_text);
std::string to_json(const CodeSpecFile& spec);

/// Builds the code; a "diag"/"concat" tag must match start_shape().
CyclicOrbitCode to_code(const CodeSpecFile& spec);
CodeSpecFile from_code(const CyclicOrbitCode& code, std::string shape = "free");

Vec parse_row(unsigned q, std::string_view text, std::size_t expected_len);
std::string format_row(unsigned q, std::span<const Elem> row);

/// Polynomial given inline ("1 1 0 0 1") or packed ("11001", q <= 10).
Poly parse_poly_text(unsigned q, std::string_view text);

std::string read_text_file(const std::string& path);

std::string params_to_json(const CodeParams& p, const std::string& regime, const std::string& analyzer,
                           const std::optional<BoundsReport>& bounds, const std::vector<std::string>& notes);
std::string decode_result_to_json(const DecodeResult& r, unsigned f_used, std::uint64_t lf_bound);
std::string matrix_type_to_json(const MatrixType& t);
std::string simulation_to_json(const SimulationStats& s);

}  // namespace coc
