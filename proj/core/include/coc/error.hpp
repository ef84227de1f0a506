#pragma once

#include <stdexcept>
#include <string>

namespace coc {

/// Raised for every domain error: violated preconditions, malformed input,
/// infeasible requests. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coc
