#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coc::tools {

struct GoldenAnchor {
  std::string name;
  /// Returns true on success; detail receives a one-line explanation.
  std::function<bool(std::string& detail)> check;
};

std::vector<GoldenAnchor> golden_anchors();

}  // namespace coc::tools
