#ifndef REGAL_VERDICT_HPP
#define REGAL_VERDICT_HPP

#include <string>
#include <vector>

namespace regal {

/// One named sub-check inside a verification verdict.
struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

}  // namespace regal

#endif
