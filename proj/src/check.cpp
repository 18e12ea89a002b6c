#include "qhh/check.hpp"

#include <sstream>

namespace qhh {

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << (passed ? "PASS" : "FAIL");
  for (const auto& line : lines) os << "\n  " << line;
  return os.str();
}

}  // namespace qhh
