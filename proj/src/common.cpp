#include <cstdio>

#include "copzero/common.hpp"

namespace copzero {

std::string scalar_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace copzero
