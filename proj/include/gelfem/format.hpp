#pragma once

#include <cstdio>
#include <string>

namespace gelfem {

/// Shortest-form "%.17g" rendering used by every text output.
inline std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace gelfem
