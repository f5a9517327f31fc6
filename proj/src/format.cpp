#include "skewent/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace skewent {

double round_sig(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, v);
  return std::strtod(buf, nullptr);
}

std::string format_sig(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, v);
  return buf;
}

}  // namespace skewent
