#pragma once

#include <string>

namespace skewent {

/// All emitted floating-point values carry this many significant digits.
inline constexpr int kOutputDigits = 12;

/// Value rounded to kOutputDigits significant digits (non-finite values pass through).
double round_sig(double v);

/// "%.12g" rendering; infinities as "inf" / "-inf".
std::string format_sig(double v);

}  // namespace skewent
