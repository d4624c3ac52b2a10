#pragma once

#include <string>

namespace cavityswap {

/// 17 significant digits, so every double survives a text round trip.
std::string format_double(double v);

}  // namespace cavityswap
