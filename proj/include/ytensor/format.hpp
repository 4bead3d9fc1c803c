#pragma once

#include <charconv>
#include <string>

namespace ytensor {

/// Shortest round-trip decimal form, always with '.' regardless of locale.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace ytensor
