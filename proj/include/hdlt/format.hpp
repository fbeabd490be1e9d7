#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace hdlt {

/// Locale-independent float formatting with a fixed number of significant
/// digits. All user-visible numeric output goes through here so that results
/// are byte-identical across runs and locales.
inline std::string format_double(double value, int significant = 6) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, significant);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

/// Fixed-decimal variant used by the Markdown tables (rates such as 0.046).
inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, decimals);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

}  // namespace hdlt
