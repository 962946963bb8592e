#pragma once

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <string>

namespace squeeze {

inline constexpr int output_digits = 15;

/// Fixed 15-significant-digit text for every number written to disk, so
/// artifacts from identical runs diff cleanly.
inline std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", output_digits, value);
  return buf;
}

/// Rounds to the value whose shortest decimal form has at most 15 significant
/// digits, for serializers that print shortest round-trip representations.
inline double round_to_output_digits(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(format_number(value));
}

inline void write_csv_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

}  // namespace squeeze
