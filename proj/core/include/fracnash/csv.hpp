#pragma once

#include <string>
#include <vector>

namespace fracnash {

/// Locale-independent shortest round-trip decimal text for a double; parsing
/// it back yields the identical bits.
std::string format_double(double value);

/// Locale-independent parse; throws on malformed text.
double parse_double(const std::string& text);

/// Split one CSV line on commas (no quoting; the formats here never need it).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace fracnash
