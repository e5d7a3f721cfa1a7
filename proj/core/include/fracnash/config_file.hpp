#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fracnash {

/// Flat dotted-key configuration: one `key = value` per line, `#` comments,
/// blank lines ignored. Values are scalars, booleans, strings, or
/// comma-separated numeric lists.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(const std::string& text);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<int> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<double>> get_double_list(const std::string& key) const;

  /// Keys present in the config but not in `known`; used to reject typos.
  std::vector<std::string> unknown_keys(const std::vector<std::string>& known) const;

  void set(const std::string& key, const std::string& value) { entries_[key] = value; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Parse a comma-separated list of numbers ("0.6,0.7,0.8").
std::vector<double> parse_double_list(const std::string& text);

}  // namespace fracnash
