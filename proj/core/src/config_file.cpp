#include "fracnash/config_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fracnash/csv.hpp"
#include "fracnash/errors.hpp"

namespace fracnash {

namespace {
std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}
}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument("config: line " + std::to_string(line_no) + " has no '='");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw InvalidArgument("config: empty key on line " + std::to_string(line_no));
    cfg.entries_[key] = value;
  }
  return cfg;
}

std::optional<std::string> KeyValueConfig::get_string(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> KeyValueConfig::get_double(const std::string& key) const {
  auto s = get_string(key);
  if (!s) return std::nullopt;
  return parse_double(*s);
}

std::optional<int> KeyValueConfig::get_int(const std::string& key) const {
  auto s = get_string(key);
  if (!s) return std::nullopt;
  try {
    size_t used = 0;
    const int v = std::stoi(*s, &used);
    if (used != s->size()) throw std::invalid_argument(*s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("config: '" + key + "' is not an integer: " + *s);
  }
}

std::optional<bool> KeyValueConfig::get_bool(const std::string& key) const {
  auto s = get_string(key);
  if (!s) return std::nullopt;
  if (*s == "true" || *s == "1" || *s == "yes") return true;
  if (*s == "false" || *s == "0" || *s == "no") return false;
  throw InvalidArgument("config: '" + key + "' is not a boolean: " + *s);
}

std::optional<std::vector<double>> KeyValueConfig::get_double_list(const std::string& key) const {
  auto s = get_string(key);
  if (!s) return std::nullopt;
  return parse_double_list(*s);
}

std::vector<std::string> KeyValueConfig::unknown_keys(const std::vector<std::string>& known) const {
  std::vector<std::string> out;
  for (const auto& [key, value] : entries_)
    if (std::find(known.begin(), known.end(), key) == known.end()) out.push_back(key);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const std::string t = item.find_first_not_of(" \t") == std::string::npos
                              ? item
                              : item.substr(item.find_first_not_of(" \t"),
                                            item.find_last_not_of(" \t") -
                                                item.find_first_not_of(" \t") + 1);
    values.push_back(parse_double(t));
  }
  if (values.empty()) throw InvalidArgument("expected a non-empty number list");
  return values;
}

}  // namespace fracnash
