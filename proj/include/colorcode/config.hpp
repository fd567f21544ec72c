#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace colorcode {

// Flat view of a TOML-style file: `[section]` headers and `key = value` lines with integer, boolean or
// double-quoted string values. Keys are addressed as "section.key".
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<long long> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;  // strings unquoted
  std::map<std::string, bool> quoted_;
};

}  // namespace colorcode
