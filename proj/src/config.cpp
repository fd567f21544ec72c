#include "colorcode/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool bare_key(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

// Drops a trailing comment outside quotes.
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    const std::string where = "config line " + std::to_string(line_no);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!bare_key(section)) throw ParseError(where + ": bad section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!bare_key(key)) throw ParseError(where + ": bad key '" + key + "'");
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full)) throw ParseError(where + ": duplicate key " + full);
    bool quoted = false;
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') throw ParseError(where + ": unterminated string");
      value = value.substr(1, value.size() - 2);
      quoted = true;
    } else if (value.empty()) {
      throw ParseError(where + ": missing value");
    }
    cfg.values_[full] = value;
    cfg.quoted_[full] = quoted;
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<std::string> Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (!quoted_.at(key)) throw ParseError("config key " + key + " must be a quoted string");
  return it->second;
}

std::optional<long long> Config::get_int(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (quoted_.at(key) || used != it->second.size()) throw ParseError("config key " + key + " must be an integer");
  return v;
}

std::optional<bool> Config::get_bool(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (!quoted_.at(key) && it->second == "true") return true;
  if (!quoted_.at(key) && it->second == "false") return false;
  throw ParseError("config key " + key + " must be true or false");
}

}  // namespace colorcode
