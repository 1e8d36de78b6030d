#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adradar {

/// Sectioned key/value configuration:
///
///   # comment
///   [section]
///   key = value
///
/// Values are parsed on access; missing required keys and malformed numbers
/// raise std::invalid_argument naming the offending "section.key".
class Config {
 public:
  Config() = default;

  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;

  int get_int(const std::string& section, const std::string& key) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  /// Comma-separated list of doubles.
  std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

  void set(const std::string& section, const std::string& key, const std::string& value);

 private:
  std::optional<std::string> lookup(const std::string& section, const std::string& key) const;

  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace adradar
