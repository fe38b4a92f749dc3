#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdpt {

inline constexpr double kAtomicTimePerFemtosecond = 41.3413745758;

/// Flat "key = value" configuration with '#' comments.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in, const std::string& origin = "<stream>");
  static KeyValueConfig parse_string(const std::string& text);
  static KeyValueConfig load(const std::filesystem::path& path);

  /// Applies a "key=value" override. Throws ConfigError if malformed.
  void apply_override(const std::string& assignment);
  void set(const std::string& key, const std::string& value);
  void erase(const std::string& key);

  bool contains(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::size_t> get_size_list(const std::string& key) const;

  std::string to_string() const;

 private:
  std::map<std::string, std::string> entries_;
};

std::string format_double(double value);
double parse_double(const std::string& text, const std::string& key);
std::size_t parse_size(const std::string& text, const std::string& key);

}  // namespace tdpt
