#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace loopkit {

/// Elements of a finite loop are the indices 0..n-1; the identity is 0.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// Structured pass/fail outcome with ordered key=value detail lines.
///
/// Rendered form is line oriented: the first line is `status=pass` or
/// `status=fail`, followed by one `key=value` line per field in insertion
/// order. Values never contain newlines.
class Report {
 public:
  Report() = default;
  explicit Report(std::string name, bool pass = true)
      : name_(std::move(name)), pass_(pass) {}

  const std::string& name() const { return name_; }
  bool pass() const { return pass_; }
  explicit operator bool() const { return pass_; }

  Report& set_pass(bool pass) {
    pass_ = pass;
    return *this;
  }
  Report& fail() { return set_pass(false); }

  Report& add(std::string key, std::string value);
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Report& add(std::string key, std::size_t value);
  Report& add(std::string key, long long value);
  Report& add(std::string key, bool value);
  Report& add_elements(std::string key, std::span<const Element> values);

  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }

  /// Appends another report's status and fields under `prefix.`.
  Report& merge(const Report& other, std::string_view prefix);

  std::string to_text() const;

 private:
  std::string name_;
  bool pass_ = true;
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string join_elements(std::span<const Element> values, char sep = ',');

}  // namespace loopkit
