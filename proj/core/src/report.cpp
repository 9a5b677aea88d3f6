#include "loopkit/report.hpp"

#include <sstream>

namespace loopkit {

namespace {

std::string sanitize(std::string value) {
  for (char& c : value) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return value;
}

}  // namespace

Report& Report::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), sanitize(std::move(value)));
  return *this;
}

Report& Report::add(std::string key, std::size_t value) {
  return add(std::move(key), std::to_string(value));
}

Report& Report::add(std::string key, long long value) {
  return add(std::move(key), std::to_string(value));
}

Report& Report::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

Report& Report::add_elements(std::string key, std::span<const Element> values) {
  return add(std::move(key), join_elements(values));
}

std::optional<std::string> Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Report& Report::merge(const Report& other, std::string_view prefix) {
  std::string p(prefix);
  add(p + ".status", std::string(other.pass() ? "pass" : "fail"));
  for (const auto& [k, v] : other.fields()) add(p + "." + k, v);
  return *this;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "status=" << (pass_ ? "pass" : "fail") << '\n';
  if (!name_.empty()) out << "report=" << name_ << '\n';
  for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
  return out.str();
}

std::string join_elements(std::span<const Element> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace loopkit
