#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace rla {

/// Typed scalar cell value: integer, text, or boolean.
///
/// Values of different types never compare equal. The total order used for
/// deterministic output sorts by type first (int < text < bool), then by
/// payload (numeric, lexicographic, false < true).
class Value {
 public:
  Value() : v_(std::int64_t{0}) {}
  Value(std::int64_t n) : v_(n) {}
  Value(int n) : v_(static_cast<std::int64_t>(n)) {}
  Value(bool b) : v_(b) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}

  bool is_int() const noexcept { return v_.index() == 0; }
  bool is_text() const noexcept { return v_.index() == 1; }
  bool is_bool() const noexcept { return v_.index() == 2; }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Value& a, const Value& b) { return a.v_ != b.v_; }
  friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Value& a, const Value& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Value& a, const Value& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Value& a, const Value& b) { return a.v_ >= b.v_; }

 private:
  std::variant<std::int64_t, std::string, bool> v_;
};

/// Display form: `7`, `"text"` (backslash-escaped), `true`/`false`.
/// Injective across types, so formatted relations distinguish 1 from "1".
std::string format_value(const Value& v);

}  // namespace rla
