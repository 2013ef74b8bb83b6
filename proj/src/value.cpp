#include "rla/value.hpp"

#include <sstream>

namespace rla {

std::string format_value(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  std::ostringstream out;
  out << '"';
  for (char c : v.as_text()) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
  return out.str();
}

}  // namespace rla
