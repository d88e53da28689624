#include "isingcc/half_integer.hpp"

#include <charconv>

#include "isingcc/errors.hpp"

namespace isingcc {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  int num = 0;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) {
      throw Error(ErrorCode::kSchema, "malformed half-integer '" + std::string(text) + "'");
    }
    return HalfInt::integer(num);
  }
  int den = 0;
  if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) {
    throw Error(ErrorCode::kSchema, "malformed half-integer '" + std::string(text) + "'");
  }
  if (den == 1) return HalfInt::integer(num);
  if (den != 2) {
    throw Error(ErrorCode::kSchema, "'" + std::string(text) + "' is not a half-integer (denominator must be 1 or 2)");
  }
  return HalfInt::from_twice(num);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace isingcc
