#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\" (expected integer or p/q)");
  }
  const Integer d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\" (zero denominator)");
  }
  Rational value(Integer{std::string(num)}, d);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::vector<std::string> to_strings(const RatVector& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace fh
