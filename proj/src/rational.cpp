#include "fgcx/rational.hpp"

#include <cctype>
#include <charconv>

#include "fgcx/errors.hpp"

namespace fgcx {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("malformed rational '" + text + "'");
    }
    return v;
  };
  std::string_view s = text;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  std::int64_t num = parse_int(s.substr(0, slash));
  std::int64_t den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = floor(r);
  return Rational(q) == r ? q : q + 1;
}

}  // namespace fgcx
