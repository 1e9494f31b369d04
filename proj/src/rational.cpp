#include "qpos/rational.hpp"

#include <limits>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  if (s.empty() || s == "-" || s == "+") {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

ExactRational::ExactRational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  return ExactRational(num, parse_integer(den_text, text));
}

std::int64_t ExactRational::to_int64() const {
  if (!is_integer()) {
    throw NonIntegralExponent("value " + to_string() + " is not an integer");
  }
  const Integer& n = value_.get_num();
  if (!n.fits_slong_p()) throw RangeError("integer " + n.get_str() + " exceeds 64 bits");
  return n.get_si();
}

std::string ExactRational::to_string() const { return value_.get_str(); }

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw DivisionByZero("rational division by zero");
  return ExactRational(mpq_class(a.value_ / b.value_));
}

}  // namespace qpos
