#include "flexcontact/numbers.hpp"

#include "flexcontact/errors.hpp"

#include <cctype>

namespace flexcontact {

namespace {

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  require(is_signed_digits(text), "not an integer: '" + std::string(text) + "'");
  return Integer(strip_plus(text), 10);
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    require(is_signed_digits(num) && is_signed_digits(den),
            "not a rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    require(d != 0, "zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    require(is_signed_digits(whole) && !frac.empty() && is_signed_digits(frac) &&
                frac.front() != '-' && frac.front() != '+',
            "not a decimal: '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = parse_integer(whole);
    if (w < 0) w = -w;
    Rational r(w * scale + Integer(std::string(frac), 10), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_str(10);
}

Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (long e = exponent >= 0 ? exponent : -exponent; e > 0; --e) result *= b;
  return result;
}

}  // namespace flexcontact
