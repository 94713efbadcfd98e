#include "soficonv/rational.hpp"

#include <algorithm>
#include <cctype>

#include "soficonv/error.hpp"

namespace soficonv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  std::string normalized(s);
  if (normalized.front() == '+') normalized.erase(0, 1);
  return Integer(normalized, 10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error(ErrorCode::ParseError, "not a decimal: '" + std::string(text) + "'");
    }
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Integer den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(negative ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_digits(std::string_view text) {
  std::string_view s = trim(text);
  std::vector<int> digits;
  if (s.find(',') != std::string_view::npos) {
    for (const auto& field : split_list(s)) {
      if (!all_digits(field)) throw Error(ErrorCode::ParseError, "bad digit '" + field + "'");
      digits.push_back(std::stoi(field));
    }
    return digits;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, std::string("bad digit '") + c + "'");
    }
    digits.push_back(c - '0');
  }
  return digits;
}

std::string format_digits(const std::vector<int>& digits) {
  bool wide = std::any_of(digits.begin(), digits.end(), [](int d) { return d > 9 || d < 0; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

long ceil_div(long num, long den) {
  long q = num / den;
  if (num % den != 0 && ((num > 0) == (den > 0))) ++q;
  return q;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace soficonv
