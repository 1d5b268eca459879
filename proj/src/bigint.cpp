#include "tldkit/bigint.hpp"

#include <cctype>

#include "tldkit/errors.hpp"

namespace tldkit {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw InvalidArguments("not a rational: " + text);
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw InvalidArguments("not a rational: " + text);
  BigInt nu(num), d(den);
  if (d == 0) throw InvalidArguments("zero denominator: " + text);
  if (d < 0) {
    nu = -nu;
    d = -d;
  }
  return Rational(nu, d);
}

std::string format_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

} // namespace tldkit
