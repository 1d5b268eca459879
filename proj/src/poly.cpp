#include "tldkit/poly.hpp"

#include <cctype>
#include <utility>

#include "tldkit/errors.hpp"

namespace tldkit {

Poly::Poly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(BigInt coeff, int degree) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, BigInt(0));
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

BigInt Poly::coeff(int deg) const {
  if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[deg];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::scale_by_monomial(const BigInt& coeff, int degree) {
  if (coeff == 0 || is_zero()) {
    coeffs_.clear();
    return *this;
  }
  coeffs_.insert(coeffs_.begin(), degree, BigInt(0));
  if (coeff != 1)
    for (auto& c : coeffs_) c *= coeff;
  return *this;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (a.degree() < b.degree()) throw NotDivisible("quotient degree would be negative");
  const std::vector<BigInt>& bc = b.coeffs();
  const BigInt& lead = bc.back();
  if (b.degree() == 0) {
    if (lead == 1) return a;
    Poly res = a;
    for (auto& c : res.coeffs_) {
      if (c % lead != 0) throw NotDivisible("coefficient not divisible");
      c /= lead;
    }
    return res;
  }
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
  // Schoolbook division from the top; every step must divide exactly.
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    BigInt& top = r[k + b.degree()];
    if (top == 0) continue;
    if (top % lead != 0) throw NotDivisible("leading coefficient does not divide");
    BigInt f = top / lead;
    top = 0;
    for (int j = 0; j < b.degree(); ++j)
      if (bc[j] != 0) r[k + j] -= f * bc[j];
    q[k] = std::move(f);
  }
  for (const auto& c : r)
    if (c != 0) throw NotDivisible("nonzero remainder");
  Poly res;
  res.coeffs_ = std::move(q);
  res.trim();
  return res;
}

Poly power(const Poly& base, long exp) {
  if (exp < 0) throw InvalidArguments("negative polynomial power");
  Poly r(BigInt(1));
  Poly b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return r;
}

Poly chebyshev_p(int s) {
  if (s < 0) throw InvalidIndex("chebyshev_p index must be >= 0");
  Poly prev;                // P_0 = 0
  Poly cur(BigInt(1));      // P_1 = 1
  if (s == 0) return prev;
  const Poly d = Poly::variable();
  for (int i = 1; i < s; ++i) {
    Poly next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly chebyshev_q(int t) {
  if (t < 1) throw InvalidIndex("chebyshev_q index must be >= 1");
  if (t == 1) return Poly(BigInt(1));
  Poly prev = Poly::monomial(1, 2);               // Q_2
  Poly cur = Poly::monomial(1, 3) + Poly::monomial(-2, 1);  // Q_3
  if (t == 2) return prev;
  const Poly d = Poly::variable();
  for (int i = 3; i < t; ++i) {
    Poly next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += 'd';
      if (k > 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out;
}

namespace {

[[noreturn]] void bad_poly(const std::string& text) {
  throw InvalidArguments("not a canonical polynomial: " + text);
}

} // namespace

Poly Poly::parse(const std::string& text) {
  if (text.empty()) bad_poly(text);
  if (text == "0") return Poly();
  Poly result;
  size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      if (first && text[i] == '+') bad_poly(text);
      neg = text[i] == '-';
      ++i;
      if (i == text.size()) bad_poly(text);
    }
    first = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    int deg = 0;
    if (!digits.empty() && i < text.size() && text[i] == '*') {
      ++i;
      if (i == text.size() || text[i] != 'd') bad_poly(text);
    }
    if (i < text.size() && text[i] == 'd') {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string exp;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp += text[i++];
        if (exp.empty()) bad_poly(text);
        deg = std::stoi(exp);
        if (deg < 2) bad_poly(text);  // canonical form writes d, not d^1/d^0
      }
    } else if (digits.empty()) {
      bad_poly(text);  // sign with neither digits nor variable
    }
    if (deg == 0 && coeff == 0) bad_poly(text);  // explicit 0 term is not canonical
    if (neg) coeff = -coeff;
    if (result.coeff(deg) != 0) bad_poly(text);  // repeated degree
    result += Poly::monomial(coeff, deg);
  }
  return result;
}

} // namespace tldkit
