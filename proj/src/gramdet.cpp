#include "tldkit/gramdet.hpp"

#include <map>
#include <utility>

#include "tldkit/cellular.hpp"
#include "tldkit/errors.hpp"
#include "tldkit/matrix.hpp"

namespace tldkit {

namespace {

long small(const BigInt& v) { return v.convert_to<long>(); }

// det of the plain cell with p arcs at size n, by the size recurrence.
// The convention n = 2p denotes the combined signed matrix. Each step
// divides out Q_{n-2p+1}^binomial(n-1, p-1); the division is exact.
Poly plain_det_rec(int n, int p, std::map<std::pair<int, int>, Poly>& memo) {
  if (p == 0) return Poly(1);
  const auto key = std::make_pair(n, p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Poly result;
  if (n == 2 * p) {
    const Poly down = plain_det_rec(2 * p - 1, p - 1, memo);
    result = Poly::monomial(1, small(binomial(2 * p, p))) * down * down;
  } else if (p == 1) {
    result = chebyshev_q(n);
  } else {
    const long e = small(binomial(n - 1, p - 1));
    const Poly num = plain_det_rec(n - 1, p, memo) *
                     power(chebyshev_q(n - 2 * p + 2), e) *
                     plain_det_rec(n - 1, p - 1, memo);
    result = divexact(num, power(chebyshev_q(n - 2 * p + 1), e));
  }
  memo.emplace(key, result);
  return result;
}

Poly plain_det_rec(int n, int p) {
  std::map<std::pair<int, int>, Poly> memo;
  return plain_det_rec(n, p, memo);
}

// The closed Q-ratio product for the plain cell with p arcs at size n,
// n >= 2p; empty products give 1 and the division is exact.
Poly plain_det_closed(int n, int p) {
  Poly num(1);
  Poly den(1);
  const auto ratio = [&](int top, int bottom, const BigInt& e) {
    num *= power(chebyshev_q(top), small(e));
    den *= power(chebyshev_q(bottom), small(e));
  };
  for (int r = 0; r < p; ++r) ratio(n - p - r + 1, p - r, binomial(n, r));
  for (int s = 1; s < p; ++s) {
    const BigInt outer = binomial(n - 2 * (p - s + 1), s - 1);
    for (int r = 0; r < p - s; ++r)
      ratio(p - s - r + 2, p - s - r, binomial(2 * (p - s) + 1, r) * outer);
  }
  return divexact(num, den);
}

Poly type_a_det_rec(int n, int p, std::map<std::pair<int, int>, Poly>& memo) {
  if (p == 0) return Poly(1);
  const auto key = std::make_pair(n, p);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const long e = small(binomial(n - 1, p - 1) - binomial(n - 1, p - 2));
  Poly result;
  if (n == 2 * p) {
    result = Poly::monomial(1, e) * type_a_det_rec(n - 1, p - 1, memo);
  } else {
    const Poly num = type_a_det_rec(n - 1, p, memo) *
                     power(chebyshev_p(n - 2 * p + 2), e) *
                     type_a_det_rec(n - 1, p - 1, memo);
    result = divexact(num, power(chebyshev_p(n - 2 * p + 1), e));
  }
  memo.emplace(key, result);
  return result;
}

Poly type_a_det_rec(int n, int p) {
  std::map<std::pair<int, int>, Poly> memo;
  return type_a_det_rec(n, p, memo);
}

}  // namespace

std::string det_method_name(DetMethod method) {
  switch (method) {
    case DetMethod::Direct: return "direct";
    case DetMethod::Recurrence: return "recurrence";
    case DetMethod::Closed: return "closed";
  }
  throw InvalidArguments("unknown determinant method");
}

DetMethod parse_det_method(const std::string& text) {
  if (text == "direct") return DetMethod::Direct;
  if (text == "recurrence") return DetMethod::Recurrence;
  if (text == "closed") return DetMethod::Closed;
  throw InvalidArguments("unknown determinant method: " + text);
}

DetResult det_gram(int n, const CellLabel& cell, DetMethod method) {
  if (!cell_valid_for(cell, n))
    throw InvalidArguments("cell " + cell.str() + " not valid at size " + std::to_string(n));
  const int p = cell.p_of(n);
  Poly value;
  switch (method) {
    case DetMethod::Direct:
      value = det_bareiss(gram(n, cell).entries);
      break;
    case DetMethod::Recurrence:
      switch (cell.kind) {
        case CellKind::Plain:
          value = plain_det_rec(n, p);
          break;
        case CellKind::ZeroPlus:
        case CellKind::ZeroMinus:
          // Each signed matrix contributes half the combined determinant.
          value = Poly::monomial(1, small(binomial(n, p) / 2)) *
                  plain_det_rec(n - 1, p - 1);
          break;
        case CellKind::Dotted: {
          // The dotted matrix is d times the undecorated one.
          const long size = small(binomial(n, p) - binomial(n, p - 1));
          value = Poly::monomial(1, size) * type_a_det_rec(n, p);
          break;
        }
      }
      break;
    case DetMethod::Closed:
      if (cell.kind != CellKind::Plain)
        throw MethodUnsupported("closed form only covers plain cells");
      value = plain_det_closed(n, p);
      break;
  }
  return DetResult{n, cell.str(), method, std::move(value)};
}

DetResult det_gram_pseudo(int p, DetMethod method) {
  if (p < 1) throw InvalidArguments("pseudo determinant needs p >= 1");
  Poly value;
  switch (method) {
    case DetMethod::Direct:
      value = det_bareiss(gram_pseudo(p).entries);
      break;
    case DetMethod::Recurrence:
      value = plain_det_rec(2 * p, p);
      break;
    case DetMethod::Closed:
      value = plain_det_closed(2 * p, p);
      break;
  }
  return DetResult{2 * p, "pseudo:" + std::to_string(p), method, std::move(value)};
}

DetResult det_gram_type_a(int n, int p, DetMethod method) {
  if (n < 1 || p < 0 || 2 * p > n)
    throw InvalidArguments("undecorated determinant needs 0 <= 2p <= n");
  Poly value;
  switch (method) {
    case DetMethod::Direct:
      value = det_bareiss(gram_type_a(n, p).entries);
      break;
    case DetMethod::Recurrence:
      value = type_a_det_rec(n, p);
      break;
    case DetMethod::Closed:
      throw MethodUnsupported("no closed form for the undecorated determinants");
  }
  const std::string label = "typeA:" + std::to_string(n) + "," + std::to_string(p);
  return DetResult{n, label, method, std::move(value)};
}

RatioPair r_ratio(int n, int p) {
  if (p < 0 || n < 2 * p + 1) throw InvalidArguments("ratio needs n >= 2p+1");
  return RatioPair{chebyshev_q(n - 2 * p + 2), chebyshev_q(n - 2 * p + 1)};
}

bool det_product_identity(int n, int p) {
  if (p < 0 || n < 2 * p) throw InvalidArguments("identity needs n >= 2p");
  Poly lhs_num(1), lhs_den(1), rhs_num(1), rhs_den(1);
  const auto ratio = [](Poly& num, Poly& den, int top, int bottom, const BigInt& e) {
    num *= power(chebyshev_q(top), small(e));
    den *= power(chebyshev_q(bottom), small(e));
  };
  for (int r = 0; r < p; ++r)
    ratio(lhs_num, lhs_den, n - p - r + 1, p - r, binomial(n, r));
  for (int r = 0; r < p; ++r)
    ratio(rhs_num, rhs_den, n - p - r, p - r, binomial(n - 1, r));
  ratio(rhs_num, rhs_den, n - 2 * p + 2, n - 2 * p + 1, binomial(n - 1, p - 1));
  for (int r = 0; r + 1 < p; ++r)
    ratio(rhs_num, rhs_den, n - p - r + 1, p - r - 1, binomial(n - 1, r));
  return lhs_num * rhs_den == rhs_num * lhs_den;
}

Verdict semisimple(int n, const Rational& delta) {
  if (n < 4) throw InvalidArguments("semi-simplicity test needs n >= 4");
  Verdict v;
  for (int s = 2; s <= n; ++s)
    if (chebyshev_p(s).eval(delta) == 0) v.witnesses.push_back({"P", s, 0});
  for (int t = 3; t <= n; ++t)
    if (chebyshev_q(t).eval(delta) == 0) v.witnesses.push_back({"Q", t, 0});
  v.decision = v.witnesses.empty();
  return v;
}

Verdict semisimple_crosscheck(int n, const Rational& delta) {
  if (n != 4 && n != 5) throw InvalidArguments("crosscheck runs at n = 4 or 5 only");
  Verdict v;
  for (const CellLabel& cell : cells(n))
    if (det_gram(n, cell, DetMethod::Direct).value.eval(delta) == 0)
      v.witnesses.push_back({cell.str(), n, 0});
  v.decision = v.witnesses.empty();
  return v;
}

Verdict quasihereditary(int n, const Rational& delta) {
  if (n < 2) throw InvalidArguments("quasi-heredity test needs n >= 2");
  Verdict v;
  v.decision = delta != 0;
  if (!v.decision)
    for (const CellLabel& cell : cells(n))
      if (cell.kind == CellKind::Dotted) v.witnesses.push_back({"Phidot", cell.k, 0});
  return v;
}

}  // namespace tldkit
