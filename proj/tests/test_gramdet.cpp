#include <vector>

#include "doctest.h"
#include "tldkit/bigint.hpp"
#include "tldkit/cellular.hpp"
#include "tldkit/errors.hpp"
#include "tldkit/gramdet.hpp"
#include "tldkit/matrix.hpp"

using namespace tldkit;

namespace {

const Poly D = Poly::variable();

Poly det_of(int n, const CellLabel& cell, DetMethod m) {
  return det_gram(n, cell, m).value;
}

long exponent_of(const BigInt& v) { return v.convert_to<long>(); }

}  // namespace

TEST_SUITE("gramdet") {

TEST_CASE("method names parse and print") {
  for (DetMethod m : {DetMethod::Direct, DetMethod::Recurrence, DetMethod::Closed})
    CHECK(parse_det_method(det_method_name(m)) == m);
  CHECK(det_method_name(DetMethod::Direct) == "direct");
  CHECK_THROWS_AS(parse_det_method("fast"), InvalidArguments);
}

TEST_CASE("frozen determinants") {
  CHECK(det_of(3, CellLabel::plain(1), DetMethod::Direct) == Poly::parse("d^3-2*d"));
  CHECK(det_of(4, CellLabel::zero_plus(), DetMethod::Direct) == Poly::parse("d^6-2*d^4"));
  CHECK(det_of(4, CellLabel::zero_minus(), DetMethod::Direct) == Poly::parse("d^6-2*d^4"));
  CHECK(det_of(2, CellLabel::dotted(0), DetMethod::Direct) == Poly::parse("d^2"));
  CHECK(det_of(4, CellLabel::dotted(2), DetMethod::Direct) == Poly::parse("d^6-2*d^4"));
  for (int n = 2; n <= 8; ++n)
    for (DetMethod m : {DetMethod::Direct, DetMethod::Recurrence, DetMethod::Closed})
      CHECK(det_of(n, CellLabel::plain(n), m) == Poly(1));

  DetResult r = det_gram(3, CellLabel::plain(1), DetMethod::Recurrence);
  CHECK(r.n == 3);
  CHECK(r.cell == "plain:1");
  CHECK(r.method == DetMethod::Recurrence);
}

TEST_CASE("one-arc determinants follow the Q sequence") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const CellLabel cell = CellLabel::plain(n - 2);
    const Poly expected = chebyshev_q(n);
    CHECK(det_of(n, cell, DetMethod::Direct) == expected);
    CHECK(det_of(n, cell, DetMethod::Recurrence) == expected);
    CHECK(det_of(n, cell, DetMethod::Closed) == expected);
  }
}

TEST_CASE("plain routes agree") {
  for (int n = 2; n <= 7; ++n)
    for (int k = n % 2 == 0 ? 2 : 1; k <= n; k += 2) {
      CAPTURE(n);
      CAPTURE(k);
      const CellLabel cell = CellLabel::plain(k);
      const Poly direct = det_of(n, cell, DetMethod::Direct);
      CHECK(direct == det_of(n, cell, DetMethod::Recurrence));
      CHECK(direct == det_of(n, cell, DetMethod::Closed));
    }
}

TEST_CASE("recurrence and closed routes agree further out") {
  for (int n = 8; n <= 10; ++n)
    for (int k = n % 2 == 0 ? 2 : 1; k <= n; k += 2) {
      CAPTURE(n);
      CAPTURE(k);
      const CellLabel cell = CellLabel::plain(k);
      CHECK(det_of(n, cell, DetMethod::Recurrence) == det_of(n, cell, DetMethod::Closed));
    }
}

TEST_CASE("published eight-strand determinant") {
  const Poly expected = Poly::monomial(1, 58) * power(Poly::parse("d^2-2"), 8) *
                        power(Poly::parse("d^2-3"), 29) *
                        power(Poly::parse("d^4-4*d^2+2"), 8) * Poly::parse("d^4-5*d^2+5");
  CHECK(expected.degree() == 168);
  CHECK(det_of(8, CellLabel::plain(2), DetMethod::Recurrence) == expected);
  CHECK(det_of(8, CellLabel::plain(2), DetMethod::Closed) == expected);
}

TEST_CASE("signed determinants split the combined one") {
  for (int p = 1; p <= 3; ++p) {
    CAPTURE(p);
    const int n = 2 * p;
    const Poly plus = det_of(n, CellLabel::zero_plus(), DetMethod::Direct);
    const Poly minus = det_of(n, CellLabel::zero_minus(), DetMethod::Direct);
    CHECK(plus == minus);
    CHECK(plus == det_of(n, CellLabel::zero_plus(), DetMethod::Recurrence));
    const Poly scale = Poly::monomial(1, exponent_of(binomial(n, p) / 2));
    const Poly down =
        p == 1 ? Poly(1) : det_of(n - 1, CellLabel::plain(1), DetMethod::Direct);
    CHECK(plus == scale * down);
    for (DetMethod m : {DetMethod::Direct, DetMethod::Recurrence, DetMethod::Closed})
      CHECK(det_gram_pseudo(p, m).value == plus * minus);
  }
  CHECK(det_gram_pseudo(2, DetMethod::Direct).value == Poly::parse("d^12-4*d^10+4*d^8"));
  CHECK_THROWS_AS(det_gram_pseudo(0, DetMethod::Direct), InvalidArguments);
}

TEST_CASE("dotted determinants are a power of d times undecorated ones") {
  for (int n = 2; n <= 6; ++n)
    for (const CellLabel& cell : cells(n)) {
      if (cell.kind != CellKind::Dotted) continue;
      CAPTURE(n);
      CAPTURE(cell.k);
      const int p = cell.p_of(n);
      const Poly direct = det_of(n, cell, DetMethod::Direct);
      CHECK(direct == det_of(n, cell, DetMethod::Recurrence));
      const long size = exponent_of(binomial(n, p) - binomial(n, p - 1));
      CHECK(direct == Poly::monomial(1, size) * det_gram_type_a(n, p, DetMethod::Direct).value);
    }
}

TEST_CASE("undecorated determinants") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(det_gram_type_a(n, 1, DetMethod::Direct).value == chebyshev_p(n));
    CHECK(det_gram_type_a(n, 1, DetMethod::Recurrence).value == chebyshev_p(n));
  }
  CHECK(det_gram_type_a(4, 2, DetMethod::Direct).value == Poly::parse("d^4-d^2"));
  CHECK(det_gram_type_a(5, 0, DetMethod::Direct).value == Poly(1));
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(det_gram_type_a(n, p, DetMethod::Direct).value ==
            det_gram_type_a(n, p, DetMethod::Recurrence).value);
    }
  CHECK_THROWS_AS(det_gram_type_a(3, 2, DetMethod::Direct), InvalidArguments);
  CHECK_THROWS_AS(det_gram_type_a(0, 0, DetMethod::Direct), InvalidArguments);
}

TEST_CASE("unsupported method combinations throw") {
  CHECK_THROWS_AS(det_gram(4, CellLabel::dotted(2), DetMethod::Closed), MethodUnsupported);
  CHECK_THROWS_AS(det_gram(4, CellLabel::zero_plus(), DetMethod::Closed), MethodUnsupported);
  CHECK_THROWS_AS(det_gram_type_a(4, 1, DetMethod::Closed), MethodUnsupported);
  CHECK_THROWS_AS(det_gram(4, CellLabel::plain(1), DetMethod::Direct), InvalidArguments);
  CHECK_THROWS_AS(det_gram(3, CellLabel::zero_plus(), DetMethod::Direct), InvalidArguments);
}

TEST_CASE("size step identity on direct determinants") {
  for (int n = 3; n <= 6; ++n)
    for (int p = 1; 2 * p + 1 <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const Poly lhs = det_of(n, CellLabel::plain(n - 2 * p), DetMethod::Direct);
      const Poly down_same = n - 1 == 2 * p
                                 ? det_gram_pseudo(p, DetMethod::Direct).value
                                 : det_of(n - 1, CellLabel::plain(n - 1 - 2 * p), DetMethod::Direct);
      const Poly down_fewer = det_of(n - 1, CellLabel::plain(n + 1 - 2 * p), DetMethod::Direct);
      const RatioPair r = r_ratio(n, p);
      const long e = exponent_of(binomial(n - 1, p - 1));
      CHECK(lhs * power(r.den, e) == down_same * power(r.num, e) * down_fewer);
    }
}

TEST_CASE("ratio pairs") {
  CHECK(r_ratio(5, 2) == RatioPair{Poly::parse("d^3-2*d"), Poly::parse("d^2")});
  CHECK(r_ratio(6, 2) == RatioPair{chebyshev_q(4), chebyshev_q(3)});
  CHECK_THROWS_AS(r_ratio(4, 2), InvalidArguments);
  // Consecutive ratios interlock: r(n+1) = d - 1/r(n) after clearing
  // denominators.
  for (int p = 1; p <= 3; ++p)
    for (int n = 2 * p + 1; n <= 2 * p + 6; ++n) {
      CAPTURE(n);
      CAPTURE(p);
      const RatioPair cur = r_ratio(n, p);
      const RatioPair next = r_ratio(n + 1, p);
      CHECK(next.num * cur.num == (D * cur.num - cur.den) * next.den);
    }
}

TEST_CASE("ratio product identity") {
  for (int n = 2; n <= 8; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(det_product_identity(n, p));
    }
  CHECK_THROWS_AS(det_product_identity(3, 2), InvalidArguments);
}

TEST_CASE("semi-simplicity criterion") {
  Verdict v = semisimple(4, 1);
  CHECK_FALSE(v.decision);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0] == Witness{"P", 3, 0});

  CHECK(semisimple(4, 3).decision);
  CHECK(semisimple(4, Rational(3, 2)).decision);

  v = semisimple(4, 0);
  CHECK_FALSE(v.decision);
  CHECK(v.witnesses == std::vector<Witness>{{"P", 2, 0}, {"P", 4, 0}, {"Q", 3, 0}, {"Q", 4, 0}});

  v = semisimple(5, 1);
  CHECK_FALSE(v.decision);
  CHECK(v.witnesses == std::vector<Witness>{{"P", 3, 0}});

  CHECK_THROWS_AS(semisimple(3, 2), InvalidArguments);
}

TEST_CASE("crosscheck matches the criterion on a rational grid") {
  const std::vector<Rational> grid = {-2, -1, Rational(-1, 2), 0, Rational(1, 2),
                                      1,  Rational(3, 2), 2, 3};
  for (int n : {4, 5})
    for (const Rational& delta : grid) {
      CAPTURE(n);
      CAPTURE(format_rational(delta));
      CHECK(semisimple(n, delta).decision == semisimple_crosscheck(n, delta).decision);
    }
  Verdict v = semisimple_crosscheck(4, 1);
  CHECK_FALSE(v.decision);
  CHECK_FALSE(v.witnesses.empty());
  CHECK(semisimple_crosscheck(4, 3).decision);
  CHECK_FALSE(semisimple_crosscheck(5, 1).decision);
  CHECK_THROWS_AS(semisimple_crosscheck(6, 1), InvalidArguments);
}

TEST_CASE("quasi-heredity depends only on d being nonzero") {
  CHECK(quasihereditary(4, 2).decision);
  CHECK(quasihereditary(5, Rational(1, 2)).decision);
  CHECK(quasihereditary(4, 2).witnesses.empty());

  Verdict v = quasihereditary(4, 0);
  CHECK_FALSE(v.decision);
  CHECK(v.witnesses == std::vector<Witness>{{"Phidot", 2, 0}, {"Phidot", 0, 0}});
  v = quasihereditary(2, 0);
  CHECK(v.witnesses == std::vector<Witness>{{"Phidot", 0, 0}});
  CHECK_THROWS_AS(quasihereditary(1, 1), InvalidArguments);
}

TEST_CASE("elimination and interpolation agree on gram matrices") {
  for (const auto& [n, cell] : std::vector<std::pair<int, CellLabel>>{
           {5, CellLabel::plain(1)},
           {6, CellLabel::zero_plus()},
           {6, CellLabel::dotted(2)},
           {7, CellLabel::plain(3)}}) {
    CAPTURE(n);
    const PolyMatrix g = gram(n, cell).entries;
    CHECK(det_bareiss(g) == det_eval_interp(g));
  }
}

}
