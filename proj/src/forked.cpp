#include "tldkit/forked.hpp"

#include "tldkit/cellular.hpp"
#include "tldkit/errors.hpp"

namespace tldkit {

FtlElement FtlElement::of(const TLDiagram& d) {
  if (d.decorated_circuit()) return zero(d.n());
  return FtlElement{d.n(), d};
}

FtlElement ftl_multiply(const FtlElement& a, const FtlElement& b) {
  if (a.n != b.n) throw SizeMismatch("factors live at different sizes");
  if (a.is_zero() || b.is_zero()) return FtlElement::zero(a.n);
  return FtlElement::of(multiply(*a.diagram, *b.diagram));
}

BigInt ftl_dim(int n) {
  if (n < 2) throw InvalidArguments("quotient dimension needs n >= 2");
  return binomial(2 * n, n) / 2;
}

std::vector<CellLabel> ftl_cells(int n) {
  std::vector<CellLabel> out;
  for (const CellLabel& cell : cells(n))
    if (cell.kind != CellKind::Dotted) out.push_back(cell);
  return out;
}

namespace {

// Interlocking arc patterns (1,2)(3,4)... and (2,3)(4,5)... whose gluing
// is a single open path plus untouched dots: no loops, full through count.
HalfDiagram staircase(int n, int p, int offset) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i) pairs.push_back({2 * i + 1 + offset, 2 * i + 2 + offset});
  return HalfDiagram{n, std::move(pairs), {}};
}

}  // namespace

Verdict ftl_quasihereditary(int n, const Rational& delta) {
  if (n < 2) throw InvalidArguments("quasi-heredity test needs n >= 2");
  Verdict v;
  if (delta != 0) {
    v.decision = true;
    return v;
  }
  if (n % 2 == 0) {
    v.decision = false;
    v.witnesses.push_back({"PhiZeroPlus", 0, 0});
    v.witnesses.push_back({"PhiZeroMinus", 0, 0});
    return v;
  }
  v.decision = true;
  for (const CellLabel& cell : ftl_cells(n)) {
    const int p = cell.p_of(n);
    const Poly value = bilinear(cell, staircase(n, p, 0), staircase(n, p, 1));
    if (value != Poly(1)) throw InternalError("staircase pairing is not 1");
    v.witnesses.push_back({"Phi", cell.k, 1});
  }
  return v;
}

Verdict ftl_semisimple(int n, const Rational& delta) {
  if (n < 3) throw InvalidArguments("semi-simplicity test needs n >= 3");
  Verdict v;
  for (int t = 2; t <= n; ++t)
    if (chebyshev_q(t).eval(delta) == 0) v.witnesses.push_back({"Q", t, 0});
  v.decision = v.witnesses.empty();
  return v;
}

}  // namespace tldkit
