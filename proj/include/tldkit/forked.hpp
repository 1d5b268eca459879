#pragma once

#include <optional>
#include <vector>

#include "tldkit/diagram.hpp"
#include "tldkit/gramdet.hpp"

namespace tldkit {

// Element of the forked quotient: a scaled second-type diagram, or zero.
// Diagrams carrying a decorated circuit span the quotient ideal, so they
// are unrepresentable here.
struct FtlElement {
  int n = 0;
  std::optional<TLDiagram> diagram;

  static FtlElement zero(int n) { return FtlElement{n, std::nullopt}; }
  // Projects a diagram into the quotient.
  static FtlElement of(const TLDiagram& d);

  bool is_zero() const { return !diagram.has_value(); }
  bool operator==(const FtlElement&) const = default;
};

FtlElement ftl_multiply(const FtlElement& a, const FtlElement& b);

// binomial(2n, n)/2, which is also the number of second-type diagrams.
BigInt ftl_dim(int n);

// Cell labels surviving the quotient: the plain and signed ones.
std::vector<CellLabel> ftl_cells(int n);

// At nonzero values the quotient is always quasi-hereditary; at zero it
// is exactly when n is odd, exhibited by basis pairs that pair to 1 in
// every surviving cell. For even n the signed forms vanish identically.
Verdict ftl_quasihereditary(int n, const Rational& delta);

// Semi-simple exactly when Q_t is nonzero at delta for 2 <= t <= n.
Verdict ftl_semisimple(int n, const Rational& delta);

}  // namespace tldkit
