#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tldkit/cell.hpp"
#include "tldkit/halfdiag.hpp"

namespace tldkit {

// Generator of the diagram algebra: e_i for 1 <= i <= n-1, or the forked
// generator (bar = true, index 1).
struct GeneratorId {
  bool bar = false;
  int index = 1;

  std::string str() const { return bar ? "eb" + std::to_string(index) : "e" + std::to_string(index); }
  static GeneratorId parse(const std::string& text);
  auto operator<=>(const GeneratorId&) const = default;
};

// Decorated planar diagram on n top and n bottom dots, stored in the
// constructive normal form: the two decorated half-diagrams, a
// decorated-circuit flag (first type), and the carried power of the loop
// parameter. Vertical strands join the isolated dots of the halves in
// order; when the halves carry an odd number of decorations between them
// the leftmost vertical strand makes the total even.
class TLDiagram {
public:
  static TLDiagram identity(int n);
  static TLDiagram from_halves(const HalfDiagram& top, const HalfDiagram& bottom,
                               const CellLabel& cell);

  int n() const { return n_; }
  const HalfDiagram& top() const { return top_; }
  const HalfDiagram& bottom() const { return bottom_; }
  bool decorated_circuit() const { return decorated_circuit_; }
  long delta_power() const { return delta_power_; }
  // Number of vertical strands.
  int through() const { return n_ - 2 * top_.p(); }
  // The cell whose basis contains this diagram (delta power ignored).
  CellLabel cell() const;

  TLDiagram with_delta(long shift) const;
  // The same diagram with delta power forced to zero.
  TLDiagram shape() const { return with_delta(-delta_power_); }

  // Endpoint encoding: 0..n-1 = top dots 1..n, n..2n-1 = bottom dots 1..n.
  struct Edge {
    int a = 0;
    int b = 0;
    bool dec = false;
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges() const;

  auto operator<=>(const TLDiagram&) const = default;

private:
  TLDiagram() = default;
  int n_ = 0;
  HalfDiagram top_, bottom_;
  bool decorated_circuit_ = false;
  long delta_power_ = 0;
};

TLDiagram generator(const GeneratorId& g, int n);

// Concatenation of a over b followed by the removal rules: closed loops
// with evenly many decorations give a factor of the loop parameter, odd
// ones become decorated circuits, decorated circuits merge (a factor per
// extra one) and erase all other decorations, and open strands keep their
// decoration count mod 2, renormalized into the constructive normal form.
TLDiagram multiply(const TLDiagram& a, const TLDiagram& b);

// The two decorated halves (decorated circuit and vertical decorations
// ignored); left inverse of from_halves.
std::pair<HalfDiagram, HalfDiagram> cut(const TLDiagram& d);

struct BasisCount {
  long total = 0;
  long first_type = 0;
  long second_type = 0;
};
BasisCount basis_count(int n);

// Every basis diagram, cell by cell in poset order.
std::vector<TLDiagram> enumerate_basis(int n);

} // namespace tldkit
