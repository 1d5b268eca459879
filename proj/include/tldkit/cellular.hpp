#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tldkit/cell.hpp"
#include "tldkit/diagram.hpp"
#include "tldkit/halfdiag.hpp"
#include "tldkit/matrix.hpp"
#include "tldkit/poly.hpp"

namespace tldkit {

// Gram matrix of a bilinear form over an ordered half-diagram basis. Also
// carries the pseudo matrix at n = 2p and the undecorated reference
// matrices, which have no cell of their own; label identifies the source.
struct GramMatrix {
  int n = 0;
  std::string label;
  std::optional<CellLabel> cell;
  CellBasis basis;
  PolyMatrix entries;
};

struct ActionMatrix {
  int n = 0;
  CellLabel cell = CellLabel::plain(1);
  GeneratorId gen;
  // Column S holds the expansion of generator * S over the ordered basis.
  PolyMatrix entries;
};

Poly bilinear(const CellLabel& cell, const HalfDiagram& t, const HalfDiagram& u);

GramMatrix gram(int n, const CellLabel& cell);

// The matrix at n = 2p over all of M(0), entries taken at n = 2p+1 through
// the isolated-dot embedding; block-diagonal over the two decoration
// parities but not itself the Gram matrix of a cell.
GramMatrix gram_pseudo(int p);

// Gram matrix of the undecorated calculus: entry delta^circuits when the
// through count is full, else 0.
GramMatrix gram_type_a(int n, int p);

struct ActResult {
  long delta_power = 0;
  HalfDiagram to;
};

// Action of a basis diagram on a cell-module basis element; nullopt when
// the product falls out of the cell.
std::optional<ActResult> act(const CellLabel& cell, const TLDiagram& a, const HalfDiagram& s);

ActionMatrix action_matrix(int n, const CellLabel& cell, const GeneratorId& g);

// Restriction of the cell modules at n to the subalgebra on the first n-1
// strands, verified as block structure of every generator action.
struct BranchReport {
  int n = 0;
  int p = 0;
  bool ok = true;
  long sub_dim = 0;
  long quot_dim = 0;
  std::vector<std::string> failures;
};
BranchReport branching_check(int n, int p);

} // namespace tldkit
