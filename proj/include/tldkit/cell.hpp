#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tldkit/halfdiag.hpp"

namespace tldkit {

enum class CellKind { Plain, ZeroPlus, ZeroMinus, Dotted };

// Label of a cell: Plain(k) for k = n-2p >= 1 through strands, the signed
// labels 0+/0- replacing Plain(0) when n is even, and Dotted(k) for the
// cells spanned by diagrams carrying a decorated circuit.
struct CellLabel {
  CellKind kind = CellKind::Plain;
  int k = 0;  // through count for Plain/Dotted; unused for the signed labels

  static CellLabel plain(int k) { return {CellKind::Plain, k}; }
  static CellLabel zero_plus() { return {CellKind::ZeroPlus, 0}; }
  static CellLabel zero_minus() { return {CellKind::ZeroMinus, 0}; }
  static CellLabel dotted(int k) { return {CellKind::Dotted, k}; }

  // Number of pairs in the half-diagrams of this cell at size n.
  int p_of(int n) const { return (n - through()) / 2; }
  // Number of through strands of the cell's basis diagrams.
  int through() const { return kind == CellKind::ZeroPlus || kind == CellKind::ZeroMinus ? 0 : k; }

  std::string str() const;             // "plain:3", "0+", "0-", "dotted:1"
  static CellLabel parse(const std::string& text);

  auto operator<=>(const CellLabel&) const = default;
};

// Checks k-range and parity consistency of a label at size n.
bool cell_valid_for(const CellLabel& cell, int n);

// The cell poset in its descending order:
// even n:  n > n-2 > ... > 2 > 0+ > 0- > dotted n-2 > ... > dotted 0
// odd n:   n > n-2 > ... > 1 > dotted n-2 > ... > dotted 1
std::vector<CellLabel> cells(int n);

// Enumeration variant the cell's basis uses.
Variant cell_variant(const CellLabel& cell);

// Ordered basis M(cell) at size n.
CellBasis cell_basis(int n, const CellLabel& cell);

// Membership test: d is a valid member of M(cell) at size n.
bool in_cell(int n, const CellLabel& cell, const HalfDiagram& d);

} // namespace tldkit
