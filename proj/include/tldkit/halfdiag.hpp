#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tldkit/bigint.hpp"

namespace tldkit {

// Decorated parenthesis diagram on dots 1..n: a non-crossing partial
// matching (p pairs, the rest isolated) plus a set of decorated pairs.
// Valid diagrams satisfy:
//   - no isolated dot lies under an arc
//   - arcs do not cross
//   - every isolated dot lies to the right of every decorated arc
//   - no decorated arc is nested inside another arc (decorated arcs are
//     the ones exposed to the left wall of the strip)
struct HalfDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;        // (i,j) with i<j, sorted
  std::vector<std::pair<int, int>> decorations;  // subset of pairs, sorted

  int p() const { return static_cast<int>(pairs.size()); }
  int isolated_count() const { return n - 2 * p(); }
  std::vector<int> isolated() const;
  // Partner of dot i, or 0 if isolated.
  int partner(int i) const;
  bool is_decorated(const std::pair<int, int>& pr) const;

  auto operator<=>(const HalfDiagram&) const = default;
};

// Entry of the ordering sequence: a dot number or the infinite sentinel,
// which compares greater than every finite value.
struct SeqEntry {
  int value = 0;
  bool infinite = false;

  static SeqEntry inf() { return {0, true}; }
  friend std::strong_ordering operator<=>(const SeqEntry& a, const SeqEntry& b) {
    if (a.infinite || b.infinite) return (a.infinite ? 1 : 0) <=> (b.infinite ? 1 : 0);
    return a.value <=> b.value;
  }
  friend bool operator==(const SeqEntry& a, const SeqEntry& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};
using AssocSeq = std::vector<SeqEntry>;

// nullopt when valid, otherwise the name of the first violated invariant.
std::optional<std::string> validate(const HalfDiagram& d);

// Length-2p sequence: pair right endpoints descending, then decorated
// right endpoints ascending, padded with the infinite sentinel.
// Requires a valid diagram.
AssocSeq assoc_seq(const HalfDiagram& d);

// Lexicographic order on assoc_seq; the cell bases are sorted by it.
bool cell_order_less(const HalfDiagram& a, const HalfDiagram& b);

enum class Variant { All, EvenDecorations, OddDecorations, Undecorated };

std::string variant_name(Variant v);

// Ordered basis of a cell: every valid (n,p) diagram of the variant,
// sorted ascending by assoc_seq.
struct CellBasis {
  int n = 0;
  int p = 0;
  Variant variant = Variant::All;
  std::vector<HalfDiagram> members;

  int size() const { return static_cast<int>(members.size()); }
  // Index of a member, or -1.
  int index_of(const HalfDiagram& d) const;
};

CellBasis enumerate_cell(int n, int p, Variant variant = Variant::All);

// Number of valid (n,p) diagrams; equals binomial(n,p).
BigInt count_cell(int n, int p);

// Toggles the decoration on the pair ending at n. Requires n = 2p.
// Exchanges the even- and odd-decoration halves of the (2p,p) basis.
HalfDiagram map_alpha(const HalfDiagram& d);

// Removes the pair ending at n together with its decoration, leaving its
// left endpoint isolated: an (n-1, p-1) diagram. Requires n = 2p and the
// decoration parity named by sign ('+' even, '-' odd).
HalfDiagram map_beta(const HalfDiagram& d, char sign);

// Removes the (necessarily undecorated) pair ending at n, leaving its
// left endpoint isolated. Requires n > 2p and n not isolated.
HalfDiagram map_gamma(const HalfDiagram& d);

} // namespace tldkit
