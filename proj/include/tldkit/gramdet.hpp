#pragma once

#include <string>
#include <vector>

#include "tldkit/cell.hpp"
#include "tldkit/poly.hpp"

namespace tldkit {

enum class DetMethod { Direct, Recurrence, Closed };

std::string det_method_name(DetMethod method);  // "direct" etc.
DetMethod parse_det_method(const std::string& text);

struct DetResult {
  int n = 0;
  std::string cell;
  DetMethod method = DetMethod::Direct;
  Poly value;

  bool operator==(const DetResult&) const = default;
};

// Determinant of the Gram matrix of a cell at size n.
// Direct: fraction-free elimination on the filled matrix.
// Recurrence: descend the size chain, peeling one ratio of consecutive
// Q polynomials per step; signed and dotted cells reduce to smaller
// plain or undecorated determinants.
// Closed: the explicit Q-ratio product; plain cells only.
DetResult det_gram(int n, const CellLabel& cell, DetMethod method);

// Determinant of the combined matrix of the two signed cells at size 2p.
// All methods apply; the closed product covers this boundary as the
// p-arc case.
DetResult det_gram_pseudo(int p, DetMethod method);

// Determinant of the undecorated-calculus Gram matrix with p arcs at
// size n. Direct, or the classical one-size-down recurrence in the
// P sequence. Requires 0 <= 2p <= n.
DetResult det_gram_type_a(int n, int p, DetMethod method);

// Ratio attached to the size step n-1 -> n at arc count p, kept as a
// literal pair (Q_{n-2p+2}, Q_{n-2p+1}). Requires n >= 2p+1;
// the pair satisfies r(n+1, p) = d - 1/r(n, p) after clearing
// denominators.
struct RatioPair {
  Poly num;
  Poly den;

  bool operator==(const RatioPair&) const = default;
};
RatioPair r_ratio(int n, int p);

// Checks, by cross-multiplication, that the depth-p ratio product over
// size n rewrites as the one over size n-1 times the step ratio.
// Requires n >= 2p.
bool det_product_identity(int n, int p);

struct Witness {
  std::string family;
  int index = 0;
  Rational value;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool decision = false;
  std::vector<Witness> witnesses;
};

// Semi-simplicity over the rationals at the given loop value: P_s must
// be nonzero there for 1 < s <= n and Q_t for 2 < t <= n. Witnesses
// list every vanishing polynomial. Requires n >= 4.
Verdict semisimple(int n, const Rational& delta);

// Independent desk-scale check (n = 4 or 5): evaluates the direct
// determinant of every cell at delta and requires all nonzero.
// Witnesses name the cells whose determinant vanishes.
Verdict semisimple_crosscheck(int n, const Rational& delta);

// Quasi-heredity holds exactly when delta != 0; at zero the dotted
// forms vanish identically and the witnesses record that pattern.
Verdict quasihereditary(int n, const Rational& delta);

}  // namespace tldkit
