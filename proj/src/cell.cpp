#include "tldkit/cell.hpp"

#include "tldkit/errors.hpp"

namespace tldkit {

std::string CellLabel::str() const {
  switch (kind) {
    case CellKind::Plain: return "plain:" + std::to_string(k);
    case CellKind::ZeroPlus: return "0+";
    case CellKind::ZeroMinus: return "0-";
    case CellKind::Dotted: return "dotted:" + std::to_string(k);
  }
  return "?";
}

CellLabel CellLabel::parse(const std::string& text) {
  if (text == "0+") return zero_plus();
  if (text == "0-") return zero_minus();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    try {
      const int k = std::stoi(num);
      if (std::to_string(k) == num && k >= 0) {
        if (head == "plain") return plain(k);
        if (head == "dotted") return dotted(k);
      }
    } catch (const std::exception&) {
    }
  }
  throw InvalidArguments("not a cell label: " + text);
}

bool cell_valid_for(const CellLabel& cell, int n) {
  if (n < 2) return false;
  switch (cell.kind) {
    case CellKind::Plain:
      return cell.k >= 1 && cell.k <= n && (n - cell.k) % 2 == 0;
    case CellKind::ZeroPlus:
    case CellKind::ZeroMinus:
      return n % 2 == 0;
    case CellKind::Dotted:
      return cell.k >= 0 && cell.k <= n - 2 && (n - cell.k) % 2 == 0;
  }
  return false;
}

std::vector<CellLabel> cells(int n) {
  if (n < 2) throw InvalidArguments("cells: need n >= 2");
  std::vector<CellLabel> out;
  for (int k = n; k >= 1; k -= 2) out.push_back(CellLabel::plain(k));
  if (n % 2 == 0) {
    out.push_back(CellLabel::zero_plus());
    out.push_back(CellLabel::zero_minus());
  }
  for (int k = n - 2; k >= (n % 2 == 0 ? 0 : 1); k -= 2) out.push_back(CellLabel::dotted(k));
  return out;
}

Variant cell_variant(const CellLabel& cell) {
  switch (cell.kind) {
    case CellKind::Plain: return Variant::All;
    case CellKind::ZeroPlus: return Variant::EvenDecorations;
    case CellKind::ZeroMinus: return Variant::OddDecorations;
    case CellKind::Dotted: return Variant::Undecorated;
  }
  return Variant::All;
}

CellBasis cell_basis(int n, const CellLabel& cell) {
  if (!cell_valid_for(cell, n)) throw InvalidArguments("cell " + cell.str() + " invalid at n=" + std::to_string(n));
  return enumerate_cell(n, cell.p_of(n), cell_variant(cell));
}

bool in_cell(int n, const CellLabel& cell, const HalfDiagram& d) {
  if (!cell_valid_for(cell, n) || d.n != n || validate(d)) return false;
  if (d.p() != cell.p_of(n)) return false;
  switch (cell_variant(cell)) {
    case Variant::All: return true;
    case Variant::EvenDecorations: return d.decorations.size() % 2 == 0;
    case Variant::OddDecorations: return d.decorations.size() % 2 == 1;
    case Variant::Undecorated: return d.decorations.empty();
  }
  return false;
}

} // namespace tldkit
