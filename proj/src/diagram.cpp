#include "tldkit/diagram.hpp"

#include <algorithm>
#include <array>

#include "tldkit/errors.hpp"

namespace tldkit {

GeneratorId GeneratorId::parse(const std::string& text) {
  bool bar = false;
  std::size_t pos = 1;
  if (text.size() < 2 || text[0] != 'e') throw InvalidArguments("bad generator: " + text);
  if (text[1] == 'b') {
    bar = true;
    pos = 2;
  }
  if (pos >= text.size()) throw InvalidArguments("bad generator: " + text);
  int index = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') throw InvalidArguments("bad generator: " + text);
    index = index * 10 + (text[pos] - '0');
    if (index > 1000000) throw InvalidArguments("bad generator: " + text);
  }
  if (index < 1 || (bar && index != 1)) throw InvalidArguments("bad generator: " + text);
  return GeneratorId{bar, index};
}

TLDiagram TLDiagram::identity(int n) {
  if (n < 2) throw InvalidArguments("identity needs n >= 2");
  return from_halves(HalfDiagram{n, {}, {}}, HalfDiagram{n, {}, {}}, CellLabel::plain(n));
}

TLDiagram TLDiagram::from_halves(const HalfDiagram& top, const HalfDiagram& bottom,
                                 const CellLabel& cell) {
  if (top.n != bottom.n) throw IncompatibleHalves("halves have different n");
  if (!cell_valid_for(cell, top.n)) throw IncompatibleHalves("cell not defined at this n");
  if (!in_cell(top.n, cell, top)) throw IncompatibleHalves("top half not in cell");
  if (!in_cell(top.n, cell, bottom)) throw IncompatibleHalves("bottom half not in cell");
  TLDiagram d;
  d.n_ = top.n;
  d.top_ = top;
  d.bottom_ = bottom;
  d.decorated_circuit_ = cell.kind == CellKind::Dotted;
  d.delta_power_ = 0;
  return d;
}

CellLabel TLDiagram::cell() const {
  if (decorated_circuit_) return CellLabel::dotted(through());
  if (through() > 0) return CellLabel::plain(through());
  return top_.decorations.size() % 2 == 0 ? CellLabel::zero_plus() : CellLabel::zero_minus();
}

TLDiagram TLDiagram::with_delta(long shift) const {
  TLDiagram d = *this;
  d.delta_power_ += shift;
  if (d.delta_power_ < 0) throw InvalidArguments("negative delta power");
  return d;
}

std::vector<TLDiagram::Edge> TLDiagram::edges() const {
  std::vector<Edge> out;
  const bool strip = decorated_circuit_;
  for (const auto& pr : top_.pairs)
    out.push_back({pr.first - 1, pr.second - 1, !strip && top_.is_decorated(pr)});
  for (const auto& pr : bottom_.pairs)
    out.push_back({n_ + pr.first - 1, n_ + pr.second - 1, !strip && bottom_.is_decorated(pr)});
  const auto ti = top_.isolated();
  const auto bi = bottom_.isolated();
  if (ti.size() != bi.size()) throw InternalError("halves disagree on strand count");
  const bool odd = !strip && (top_.decorations.size() + bottom_.decorations.size()) % 2 == 1;
  for (std::size_t k = 0; k < ti.size(); ++k)
    out.push_back({ti[k] - 1, n_ + bi[k] - 1, odd && k == 0});
  std::sort(out.begin(), out.end());
  return out;
}

TLDiagram generator(const GeneratorId& g, int n) {
  if (n < 2) throw InvalidArguments("generator needs n >= 2");
  if (g.index < 1 || g.index > n - 1 || (g.bar && g.index != 1))
    throw InvalidArguments("generator " + g.str() + " undefined at n=" + std::to_string(n));
  std::vector<std::pair<int, int>> pairs{{g.index, g.index + 1}};
  std::vector<std::pair<int, int>> dec;
  if (g.bar) dec = pairs;
  HalfDiagram h{n, pairs, dec};
  CellLabel cell = n > 2  ? CellLabel::plain(n - 2)
                 : g.bar ? CellLabel::zero_minus()
                         : CellLabel::zero_plus();
  return TLDiagram::from_halves(h, h, cell);
}

namespace {

struct TraceEdge {
  int u, v;
  bool dec;
};

// Open component of the concatenated picture: boundary endpoints plus
// decoration parity.
struct Strand {
  int a, b;
  int parity;
};

} // namespace

TLDiagram multiply(const TLDiagram& a, const TLDiagram& b) {
  if (a.n() != b.n()) throw SizeMismatch("factors have different n");
  const int n = a.n();

  // Node layout: 0..n-1 result top, n..2n-1 glued middle, 2n..3n-1 result
  // bottom. Edges of a keep their encoding; edges of b shift by n.
  std::vector<TraceEdge> es;
  for (const auto& e : a.edges()) es.push_back({e.a, e.b, e.dec});
  for (const auto& e : b.edges()) es.push_back({e.a + n, e.b + n, e.dec});

  std::vector<std::array<int, 2>> adj(3 * n, {-1, -1});
  for (int k = 0; k < static_cast<int>(es.size()); ++k) {
    for (int node : {es[k].u, es[k].v}) {
      if (adj[node][0] < 0)
        adj[node][0] = k;
      else if (adj[node][1] < 0)
        adj[node][1] = k;
      else
        throw InternalError("node degree exceeds two");
    }
  }

  std::vector<char> used(es.size(), 0);
  auto other_end = [&](int k, int node) { return es[k].u == node ? es[k].v : es[k].u; };
  auto is_boundary = [&](int node) { return node < n || node >= 2 * n; };

  std::vector<Strand> strands;
  for (int start = 0; start < 3 * n; ++start) {
    if (!is_boundary(start) || used[adj[start][0]]) continue;
    int parity = 0;
    int node = start;
    int k = adj[start][0];
    while (true) {
      used[k] = 1;
      parity += es[k].dec ? 1 : 0;
      node = other_end(k, node);
      if (is_boundary(node)) break;
      k = adj[node][0] == k ? adj[node][1] : adj[node][0];
    }
    strands.push_back({std::min(start, node), std::max(start, node), parity % 2});
  }

  long even_loops = 0;
  long odd_loops = 0;
  for (int k = 0; k < static_cast<int>(es.size()); ++k) {
    if (used[k]) continue;
    int parity = 0;
    int node = es[k].u;
    int cur = k;
    while (!used[cur]) {
      used[cur] = 1;
      parity += es[cur].dec ? 1 : 0;
      node = other_end(cur, node);
      cur = adj[node][0] == cur ? adj[node][1] : adj[node][0];
    }
    (parity % 2 == 0 ? even_loops : odd_loops)++;
  }

  const long circuits = odd_loops + (a.decorated_circuit() ? 1 : 0) + (b.decorated_circuit() ? 1 : 0);
  const bool dc = circuits > 0;
  long delta = a.delta_power() + b.delta_power() + even_loops + (dc ? circuits - 1 : 0);

  std::vector<std::pair<int, int>> tp, td, bp, bd;
  int vertical_parity = 0;
  for (const auto& s : strands) {
    const bool keep = !dc && s.parity == 1;
    if (s.b < n) {
      tp.push_back({s.a + 1, s.b + 1});
      if (keep) td.push_back({s.a + 1, s.b + 1});
    } else if (s.a >= 2 * n) {
      bp.push_back({s.a - 2 * n + 1, s.b - 2 * n + 1});
      if (keep) bd.push_back({s.a - 2 * n + 1, s.b - 2 * n + 1});
    } else {
      if (s.a >= n || s.b < 2 * n) throw InternalError("strand touches the glued row");
      vertical_parity += s.parity;
    }
  }
  std::sort(tp.begin(), tp.end());
  std::sort(td.begin(), td.end());
  std::sort(bp.begin(), bp.end());
  std::sort(bd.begin(), bd.end());
  HalfDiagram top{n, tp, td};
  HalfDiagram bottom{n, bp, bd};
  if (!dc && (td.size() + bd.size() + vertical_parity) % 2 != 0)
    throw InternalError("odd decoration count on an open product");

  CellLabel cell = CellLabel::plain(1);
  if (dc) {
    cell = CellLabel::dotted(n - 2 * top.p());
  } else if (2 * top.p() < n) {
    cell = CellLabel::plain(n - 2 * top.p());
  } else {
    if (td.size() % 2 != bd.size() % 2) throw InternalError("halves disagree on parity at zero");
    cell = td.size() % 2 == 0 ? CellLabel::zero_plus() : CellLabel::zero_minus();
  }
  return TLDiagram::from_halves(top, bottom, cell).with_delta(delta);
}

std::pair<HalfDiagram, HalfDiagram> cut(const TLDiagram& d) {
  return {d.top(), d.bottom()};
}

std::vector<TLDiagram> enumerate_basis(int n) {
  std::vector<TLDiagram> out;
  for (const CellLabel& cell : cells(n)) {
    const CellBasis basis = cell_basis(n, cell);
    for (const HalfDiagram& s : basis.members)
      for (const HalfDiagram& t : basis.members)
        out.push_back(TLDiagram::from_halves(s, t, cell));
  }
  return out;
}

BasisCount basis_count(int n) {
  BasisCount counts;
  for (const CellLabel& cell : cells(n)) {
    const long size = static_cast<long>(cell_basis(n, cell).size());
    counts.total += size * size;
    if (cell.kind == CellKind::Dotted)
      counts.first_type += size * size;
    else
      counts.second_type += size * size;
  }
  return counts;
}

} // namespace tldkit
