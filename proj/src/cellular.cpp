#include "tldkit/cellular.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "tldkit/errors.hpp"

namespace tldkit {

namespace {

// Stack the cap diagram of t onto the cup diagram of u: dots 1..n shared,
// arcs of t on one side and arcs of u on the other.
struct GlueStats {
  int through = 0; // dots isolated in both + curves joining a t-isolated dot to a u-isolated dot
  int even_loops = 0;
  int odd_loops = 0;
  bool drop = false; // a curve joins two isolated dots of the same side
};

GlueStats glue(const HalfDiagram& t, const HalfDiagram& u) {
  const int n = t.n;
  std::vector<int> tp(n + 1, 0), up(n + 1, 0);
  std::vector<char> td(n + 1, 0), ud(n + 1, 0);
  for (const auto& pr : t.pairs) {
    tp[pr.first] = pr.second;
    tp[pr.second] = pr.first;
    td[pr.first] = td[pr.second] = t.is_decorated(pr) ? 1 : 0;
  }
  for (const auto& pr : u.pairs) {
    up[pr.first] = pr.second;
    up[pr.second] = pr.first;
    ud[pr.first] = ud[pr.second] = u.is_decorated(pr) ? 1 : 0;
  }

  GlueStats st;
  std::vector<char> seen(n + 1, 0);
  for (int d = 1; d <= n; ++d) {
    if (seen[d]) continue;
    if (tp[d] == 0 && up[d] == 0) {
      seen[d] = 1;
      st.through++;
      continue;
    }
    if (tp[d] == 0 || up[d] == 0) {
      // Open curve; leave through the side that is present.
      const bool start_t_isolated = tp[d] == 0;
      bool side_t = !start_t_isolated;
      int cur = d;
      seen[cur] = 1;
      while (true) {
        cur = side_t ? tp[cur] : up[cur];
        seen[cur] = 1;
        side_t = !side_t;
        if ((side_t ? tp[cur] : up[cur]) == 0) break;
      }
      const bool end_t_isolated = side_t;
      if (start_t_isolated == end_t_isolated)
        st.drop = true;
      else
        st.through++;
    }
  }
  for (int d = 1; d <= n; ++d) {
    if (seen[d]) continue;
    int parity = 0;
    bool side_t = true;
    int cur = d;
    do {
      seen[cur] = 1;
      parity += side_t ? td[cur] : ud[cur];
      cur = side_t ? tp[cur] : up[cur];
      side_t = !side_t;
    } while (cur != d || !side_t);
    (parity % 2 == 0 ? st.even_loops : st.odd_loops)++;
  }
  return st;
}

Poly delta_power_poly(long c) { return Poly::monomial(1, static_cast<int>(c)); }

HalfDiagram iota(const HalfDiagram& h) { return HalfDiagram{h.n + 1, h.pairs, h.decorations}; }

} // namespace

Poly bilinear(const CellLabel& cell, const HalfDiagram& t, const HalfDiagram& u) {
  if (t.n != u.n) throw BasisMismatch("halves have different n");
  if (!in_cell(t.n, cell, t) || !in_cell(t.n, cell, u))
    throw BasisMismatch("argument not in the cell basis");
  const GlueStats st = glue(t, u);
  const long loops = st.even_loops + st.odd_loops;
  switch (cell.kind) {
    case CellKind::Plain:
      if (st.odd_loops > 0 || st.through < cell.k) return Poly();
      if (st.through != cell.k) throw InternalError("through count above the cell");
      return delta_power_poly(loops);
    case CellKind::ZeroPlus:
    case CellKind::ZeroMinus:
      return st.odd_loops > 0 ? Poly() : delta_power_poly(loops);
    case CellKind::Dotted:
      if (st.odd_loops > 0) throw InternalError("decorated loop on an undecorated basis");
      if (st.through < cell.k) return Poly();
      return delta_power_poly(loops + 1);
  }
  throw InternalError("unhandled cell kind");
}

namespace {

GramMatrix fill_gram(int n, const std::string& label, std::optional<CellLabel> cell,
                     CellBasis basis, const std::function<Poly(const HalfDiagram&, const HalfDiagram&)>& phi) {
  const std::size_t m = basis.size();
  PolyMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Poly v = phi(basis.members[i], basis.members[j]);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return GramMatrix{n, label, std::move(cell), std::move(basis), std::move(g)};
}

} // namespace

GramMatrix gram(int n, const CellLabel& cell) {
  if (!cell_valid_for(cell, n)) throw InvalidArguments("cell not defined at this n");
  return fill_gram(n, cell.str(), cell, cell_basis(n, cell),
                   [&](const HalfDiagram& a, const HalfDiagram& b) { return bilinear(cell, a, b); });
}

GramMatrix gram_pseudo(int p) {
  if (p < 1) throw InvalidArguments("pseudo matrix needs p >= 1");
  const int n = 2 * p;
  CellBasis basis = enumerate_cell(n, p, Variant::All);
  const CellLabel lifted = CellLabel::plain(1);
  return fill_gram(n, "pseudo:" + std::to_string(p), std::nullopt, std::move(basis),
                   [&](const HalfDiagram& a, const HalfDiagram& b) {
                     return bilinear(lifted, iota(a), iota(b));
                   });
}

GramMatrix gram_type_a(int n, int p) {
  if (n < 1 || p < 0 || 2 * p > n) throw InvalidArguments("bad type-A cell");
  CellBasis basis = enumerate_cell(n, p, Variant::Undecorated);
  return fill_gram(n, "typeA:" + std::to_string(n) + "," + std::to_string(p), std::nullopt,
                   std::move(basis), [&](const HalfDiagram& a, const HalfDiagram& b) {
                     const GlueStats st = glue(a, b);
                     if (st.odd_loops > 0) throw InternalError("decorated loop on an undecorated basis");
                     return st.through == n - 2 * p ? delta_power_poly(st.even_loops) : Poly();
                   });
}

std::optional<ActResult> act(const CellLabel& cell, const TLDiagram& a, const HalfDiagram& s) {
  const int n = a.n();
  if (s.n != n || !in_cell(n, cell, s)) throw BasisMismatch("element not in the cell basis");
  const bool dotted = cell.kind == CellKind::Dotted;

  // Nodes 0..n-1: result dots (top of a); n..2n-1: glued row carrying the
  // arcs of s. Isolated dots of s are outlets: strands ending there stay
  // through strands of the module element.
  struct E {
    int u, v;
    bool dec;
  };
  std::vector<E> es;
  for (const auto& e : a.edges()) es.push_back({e.a, e.b, e.dec});
  for (const auto& pr : s.pairs)
    es.push_back({n + pr.first - 1, n + pr.second - 1, s.is_decorated(pr)});

  std::vector<std::array<int, 2>> adj(2 * n, {-1, -1});
  for (int k = 0; k < static_cast<int>(es.size()); ++k)
    for (int node : {es[k].u, es[k].v}) {
      if (adj[node][0] < 0)
        adj[node][0] = k;
      else if (adj[node][1] < 0)
        adj[node][1] = k;
      else
        throw InternalError("node degree exceeds two");
    }
  auto degree = [&](int node) { return (adj[node][0] >= 0) + (adj[node][1] >= 0); };

  std::vector<char> used(es.size(), 0);
  auto other_end = [&](int k, int node) { return es[k].u == node ? es[k].v : es[k].u; };

  std::vector<std::pair<int, int>> pairs, dec;
  bool drop = false;
  long loops_even = 0, loops_odd = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (degree(start) != 1 || used[adj[start][0]]) continue;
    int parity = 0;
    int node = start;
    int k = adj[start][0];
    while (true) {
      used[k] = 1;
      parity += es[k].dec ? 1 : 0;
      node = other_end(k, node);
      if (degree(node) == 1) break;
      k = adj[node][0] == k ? adj[node][1] : adj[node][0];
    }
    if (start < n && node < n) {
      pairs.push_back({std::min(start, node) + 1, std::max(start, node) + 1});
      if (!dotted && parity % 2 == 1) dec.push_back(pairs.back());
    } else if (start >= n && node >= n) {
      drop = true;
    }
    // Mixed components are through strands; their parity is absorbed by
    // the vertical normal form.
  }
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
    (parity % 2 == 0 ? loops_even : loops_odd)++;
  }

  if (drop) return std::nullopt;
  long power = a.delta_power() + loops_even;
  if (dotted) {
    power += loops_odd + (a.decorated_circuit() ? 1 : 0);
  } else {
    if (a.decorated_circuit() || loops_odd > 0) return std::nullopt;
  }

  std::sort(pairs.begin(), pairs.end());
  std::sort(dec.begin(), dec.end());
  HalfDiagram out{n, pairs, dec};
  if (!in_cell(n, cell, out)) throw InternalError("action left the cell basis");
  return ActResult{power, out};
}

ActionMatrix action_matrix(int n, const CellLabel& cell, const GeneratorId& g) {
  if (!cell_valid_for(cell, n)) throw InvalidArguments("cell not defined at this n");
  const TLDiagram d = generator(g, n);
  const CellBasis basis = cell_basis(n, cell);
  PolyMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto r = act(cell, d, basis.members[j]);
    if (!r) continue;
    m.at(basis.index_of(r->to), j) = delta_power_poly(r->delta_power);
  }
  return ActionMatrix{n, cell, g, std::move(m)};
}

namespace {

std::vector<GeneratorId> subalgebra_generators(int n_prev) {
  std::vector<GeneratorId> gens{GeneratorId{true, 1}};
  for (int i = 1; i < n_prev; ++i) gens.push_back(GeneratorId{false, i});
  return gens;
}

PolyMatrix extract(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(rows[i], cols[j]);
  return out;
}

bool zero_block(const PolyMatrix& m, std::size_t row0, std::size_t rows, std::size_t col0,
                std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m.at(row0 + i, col0 + j).is_zero()) return false;
  return true;
}

} // namespace

BranchReport branching_check(int n, int p) {
  if (n < 4 || p < 0 || 2 * p > n) throw InvalidArguments("branching needs n >= 4, 0 <= 2p <= n");
  BranchReport rep;
  rep.n = n;
  rep.p = p;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };
  const auto gens = subalgebra_generators(n - 1);

  if (n == 2 * p) {
    // The signed modules restrict along the decorated-pair removal maps.
    for (char sign : {'+', '-'}) {
      const CellLabel c = sign == '+' ? CellLabel::zero_plus() : CellLabel::zero_minus();
      const CellBasis basis = cell_basis(n, c);
      const CellBasis target = cell_basis(n - 1, CellLabel::plain(1));
      rep.sub_dim = static_cast<long>(basis.size());
      rep.quot_dim = 0;
      if (basis.size() != target.size()) {
        fail(c.str() + ": restricted dimension mismatch");
        continue;
      }
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (map_beta(basis.members[j], sign) != target.members[j]) {
          fail(c.str() + ": pair-removal transport is not index-wise");
          break;
        }
      for (const auto& g : gens)
        if (action_matrix(n, c, g).entries != action_matrix(n - 1, CellLabel::plain(1), g).entries)
          fail(c.str() + ": action of " + g.str() + " differs from the target module");
    }
    return rep;
  }

  const CellLabel cn = CellLabel::plain(n - 2 * p);
  const CellBasis basisN = cell_basis(n, cn);

  if (n == 2 * p + 1) {
    const auto prev = enumerate_cell(n - 1, p, Variant::All).members;
    const std::size_t split = prev.size();
    rep.sub_dim = static_cast<long>(split);
    rep.quot_dim = static_cast<long>(basisN.size() - split);
    for (std::size_t j = 0; j < split; ++j)
      if (basisN.members[j] != iota(prev[j])) {
        fail("isolated-dot block is not the embedded basis");
        break;
      }
    std::vector<std::size_t> even_idx, odd_idx;
    for (std::size_t j = 0; j < split; ++j)
      (prev[j].decorations.size() % 2 == 0 ? even_idx : odd_idx).push_back(j);
    const CellBasis plusB = cell_basis(n - 1, CellLabel::zero_plus());
    const CellBasis minusB = cell_basis(n - 1, CellLabel::zero_minus());
    for (std::size_t j = 0; j < even_idx.size(); ++j)
      if (prev[even_idx[j]] != plusB.members[j]) fail("even block order mismatch");
    for (std::size_t j = 0; j < odd_idx.size(); ++j)
      if (prev[odd_idx[j]] != minusB.members[j]) fail("odd block order mismatch");
    const CellBasis quotB = cell_basis(n - 1, CellLabel::plain(2));
    for (std::size_t j = 0; j < quotB.size(); ++j)
      if (map_gamma(basisN.members[split + j]) != quotB.members[j]) {
        fail("quotient transport is not index-wise");
        break;
      }
    for (const auto& g : gens) {
      const PolyMatrix A = action_matrix(n, cn, g).entries;
      if (!zero_block(A, split, basisN.size() - split, 0, split))
        fail("submodule not invariant under " + g.str());
      if (extract(A, odd_idx, even_idx) != PolyMatrix(odd_idx.size(), even_idx.size()) ||
          extract(A, even_idx, odd_idx) != PolyMatrix(even_idx.size(), odd_idx.size()))
        fail("signed parity mixed by " + g.str());
      if (extract(A, even_idx, even_idx) != action_matrix(n - 1, CellLabel::zero_plus(), g).entries)
        fail("even block of " + g.str() + " differs from the signed module");
      if (extract(A, odd_idx, odd_idx) != action_matrix(n - 1, CellLabel::zero_minus(), g).entries)
        fail("odd block of " + g.str() + " differs from the signed module");
      if (A.submatrix(split, split, basisN.size() - split, basisN.size() - split) !=
          action_matrix(n - 1, CellLabel::plain(2), g).entries)
        fail("quotient block of " + g.str() + " differs from the target module");
    }
    return rep;
  }

  // n > 2p + 1.
  const CellLabel cSub = CellLabel::plain(n - 1 - 2 * p);
  const CellBasis subB = cell_basis(n - 1, cSub);
  const std::size_t split = subB.size();
  rep.sub_dim = static_cast<long>(split);
  rep.quot_dim = static_cast<long>(basisN.size() - split);
  for (std::size_t j = 0; j < split; ++j)
    if (basisN.members[j] != iota(subB.members[j])) {
      fail("isolated-dot block is not the embedded basis");
      break;
    }
  const CellLabel cQuot = CellLabel::plain(n - 2 * p + 1);
  if (p > 0) {
    const CellBasis quotB = cell_basis(n - 1, cQuot);
    for (std::size_t j = 0; j < quotB.size(); ++j)
      if (map_gamma(basisN.members[split + j]) != quotB.members[j]) {
        fail("quotient transport is not index-wise");
        break;
      }
  }
  for (const auto& g : gens) {
    const PolyMatrix A = action_matrix(n, cn, g).entries;
    if (!zero_block(A, split, basisN.size() - split, 0, split))
      fail("submodule not invariant under " + g.str());
    if (A.submatrix(0, 0, split, split) != action_matrix(n - 1, cSub, g).entries)
      fail("restricted block of " + g.str() + " differs from the target module");
    if (p > 0 && A.submatrix(split, split, basisN.size() - split, basisN.size() - split) !=
                     action_matrix(n - 1, cQuot, g).entries)
      fail("quotient block of " + g.str() + " differs from the target module");
  }
  return rep;
}

} // namespace tldkit
