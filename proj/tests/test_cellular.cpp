#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "tldkit/bigint.hpp"
#include "tldkit/cellular.hpp"
#include "tldkit/errors.hpp"

using namespace tldkit;

namespace {

HalfDiagram HD(int n, std::vector<std::pair<int, int>> pairs,
               std::vector<std::pair<int, int>> dec = {}) {
  std::sort(pairs.begin(), pairs.end());
  std::sort(dec.begin(), dec.end());
  return HalfDiagram{n, pairs, dec};
}

PolyMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly::parse(rows[i][j]);
  return m;
}

const Poly D = Poly::variable();

PolyMatrix pick(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(rows[i], cols[j]);
  return out;
}

} // namespace

TEST_SUITE("cellular") {

TEST_CASE("cell poset follows the published listing") {
  CHECK(cells(4) == std::vector<CellLabel>{CellLabel::plain(4), CellLabel::plain(2),
                                           CellLabel::zero_plus(), CellLabel::zero_minus(),
                                           CellLabel::dotted(2), CellLabel::dotted(0)});
  CHECK(cells(5) == std::vector<CellLabel>{CellLabel::plain(5), CellLabel::plain(3),
                                           CellLabel::plain(1), CellLabel::dotted(3),
                                           CellLabel::dotted(1)});
  CHECK(cells(2) == std::vector<CellLabel>{CellLabel::plain(2), CellLabel::zero_plus(),
                                           CellLabel::zero_minus(), CellLabel::dotted(0)});
  CHECK_THROWS_AS(cells(1), InvalidArguments);

  for (int n = 2; n <= 10; ++n) {
    BigInt dim = 0;
    for (const auto& c : cells(n)) {
      CHECK(cell_valid_for(c, n));
      const BigInt size(static_cast<long>(cell_basis(n, c).size()));
      dim += size * size;
    }
    CHECK(dim == BigInt(basis_count(n).total));
  }
}

TEST_CASE("cell labels parse and print") {
  CHECK(CellLabel::plain(3).str() == "plain:3");
  CHECK(CellLabel::zero_plus().str() == "0+");
  CHECK(CellLabel::zero_minus().str() == "0-");
  CHECK(CellLabel::dotted(0).str() == "dotted:0");
  for (const char* s : {"plain:3", "0+", "0-", "dotted:2", "plain:10"})
    CHECK(CellLabel::parse(s).str() == s);
  CHECK_THROWS_AS(CellLabel::parse("plain:"), InvalidArguments);
  CHECK_THROWS_AS(CellLabel::parse("plain:-1"), InvalidArguments);
  CHECK_THROWS_AS(CellLabel::parse("dotted"), InvalidArguments);
  CHECK_THROWS_AS(CellLabel::parse("0*"), InvalidArguments);
  CHECK_THROWS_AS(CellLabel::parse(""), InvalidArguments);
}

TEST_CASE("bilinear form on published examples") {
  const CellLabel c1 = CellLabel::plain(1);
  const auto basis = cell_basis(5, c1).members;
  REQUIRE(basis.size() == 10);
  CHECK(bilinear(c1, basis[2], basis[3]) == Poly());
  CHECK(bilinear(c1, basis[7], basis[8]) == D);
  CHECK(bilinear(c1, basis[0], basis[0]) == D * D);
  CHECK(bilinear(c1, basis[1], basis[8]) == Poly(1));
  CHECK_THROWS_AS(bilinear(c1, basis[0], HD(5, {{1, 2}})), BasisMismatch);
  CHECK_THROWS_AS(bilinear(CellLabel::plain(3), basis[0], basis[1]), BasisMismatch);
  CHECK_THROWS_AS(bilinear(c1, basis[0], HD(4, {{1, 2}, {3, 4}})), BasisMismatch);
}

TEST_CASE("the 10x10 Gram matrix at n=5 matches the published one") {
  const GramMatrix g = gram(5, CellLabel::plain(1));
  const PolyMatrix want = matrix_of({
      {"d^2", "0", "0", "0", "0", "d", "d", "0", "1", "0"},
      {"0", "d^2", "0", "0", "d", "0", "d", "0", "1", "d"},
      {"0", "0", "d^2", "0", "d", "0", "0", "d", "1", "0"},
      {"0", "0", "0", "d^2", "0", "d", "0", "d", "1", "d"},
      {"0", "d", "d", "0", "d^2", "0", "1", "1", "d", "1"},
      {"d", "0", "0", "d", "0", "d^2", "1", "1", "d", "1"},
      {"d", "d", "0", "0", "1", "1", "d^2", "0", "d", "1"},
      {"0", "0", "d", "d", "1", "1", "0", "d^2", "d", "1"},
      {"1", "1", "1", "1", "d", "d", "d", "d", "d^2", "d"},
      {"0", "d", "0", "d", "1", "1", "1", "1", "d", "d^2"},
  });
  CHECK(g.entries == want);
  CHECK(g.label == "plain:1");
  CHECK(g.basis.size() == 10);
}

TEST_CASE("small Gram matrices frozen") {
  CHECK(gram(3, CellLabel::plain(1)).entries ==
        matrix_of({{"d", "0", "1"}, {"0", "d", "1"}, {"1", "1", "d"}}));
  CHECK(gram(4, CellLabel::plain(4)).entries == matrix_of({{"1"}}));
  CHECK(gram(7, CellLabel::plain(7)).entries == matrix_of({{"1"}}));
  CHECK(gram(4, CellLabel::zero_plus()).entries ==
        matrix_of({{"d^2", "0", "d"}, {"0", "d^2", "d"}, {"d", "d", "d^2"}}));
  CHECK(gram(4, CellLabel::zero_minus()).entries ==
        matrix_of({{"d^2", "0", "d"}, {"0", "d^2", "d"}, {"d", "d", "d^2"}}));
  CHECK(gram(2, CellLabel::dotted(0)).entries == matrix_of({{"d^2"}}));
  CHECK_THROWS_AS(gram(4, CellLabel::plain(3)), InvalidArguments);
  CHECK_THROWS_AS(gram(5, CellLabel::zero_plus()), InvalidArguments);
  CHECK_THROWS_AS(gram(4, CellLabel::dotted(4)), InvalidArguments);
}

TEST_CASE("Gram matrices are symmetric with monomial entries") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& cell : cells(n)) {
      const GramMatrix g = gram(n, cell);
      CHECK(g.entries.is_symmetric());
      for (std::size_t i = 0; i < g.basis.size(); ++i)
        for (std::size_t j = 0; j < g.basis.size(); ++j) {
          const Poly& e = g.entries.at(i, j);
          bool monomial_or_zero = e.is_zero();
          if (!monomial_or_zero) {
            monomial_or_zero = true;
            for (int k = 0; k < e.degree(); ++k)
              if (e.coeff(k) != 0) monomial_or_zero = false;
            if (e.coeff(e.degree()) != 1) monomial_or_zero = false;
          }
          CHECK(monomial_or_zero);
        }
    }
}

TEST_CASE("dotted cells are the undecorated matrices scaled by delta") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& cell : cells(n)) {
      if (cell.kind != CellKind::Dotted) continue;
      const int p = cell.p_of(n);
      const GramMatrix dotted = gram(n, cell);
      const GramMatrix plain = gram_type_a(n, p);
      REQUIRE(dotted.basis.members == plain.basis.members);
      CHECK(dotted.entries == plain.entries.scaled(D));
    }
}

TEST_CASE("undecorated reference matrices") {
  CHECK(gram_type_a(5, 0).entries == matrix_of({{"1"}}));
  CHECK(gram_type_a(3, 1).entries == matrix_of({{"d", "1"}, {"1", "d"}}));
  CHECK(gram_type_a(4, 2).entries == matrix_of({{"d^2", "d"}, {"d", "d^2"}}));
  CHECK_THROWS_AS(gram_type_a(3, 2), InvalidArguments);
  CHECK_THROWS_AS(gram_type_a(0, 0), InvalidArguments);
}

TEST_CASE("pseudo matrix at p=1 and its blocks at p=2") {
  const GramMatrix g1 = gram_pseudo(1);
  CHECK(g1.entries == matrix_of({{"d", "0"}, {"0", "d"}}));
  CHECK(g1.basis.members == std::vector<HalfDiagram>{HD(2, {{1, 2}}, {{1, 2}}), HD(2, {{1, 2}})});

  const GramMatrix g2 = gram_pseudo(2);
  REQUIRE(g2.basis.size() == 6);
  const std::vector<std::size_t> even{0, 3, 5}, odd{1, 2, 4};
  CHECK(pick(g2.entries, even, odd) == PolyMatrix(3, 3));
  CHECK(pick(g2.entries, odd, even) == PolyMatrix(3, 3));
  const PolyMatrix block = matrix_of({{"d^2", "0", "d"}, {"0", "d^2", "d"}, {"d", "d", "d^2"}});
  CHECK(pick(g2.entries, even, even) == block);
  CHECK(pick(g2.entries, odd, odd) == block);
  CHECK_THROWS_AS(gram_pseudo(0), InvalidArguments);
}

TEST_CASE("pseudo matrix splits into the two signed Gram matrices") {
  for (int p = 1; p <= 4; ++p) {
    const GramMatrix g = gram_pseudo(p);
    std::vector<std::size_t> even, odd;
    for (std::size_t j = 0; j < g.basis.size(); ++j)
      (g.basis.members[j].decorations.size() % 2 == 0 ? even : odd).push_back(j);
    CHECK(pick(g.entries, even, odd) == PolyMatrix(even.size(), odd.size()));
    CHECK(pick(g.entries, even, even) == gram(2 * p, CellLabel::zero_plus()).entries);
    CHECK(pick(g.entries, odd, odd) == gram(2 * p, CellLabel::zero_minus()).entries);
  }
}

TEST_CASE("the two signed Gram matrices coincide") {
  for (int p = 1; p <= 5; ++p) {
    const GramMatrix plus = gram(2 * p, CellLabel::zero_plus());
    const GramMatrix minus = gram(2 * p, CellLabel::zero_minus());
    REQUIRE(plus.basis.size() == minus.basis.size());
    for (std::size_t j = 0; j < plus.basis.size(); ++j)
      CHECK(map_alpha(plus.basis.members[j]) == minus.basis.members[j]);
    CHECK(plus.entries == minus.entries);
  }
}

TEST_CASE("block structure against the next two sizes down") {
  for (int n = 4; n <= 8; ++n)
    for (int p = 1; 2 * p < n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const CellLabel cell = CellLabel::plain(n - 2 * p);
      const PolyMatrix g = gram(n, cell).entries;
      // One size down: the embedded matrix, or the pseudo matrix when the
      // smaller index has no cell of that shape.
      const PolyMatrix down1 = n - 1 == 2 * p
                                   ? gram_pseudo(p).entries
                                   : gram(n - 1, CellLabel::plain(n - 1 - 2 * p)).entries;
      const int m1 = down1.rows();
      CHECK(g.submatrix(0, 0, m1, m1) == down1);
      // The finer block description below needs rows whose last dot is
      // isolated, which only exist once n - 1 exceeds 2p.
      if (n - 1 == 2 * p) continue;
      // Two sizes down, one arc fewer: same through count.
      const PolyMatrix down2 = gram(n - 2, CellLabel::plain(n - 2 * p)).entries;
      const int m3 = down2.rows();
      const int m2 = m1 - m3;
      REQUIRE(BigInt(m2) == binomial(n - 2, p));
      bool zero = true;
      for (int i = 0; i < m2; ++i)
        for (int j = 0; j < m3; ++j)
          if (!g.at(i, m1 + j).is_zero()) zero = false;
      CHECK(zero);
      CHECK(g.submatrix(m2, m1, m3, m3) == down2);
      CHECK(g.submatrix(m1, m1, m3, m3) == down2.scaled(D));
    }
}

TEST_CASE("action on module elements") {
  const CellLabel c1 = CellLabel::plain(1);
  const TLDiagram e1 = generator(GeneratorId{false, 1}, 3);
  const TLDiagram eb1 = generator(GeneratorId{true, 1}, 3);

  auto r = act(c1, e1, HD(3, {{1, 2}}));
  REQUIRE(r.has_value());
  CHECK(r->delta_power == 1);
  CHECK(r->to == HD(3, {{1, 2}}));

  r = act(c1, e1, HD(3, {{2, 3}}));
  REQUIRE(r.has_value());
  CHECK(r->delta_power == 0);
  CHECK(r->to == HD(3, {{1, 2}}));

  CHECK(!act(c1, eb1, HD(3, {{1, 2}})).has_value());

  r = act(c1, eb1, HD(3, {{2, 3}}));
  REQUIRE(r.has_value());
  CHECK(r->delta_power == 0);
  CHECK(r->to == HD(3, {{1, 2}}, {{1, 2}}));

  // Scalar carried by the acting element.
  r = act(c1, e1.with_delta(2), HD(3, {{1, 2}}));
  REQUIRE(r.has_value());
  CHECK(r->delta_power == 3);

  CHECK_THROWS_AS(act(c1, e1, HD(3, {})), BasisMismatch);
  CHECK_THROWS_AS(act(c1, e1, HD(4, {{1, 2}})), BasisMismatch);
}

TEST_CASE("action matrices frozen at n=3") {
  const CellLabel c1 = CellLabel::plain(1);
  CHECK(action_matrix(3, c1, GeneratorId{false, 1}).entries ==
        matrix_of({{"0", "0", "0"}, {"0", "d", "1"}, {"0", "0", "0"}}));
  CHECK(action_matrix(3, c1, GeneratorId{true, 1}).entries ==
        matrix_of({{"d", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}}));
  CHECK(action_matrix(3, c1, GeneratorId{false, 2}).entries ==
        matrix_of({{"0", "0", "0"}, {"0", "0", "0"}, {"1", "1", "d"}}));
  CHECK_THROWS_AS(action_matrix(3, CellLabel::zero_plus(), GeneratorId{false, 1}),
                  InvalidArguments);
  CHECK_THROWS_AS(action_matrix(3, c1, GeneratorId{false, 3}), InvalidArguments);
}

TEST_CASE("action agrees with diagram multiplication on every cell") {
  for (int n = 2; n <= 5; ++n) {
    const auto elements = enumerate_basis(n);
    const auto poset = cells(n);
    auto position = [&](const CellLabel& c) {
      return std::find(poset.begin(), poset.end(), c) - poset.begin();
    };
    for (const auto& cell : poset) {
      const auto members = cell_basis(n, cell).members;
      const HalfDiagram t = members.front();
      for (const auto& s : members)
        for (const auto& a : elements) {
          const TLDiagram c_st = TLDiagram::from_halves(s, t, cell);
          const TLDiagram prod = multiply(a, c_st);
          const auto r = act(cell, a, s);
          if (r) {
            CHECK(prod == TLDiagram::from_halves(r->to, t, cell).with_delta(r->delta_power));
          } else {
            // Lower-cell result: strictly later in the poset.
            CHECK(position(prod.cell()) > position(cell));
          }
        }
    }
  }
}

TEST_CASE("action matrices satisfy the defining relations") {
  for (int n = 4; n <= 5; ++n)
    for (const auto& cell : cells(n)) {
      std::vector<PolyMatrix> mats;
      mats.push_back(action_matrix(n, cell, GeneratorId{true, 1}).entries);
      for (int i = 1; i < n; ++i)
        mats.push_back(action_matrix(n, cell, GeneratorId{false, i}).entries);
      auto adjacent = [](int g, int h) {
        if (g > h) std::swap(g, h);
        return g == 0 ? h == 2 : h - g == 1;
      };
      for (std::size_t g = 0; g < mats.size(); ++g) {
        CHECK(mats[g] * mats[g] == mats[g].scaled(D));
        for (std::size_t h = g + 1; h < mats.size(); ++h)
          if (adjacent(static_cast<int>(g), static_cast<int>(h))) {
            CHECK(mats[g] * mats[h] * mats[g] == mats[g]);
            CHECK(mats[h] * mats[g] * mats[h] == mats[h]);
          } else {
            CHECK(mats[g] * mats[h] == mats[h] * mats[g]);
          }
      }
    }
}

TEST_CASE("actions are self-adjoint for the Gram form") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& cell : cells(n)) {
      const PolyMatrix g = gram(n, cell).entries;
      std::vector<GeneratorId> gens{GeneratorId{true, 1}};
      for (int i = 1; i < n; ++i) gens.push_back(GeneratorId{false, i});
      for (const auto& id : gens) {
        const PolyMatrix a = action_matrix(n, cell, id).entries;
        CHECK(a.transposed() * g == g * a);
      }
    }
}

TEST_CASE("restriction to the subalgebra splits along the cell chain") {
  for (int n = 4; n <= 6; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const BranchReport rep = branching_check(n, p);
      if (!rep.ok) CAPTURE(rep.failures.front());
      CHECK(rep.ok);
    }

  const BranchReport r52 = branching_check(5, 2);
  CHECK(r52.sub_dim == 6);
  CHECK(r52.quot_dim == 4);
  const BranchReport r42 = branching_check(4, 2);
  CHECK(r42.sub_dim == 3);
  CHECK(r42.quot_dim == 0);

  CHECK_THROWS_AS(branching_check(3, 1), InvalidArguments);
  CHECK_THROWS_AS(branching_check(4, 3), InvalidArguments);
}

} // TEST_SUITE
