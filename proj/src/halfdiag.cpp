#include "tldkit/halfdiag.hpp"

#include <algorithm>

#include "tldkit/errors.hpp"

namespace tldkit {

std::vector<int> HalfDiagram::isolated() const {
  std::vector<bool> used(n + 1, false);
  for (const auto& [i, j] : pairs) {
    if (i >= 1 && i <= n) used[i] = true;
    if (j >= 1 && j <= n) used[j] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

int HalfDiagram::partner(int dot) const {
  for (const auto& [i, j] : pairs) {
    if (i == dot) return j;
    if (j == dot) return i;
  }
  return 0;
}

bool HalfDiagram::is_decorated(const std::pair<int, int>& pr) const {
  return std::find(decorations.begin(), decorations.end(), pr) != decorations.end();
}

std::optional<std::string> validate(const HalfDiagram& d) {
  if (d.n < 0) return "negative-n";
  std::vector<int> seen(d.n + 1, 0);
  for (const auto& [i, j] : d.pairs) {
    if (i < 1 || j < 1 || i > d.n || j > d.n) return "pair-out-of-range";
    if (i >= j) return "pair-not-increasing";
    ++seen[i];
    ++seen[j];
  }
  for (int i = 1; i <= d.n; ++i)
    if (seen[i] > 1) return "pair-overlap";
  if (!std::is_sorted(d.pairs.begin(), d.pairs.end())) return "pairs-not-sorted";
  // isolated dot under an arc
  for (const auto& [i, j] : d.pairs)
    for (int k = i + 1; k < j; ++k)
      if (seen[k] == 0) return "isolated-dot-under-arc";
  // crossing arcs
  for (const auto& [i, k] : d.pairs)
    for (const auto& [j, l] : d.pairs)
      if (i < j && j < k && k < l) return "crossing-pairs";
  if (!std::is_sorted(d.decorations.begin(), d.decorations.end())) return "decorations-not-sorted";
  if (std::adjacent_find(d.decorations.begin(), d.decorations.end()) != d.decorations.end())
    return "decoration-repeated";
  for (const auto& dec : d.decorations) {
    if (!std::binary_search(d.pairs.begin(), d.pairs.end(), dec)) return "decoration-not-a-pair";
    // decoration condition (1): isolated dots only to the right
    for (int k = 1; k < dec.second; ++k)
      if (k <= d.n && seen[k] == 0) return "isolated-dot-left-of-decoration";
    // decoration condition (2): decorated arcs must be exposed, i.e. not
    // nested inside any other arc
    for (const auto& [i, j] : d.pairs)
      if (i < dec.first && dec.second < j) return "decoration-nested";
  }
  return std::nullopt;
}

AssocSeq assoc_seq(const HalfDiagram& d) {
  AssocSeq seq;
  seq.reserve(2 * d.pairs.size());
  std::vector<int> ends;
  for (const auto& [i, j] : d.pairs) ends.push_back(j);
  std::sort(ends.rbegin(), ends.rend());
  for (int e : ends) seq.push_back({e, false});
  std::vector<int> dec_ends;
  for (const auto& [i, j] : d.decorations) dec_ends.push_back(j);
  std::sort(dec_ends.begin(), dec_ends.end());
  for (int e : dec_ends) seq.push_back({e, false});
  while (seq.size() < 2 * d.pairs.size()) seq.push_back(SeqEntry::inf());
  return seq;
}

bool cell_order_less(const HalfDiagram& a, const HalfDiagram& b) {
  const AssocSeq sa = assoc_seq(a);
  const AssocSeq sb = assoc_seq(b);
  return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end()) < 0;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::All: return "all";
    case Variant::EvenDecorations: return "evenDecorations";
    case Variant::OddDecorations: return "oddDecorations";
    case Variant::Undecorated: return "undecorated";
  }
  return "?";
}

int CellBasis::index_of(const HalfDiagram& d) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == d) return static_cast<int>(i);
  return -1;
}

namespace {

// Builds all valid (n,p) diagrams by extending over the last dot: either
// dot n stays isolated, or it closes a pair with the rightmost isolated
// dot of an (n-1, p-1) diagram; the closing pair may be decorated exactly
// when no isolated dot remains (n = 2p).
void generate(int n, int p, std::vector<HalfDiagram>& out) {
  if (p < 0 || 2 * p > n) return;
  if (n == 0) {
    out.push_back(HalfDiagram{0, {}, {}});
    return;
  }
  if (2 * p <= n - 1) {
    std::vector<HalfDiagram> shorter;
    generate(n - 1, p, shorter);
    for (auto& d : shorter) {
      d.n = n;
      out.push_back(std::move(d));
    }
  }
  if (p >= 1) {
    std::vector<HalfDiagram> shorter;
    generate(n - 1, p - 1, shorter);
    for (const auto& d : shorter) {
      const auto iso = d.isolated();
      HalfDiagram e{n, d.pairs, d.decorations};
      e.pairs.emplace_back(iso.back(), n);
      std::sort(e.pairs.begin(), e.pairs.end());
      out.push_back(e);
      if (n == 2 * p) {
        e.decorations.emplace_back(iso.back(), n);
        std::sort(e.decorations.begin(), e.decorations.end());
        out.push_back(std::move(e));
      }
    }
  }
}

} // namespace

CellBasis enumerate_cell(int n, int p, Variant variant) {
  if (n < 0 || p < 0 || 2 * p > n)
    throw InvalidArguments("enumerate_cell: need 0 <= 2p <= n");
  if ((variant == Variant::EvenDecorations || variant == Variant::OddDecorations) && n != 2 * p)
    throw InvalidArguments("signed variants exist only when n = 2p");
  std::vector<HalfDiagram> all;
  generate(n, p, all);
  CellBasis basis{n, p, variant, {}};
  for (auto& d : all) {
    const size_t t = d.decorations.size();
    const bool keep = variant == Variant::All ||
                      (variant == Variant::EvenDecorations && t % 2 == 0) ||
                      (variant == Variant::OddDecorations && t % 2 == 1) ||
                      (variant == Variant::Undecorated && t == 0);
    if (keep) basis.members.push_back(std::move(d));
  }
  std::sort(basis.members.begin(), basis.members.end(),
            [](const HalfDiagram& a, const HalfDiagram& b) { return cell_order_less(a, b); });
  return basis;
}

BigInt count_cell(int n, int p) {
  if (n < 0 || p < 0 || 2 * p > n)
    throw InvalidArguments("count_cell: need 0 <= 2p <= n");
  return binomial(n, p);
}

namespace {

// The pair ending at dot n; requires n to be paired.
std::pair<int, int> last_pair(const HalfDiagram& d) {
  for (const auto& pr : d.pairs)
    if (pr.second == d.n) return pr;
  throw InvalidArguments("dot n is isolated");
}

} // namespace

HalfDiagram map_alpha(const HalfDiagram& d) {
  if (d.n != 2 * d.p()) throw InvalidArguments("map_alpha requires n = 2p");
  if (validate(d)) throw InvalidArguments("map_alpha requires a valid diagram");
  const auto pr = last_pair(d);
  HalfDiagram out = d;
  if (out.is_decorated(pr))
    out.decorations.erase(std::find(out.decorations.begin(), out.decorations.end(), pr));
  else {
    out.decorations.push_back(pr);
    std::sort(out.decorations.begin(), out.decorations.end());
  }
  return out;
}

HalfDiagram map_beta(const HalfDiagram& d, char sign) {
  if (sign != '+' && sign != '-') throw InvalidArguments("map_beta sign must be '+' or '-'");
  if (d.n != 2 * d.p()) throw InvalidArguments("map_beta requires n = 2p");
  if (validate(d)) throw InvalidArguments("map_beta requires a valid diagram");
  const size_t t = d.decorations.size();
  if ((sign == '+') != (t % 2 == 0))
    throw InvalidArguments("map_beta parity does not match sign");
  const auto pr = last_pair(d);
  HalfDiagram out{d.n - 1, {}, {}};
  for (const auto& q : d.pairs)
    if (q != pr) out.pairs.push_back(q);
  for (const auto& q : d.decorations)
    if (q != pr) out.decorations.push_back(q);
  return out;
}

HalfDiagram map_gamma(const HalfDiagram& d) {
  if (d.n == 2 * d.p()) throw InvalidArguments("map_gamma requires n > 2p");
  if (validate(d)) throw InvalidArguments("map_gamma requires a valid diagram");
  const auto pr = last_pair(d);  // throws if n is isolated
  if (d.is_decorated(pr)) throw InternalError("pair at n cannot be decorated when n > 2p");
  HalfDiagram out{d.n - 1, {}, d.decorations};
  for (const auto& q : d.pairs)
    if (q != pr) out.pairs.push_back(q);
  return out;
}

} // namespace tldkit
