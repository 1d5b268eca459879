#include "tldkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "tldkit/cellular.hpp"
#include "tldkit/diagram.hpp"
#include "tldkit/errors.hpp"
#include "tldkit/gramdet.hpp"
#include "tldkit/json_io.hpp"
#include "tldkit/matrix.hpp"

namespace tldkit {

namespace {

// A case computes its own failure detail; empty means pass.
struct PendingCase {
  std::string key;
  std::function<std::string()> fn;
};

std::string two(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

bool generators_adjacent(const GeneratorId& a, const GeneratorId& b) {
  if (a.bar && b.bar) return false;
  if (a.bar) return b.index == 2;
  if (b.bar) return a.index == 2;
  return a.index - b.index == 1 || b.index - a.index == 1;
}

std::string check_relations(int n) {
  std::vector<GeneratorId> ids;
  ids.push_back({true, 1});
  for (int i = 1; i < n; ++i) ids.push_back({false, i});
  for (const GeneratorId& g : ids) {
    const TLDiagram d = generator(g, n);
    if (multiply(d, d) != d.with_delta(1)) return g.str() + " square is not d times itself";
    if (multiply(d, TLDiagram::identity(n)) != d) return g.str() + " times identity moved";
  }
  for (const GeneratorId& g : ids)
    for (const GeneratorId& h : ids) {
      if (g == h) continue;
      const TLDiagram dg = generator(g, n);
      const TLDiagram dh = generator(h, n);
      if (generators_adjacent(g, h)) {
        if (multiply(multiply(dg, dh), dg) != dg)
          return g.str() + " " + h.str() + " braid relation failed";
      } else if (multiply(dg, dh) != multiply(dh, dg)) {
        return g.str() + " " + h.str() + " should commute";
      }
    }
  return {};
}

std::string check_order(int n) {
  for (int p = 0; 2 * p <= n; ++p) {
    const CellBasis basis = enumerate_cell(n, p);
    if (BigInt(basis.size()) != binomial(n, p))
      return "count at p=" + std::to_string(p) + " is not binomial(n,p)";
    for (int i = 0; i < basis.size(); ++i) {
      if (validate(basis.members[i]))
        return "invalid member at p=" + std::to_string(p);
      if (i + 1 < basis.size() &&
          !cell_order_less(basis.members[i], basis.members[i + 1]))
        return "order not strictly increasing at p=" + std::to_string(p);
    }
  }
  return {};
}

std::string check_maps(int n) {
  if (n % 2 == 0) {
    const int p = n / 2;
    const CellBasis even = enumerate_cell(n, p, Variant::EvenDecorations);
    const CellBasis odd = enumerate_cell(n, p, Variant::OddDecorations);
    if (even.size() != odd.size()) return "parity classes differ in size";
    for (int i = 0; i < even.size(); ++i) {
      if (map_alpha(even.members[i]) != odd.members[i])
        return "alpha is not index-wise at i=" + std::to_string(i);
      if (map_alpha(odd.members[i]) != even.members[i])
        return "alpha is not an involution at i=" + std::to_string(i);
    }
    const CellBasis target = enumerate_cell(n - 1, p - 1);
    for (const char sign : {'+', '-'}) {
      const CellBasis& source = sign == '+' ? even : odd;
      if (source.size() != target.size()) return "beta sizes differ";
      for (int i = 0; i < source.size(); ++i) {
        const HalfDiagram b = map_beta(source.members[i], sign);
        if (validate(b)) return "beta image invalid";
        if (b != target.members[i])
          return std::string("beta") + sign + " is not index-wise";
      }
    }
  }
  for (int p = 1; 2 * p < n; ++p) {
    const CellBasis source = enumerate_cell(n, p);
    const CellBasis target = enumerate_cell(n - 1, p - 1);
    std::vector<HalfDiagram> mapped;
    for (const HalfDiagram& d : source.members) {
      if (d.partner(n) == 0) continue;
      const HalfDiagram g = map_gamma(d);
      if (validate(g)) return "gamma image invalid at p=" + std::to_string(p);
      mapped.push_back(g);
    }
    if (static_cast<int>(mapped.size()) != target.size())
      return "gamma image count at p=" + std::to_string(p);
    for (std::size_t i = 0; i < mapped.size(); ++i)
      if (mapped[i] != target.members[i])
        return "gamma is not index-wise at p=" + std::to_string(p);
  }
  return {};
}

std::string check_branching(int n, int p) {
  const BranchReport rep = branching_check(n, p);
  if (rep.ok) return {};
  std::string out = "restriction structure failed:";
  for (const std::string& f : rep.failures) out += " " + f + ";";
  return out;
}

std::string check_gram52() {
  const std::string path = std::string(TLDKIT_DATA_DIR) + "/gram52.json";
  std::ifstream in(path);
  if (!in) return "cannot open " + path;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const GramMatrix golden = gram_from_json(buffer.str());
  const GramMatrix computed = gram(5, CellLabel::plain(1));
  if (golden.n != computed.n || golden.label != computed.label)
    return "golden header disagrees";
  if (golden.basis.members != computed.basis.members)
    return "golden basis order disagrees";
  if (golden.entries != computed.entries) return "golden entries disagree";
  return {};
}

std::string check_recurrence_step(int n, int p) {
  const Poly lhs = det_gram(n, CellLabel::plain(n - 2 * p), DetMethod::Direct).value;
  if (lhs != det_gram(n, CellLabel::plain(n - 2 * p), DetMethod::Recurrence).value)
    return "direct and recurrence determinants disagree";
  const Poly down_same =
      n - 1 == 2 * p ? det_gram_pseudo(p, DetMethod::Direct).value
                     : det_gram(n - 1, CellLabel::plain(n - 1 - 2 * p), DetMethod::Direct).value;
  const Poly down_fewer =
      det_gram(n - 1, CellLabel::plain(n + 1 - 2 * p), DetMethod::Direct).value;
  const RatioPair r = r_ratio(n, p);
  const long e = binomial(n - 1, p - 1).convert_to<long>();
  if (lhs * power(r.den, e) != down_same * power(r.num, e) * down_fewer)
    return "size step identity failed";
  return {};
}

std::string check_closed(int n) {
  for (int k = n % 2 == 0 ? 2 : 1; k <= n; k += 2) {
    const CellLabel cell = CellLabel::plain(k);
    if (det_gram(n, cell, DetMethod::Recurrence).value !=
        det_gram(n, cell, DetMethod::Closed).value)
      return cell.str() + " closed form disagrees with the recurrence";
  }
  return {};
}

std::string check_closed_pseudo(int p) {
  const Poly rec = det_gram_pseudo(p, DetMethod::Recurrence).value;
  if (rec != det_gram_pseudo(p, DetMethod::Closed).value)
    return "closed form disagrees with the recurrence";
  if (binomial(2 * p, p) <= 70 && rec != det_gram_pseudo(p, DetMethod::Direct).value)
    return "direct determinant disagrees";
  return {};
}

std::string check_product_identity(int n, int p) {
  return det_product_identity(n, p) ? std::string{} : "ratio product identity failed";
}

std::string check_type_a(int n) {
  for (const CellLabel& cell : cells(n)) {
    if (cell.kind != CellKind::Dotted) continue;
    const GramMatrix dotted = gram(n, cell);
    const GramMatrix plain = gram_type_a(n, cell.p_of(n));
    if (dotted.basis.members != plain.basis.members)
      return cell.str() + " bases disagree";
    if (dotted.entries != plain.entries.scaled(Poly::variable()))
      return cell.str() + " is not d times the undecorated matrix";
  }
  if (n >= 2 && det_gram_type_a(n, 1, DetMethod::Direct).value != chebyshev_p(n))
    return "one-arc determinant is not P_n";
  for (int p = 0; 2 * p <= n; ++p) {
    const Poly direct = det_gram_type_a(n, p, DetMethod::Direct).value;
    if (direct != det_gram_type_a(n, p, DetMethod::Recurrence).value)
      return "determinant routes disagree at p=" + std::to_string(p);
    if (p == 0) continue;
    const long e =
        (binomial(n - 1, p - 1) - binomial(n - 1, p - 2)).convert_to<long>();
    const Poly down_fewer = det_gram_type_a(n - 1, p - 1, DetMethod::Direct).value;
    if (n == 2 * p) {
      if (direct != Poly::monomial(1, e) * down_fewer)
        return "boundary size step failed at p=" + std::to_string(p);
    } else {
      const Poly down_same = det_gram_type_a(n - 1, p, DetMethod::Direct).value;
      if (direct * power(chebyshev_p(n - 2 * p + 1), e) !=
          down_same * power(chebyshev_p(n - 2 * p + 2), e) * down_fewer)
        return "size step identity failed at p=" + std::to_string(p);
    }
  }
  return {};
}

std::vector<PendingCase> build_suite(const std::string& suite, int max_n) {
  std::vector<PendingCase> cases;
  const auto add = [&](std::string key, std::function<std::string()> fn) {
    cases.push_back({std::move(key), std::move(fn)});
  };
  if (suite == "relations") {
    for (int n = 2; n <= max_n; ++n)
      add("relations/n=" + two(n), [n] { return check_relations(n); });
  } else if (suite == "order") {
    for (int n = 2; n <= max_n; ++n)
      add("order/n=" + two(n), [n] { return check_order(n); });
  } else if (suite == "maps") {
    for (int n = 2; n <= max_n; ++n)
      add("maps/n=" + two(n), [n] { return check_maps(n); });
  } else if (suite == "branching") {
    for (int n = 4; n <= max_n; ++n)
      for (int p = 0; 2 * p <= n; ++p)
        add("branching/n=" + two(n) + ",p=" + std::to_string(p),
            [n, p] { return check_branching(n, p); });
  } else if (suite == "gram52") {
    add("gram52/golden", [] { return check_gram52(); });
  } else if (suite == "recurrence") {
    for (int n = 3; n <= max_n; ++n)
      for (int p = 1; 2 * p + 1 <= n; ++p)
        add("recurrence/n=" + two(n) + ",p=" + std::to_string(p),
            [n, p] { return check_recurrence_step(n, p); });
  } else if (suite == "closed") {
    for (int n = 2; n <= max_n; ++n) {
      add("closed/plain/n=" + two(n), [n] { return check_closed(n); });
      for (int p = 0; 2 * p <= n; ++p)
        add("closed/identity/n=" + two(n) + ",p=" + std::to_string(p),
            [n, p] { return check_product_identity(n, p); });
    }
    for (int p = 1; 2 * p <= max_n; ++p)
      add("closed/pseudo/p=" + std::to_string(p), [p] { return check_closed_pseudo(p); });
  } else if (suite == "typea") {
    for (int n = 2; n <= max_n; ++n)
      add("typea/n=" + two(n), [n] { return check_type_a(n); });
  } else {
    throw InvalidArguments("unknown suite: " + suite);
  }
  return cases;
}

int thread_budget() {
  if (const char* env = std::getenv("TLDKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const VerifyCase& c) { return c.ok; });
}

int VerifyReport::passed() const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.ok; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relations", "order", "maps", "branching", "gram52", "recurrence", "closed", "typea"};
  return names;
}

VerifyReport run_suite(const std::string& suite, int max_n) {
  if (max_n < 2) throw InvalidArguments("max_n must be at least 2");
  std::vector<PendingCase> pending;
  if (suite == "all") {
    for (const std::string& name : suite_names())
      for (PendingCase& c : build_suite(name, max_n)) pending.push_back(std::move(c));
  } else {
    pending = build_suite(suite, max_n);
  }

  VerifyReport report;
  report.cases.resize(pending.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      VerifyCase& out = report.cases[i];
      out.key = pending[i].key;
      try {
        out.detail = pending[i].fn();
      } catch (const std::exception& e) {
        out.detail = std::string("exception: ") + e.what();
      }
      out.ok = out.detail.empty();
    }
  };
  const int threads = std::min<int>(thread_budget(), static_cast<int>(pending.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) { return a.key < b.key; });
  return report;
}

}  // namespace tldkit
