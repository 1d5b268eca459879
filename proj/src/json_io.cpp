#include "tldkit/json_io.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tldkit/errors.hpp"

namespace tldkit {

namespace {

using Json = nlohmann::ordered_json;

Json half_to_value(const HalfDiagram& d) {
  Json pairs = Json::array();
  for (const auto& [i, j] : d.pairs) pairs.push_back(Json::array({i, j}));
  Json decorations = Json::array();
  for (const auto& [i, j] : d.decorations) decorations.push_back(Json::array({i, j}));
  return Json{{"n", d.n}, {"pairs", pairs}, {"decorations", decorations}};
}

std::string node_label(int v, int n) {
  return v < n ? "t" + std::to_string(v + 1) : "b" + std::to_string(v - n + 1);
}

Json verdict_to_value(const Verdict& v) {
  Json witnesses = Json::array();
  for (const Witness& w : v.witnesses)
    witnesses.push_back(Json{{"family", w.family},
                             {"index", w.index},
                             {"value", format_rational(w.value)}});
  return Json{{"decision", v.decision}, {"witnesses", witnesses}};
}

std::vector<std::pair<int, int>> pair_list(const Json& value, const char* what) {
  if (!value.is_array()) throw InvalidArguments(std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const Json& item : value) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw InvalidArguments(std::string(what) + " entries must be integer pairs");
    out.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json parse_text(const std::string& text) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) throw InvalidArguments("malformed JSON");
  return value;
}

HalfDiagram half_from_value(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value["n"].is_number_integer())
    throw InvalidArguments("half diagram needs an integer n");
  HalfDiagram d{value["n"].get<int>(),
                pair_list(value.value("pairs", Json::array()), "pairs"),
                pair_list(value.value("decorations", Json::array()), "decorations")};
  if (auto reason = validate(d)) throw InvalidArguments(*reason);
  return d;
}

}  // namespace

std::string to_json(const HalfDiagram& d) { return half_to_value(d).dump(); }

std::string to_json(const TLDiagram& d) {
  struct Labeled {
    std::string a;
    std::string b;
    bool dec;
  };
  std::vector<Labeled> edges;
  for (const TLDiagram::Edge& e : d.edges()) {
    std::string a = node_label(e.a, d.n());
    std::string b = node_label(e.b, d.n());
    if (b < a) std::swap(a, b);
    edges.push_back({std::move(a), std::move(b), e.dec});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Labeled& x, const Labeled& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  Json list = Json::array();
  for (const Labeled& e : edges)
    list.push_back(Json{{"a", e.a}, {"b", e.b}, {"dec", e.dec}});
  return Json{{"n", d.n()},
              {"edges", list},
              {"decoratedCircuit", d.decorated_circuit()},
              {"deltaPower", d.delta_power()}}
      .dump();
}

std::string to_json(const FtlElement& e) {
  if (e.is_zero()) return Json{{"zero", true}}.dump();
  return to_json(*e.diagram);
}

std::string to_json(const GramMatrix& g) {
  Json order = Json::array();
  for (const HalfDiagram& d : g.basis.members) order.push_back(half_to_value(d));
  Json entries = Json::array();
  for (int i = 0; i < g.entries.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.entries.cols(); ++j) row.push_back(g.entries.at(i, j).str());
    entries.push_back(row);
  }
  return Json{{"n", g.n}, {"cell", g.label}, {"order", order}, {"entries", entries}}.dump();
}

std::string to_json(const DetResult& r) {
  return Json{{"n", r.n},
              {"cell", r.cell},
              {"method", det_method_name(r.method)},
              {"det", r.value.str()}}
      .dump();
}

std::string to_json(const Verdict& v) { return verdict_to_value(v).dump(); }

HalfDiagram half_from_json(const std::string& text) {
  return half_from_value(parse_text(text));
}

GramMatrix gram_from_json(const std::string& text) {
  const Json value = parse_text(text);
  if (!value.is_object() || !value.contains("n") || !value["n"].is_number_integer() ||
      !value.contains("cell") || !value["cell"].is_string() || !value.contains("order") ||
      !value["order"].is_array() || !value.contains("entries") || !value["entries"].is_array())
    throw InvalidArguments("gram object needs n, cell, order and entries");
  GramMatrix g;
  g.n = value["n"].get<int>();
  g.label = value["cell"].get<std::string>();
  try {
    g.cell = CellLabel::parse(g.label);
  } catch (const InvalidArguments&) {
    g.cell = std::nullopt;
  }
  for (const Json& item : value["order"]) {
    const HalfDiagram d = half_from_value(item);
    if (d.n != g.n) throw InvalidArguments("order entries must live at size n");
    g.basis.members.push_back(d);
  }
  g.basis.n = g.n;
  if (!g.basis.members.empty()) g.basis.p = g.basis.members.front().p();
  if (g.cell) g.basis.variant = cell_variant(*g.cell);
  const auto& rows = value["entries"];
  const int size = static_cast<int>(g.basis.members.size());
  if (static_cast<int>(rows.size()) != size)
    throw InvalidArguments("entry rows must match the basis size");
  g.entries = PolyMatrix(size, size);
  for (int i = 0; i < size; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != size)
      throw InvalidArguments("entry rows must be square");
    for (int j = 0; j < size; ++j) {
      if (!rows[i][j].is_string()) throw InvalidArguments("entries must be polynomial text");
      g.entries.at(i, j) = Poly::parse(rows[i][j].get<std::string>());
    }
  }
  return g;
}

std::string to_csv(const GramMatrix& g) {
  std::string out;
  for (int i = 0; i < g.entries.rows(); ++i) {
    for (int j = 0; j < g.entries.cols(); ++j) {
      if (j) out += ',';
      out += g.entries.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    const BigInt& c = p.coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (mag != 1 || e == 0) out += mag.str();
    if (e == 1) out += "\\delta";
    if (e >= 2) out += "\\delta^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string to_latex(const GramMatrix& g) {
  std::string out = "\\begin{pmatrix}\n";
  for (int i = 0; i < g.entries.rows(); ++i) {
    for (int j = 0; j < g.entries.cols(); ++j) {
      if (j) out += " & ";
      out += poly_latex(g.entries.at(i, j));
    }
    out += " \\\\\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

}  // namespace tldkit
