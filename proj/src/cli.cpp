#include "tldkit/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tldkit/cellular.hpp"
#include "tldkit/diagram.hpp"
#include "tldkit/errors.hpp"
#include "tldkit/forked.hpp"
#include "tldkit/gramdet.hpp"
#include "tldkit/json_io.hpp"
#include "tldkit/verify.hpp"

namespace tldkit {

namespace {

Variant parse_variant(const std::string& text) {
  if (text == "all") return Variant::All;
  if (text == "even") return Variant::EvenDecorations;
  if (text == "odd") return Variant::OddDecorations;
  if (text == "undecorated") return Variant::Undecorated;
  throw InvalidArguments("unknown variant: " + text);
}

std::string half_text(const HalfDiagram& d) {
  std::string out = "n=" + std::to_string(d.n);
  for (const auto& pr : d.pairs) {
    out += " (" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ")";
    if (d.is_decorated(pr)) out += "*";
  }
  return out;
}

int do_enumerate(int n, int p, const std::string& variant, const std::string& format,
                 std::ostream& out) {
  const CellBasis basis = enumerate_cell(n, p, parse_variant(variant));
  if (format == "text") {
    for (const HalfDiagram& d : basis.members) out << half_text(d) << "\n";
  } else {
    out << "[";
    for (int i = 0; i < basis.size(); ++i) out << (i ? "," : "") << to_json(basis.members[i]);
    out << "]\n";
  }
  return 0;
}

int do_gram(int n, const std::string& cell_text, const std::string& format,
            std::ostream& out) {
  const GramMatrix g = gram(n, CellLabel::parse(cell_text));
  if (format == "latex")
    out << to_latex(g);
  else if (format == "csv")
    out << to_csv(g);
  else
    out << to_json(g) << "\n";
  return 0;
}

int do_det(int n, const std::string& cell_text, const std::string& method,
           std::ostream& out) {
  const CellLabel cell = CellLabel::parse(cell_text);
  if (method != "all") {
    out << to_json(det_gram(n, cell, parse_det_method(method))) << "\n";
    return 0;
  }
  std::vector<DetResult> results;
  for (DetMethod m : {DetMethod::Direct, DetMethod::Recurrence, DetMethod::Closed}) {
    try {
      results.push_back(det_gram(n, cell, m));
    } catch (const MethodUnsupported&) {
    }
  }
  for (const DetResult& r : results) out << to_json(r) << "\n";
  for (const DetResult& r : results)
    if (r.value != results.front().value) return 1;
  return 0;
}

TLDiagram word_product(int n, const std::string& word) {
  TLDiagram acc = TLDiagram::identity(n);
  std::istringstream in(word);
  std::string token;
  while (in >> token) acc = multiply(acc, generator(GeneratorId::parse(token), n));
  return acc;
}

int do_semisimple(int n, const std::string& delta_text, bool crosscheck,
                  std::ostream& out) {
  const Rational delta = parse_rational(delta_text);
  const Verdict v = semisimple(n, delta);
  out << to_json(v) << "\n";
  if (!crosscheck) return 0;
  const Verdict check = semisimple_crosscheck(n, delta);
  out << to_json(check) << "\n";
  return v.decision == check.decision ? 0 : 1;
}

int do_verify(const std::string& suite, int max_n, std::ostream& out) {
  const VerifyReport report = run_suite(suite, max_n);
  for (const VerifyCase& c : report.cases) {
    if (c.ok)
      out << "ok " << c.key << "\n";
    else
      out << "FAIL " << c.key << ": " << c.detail << "\n";
  }
  out << "suite " << suite << ": " << report.passed() << "/" << report.cases.size()
      << " ok\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact diagram calculus for the type-D Temperley-Lieb family"};
  app.require_subcommand(1);

  int n = 0;
  int p = 0;
  int max_n = 6;
  std::string cell_text;
  std::string variant = "all";
  std::string format = "json";
  std::string method = "direct";
  std::string word;
  std::string delta_text = "0";
  std::string suite = "all";
  bool crosscheck = false;
  bool forked_dim = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a cell basis in order");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--p", p)->required();
  enumerate->add_option("--variant", variant)
      ->check(CLI::IsMember({"all", "even", "odd", "undecorated"}));
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* gram_cmd = app.add_subcommand("gram", "print a cell's Gram matrix");
  gram_cmd->add_option("--n", n)->required();
  gram_cmd->add_option("--cell", cell_text)->required();
  gram_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "csv"}));

  CLI::App* det = app.add_subcommand("det", "Gram determinant of a cell");
  det->add_option("--n", n)->required();
  det->add_option("--cell", cell_text)->required();
  det->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "recurrence", "closed", "all"}));

  CLI::App* mult = app.add_subcommand("multiply", "evaluate a generator word");
  mult->add_option("--n", n)->required();
  mult->add_option("--word", word);

  CLI::App* semi = app.add_subcommand("semisimple", "semi-simplicity at a rational value");
  semi->add_option("--n", n)->required();
  semi->add_option("--delta", delta_text)->required();
  semi->add_flag("--crosscheck", crosscheck);

  CLI::App* quasi = app.add_subcommand("quasihereditary", "quasi-heredity at a rational value");
  quasi->add_option("--n", n)->required();
  quasi->add_option("--delta", delta_text)->required();

  CLI::App* forked = app.add_subcommand("forked", "the forked quotient");
  forked->require_subcommand(1);
  CLI::App* fdim = forked->add_subcommand("dim", "quotient dimension");
  fdim->add_option("--n", n)->required();
  CLI::App* fsemi = forked->add_subcommand("semisimple", "semi-simplicity of the quotient");
  fsemi->add_option("--n", n)->required();
  fsemi->add_option("--delta", delta_text)->required();
  CLI::App* fqh = forked->add_subcommand("qh", "quasi-heredity of the quotient");
  fqh->add_option("--n", n)->required();
  fqh->add_option("--delta", delta_text)->required();
  CLI::App* fmult = forked->add_subcommand("multiply", "evaluate a word in the quotient");
  fmult->add_option("--n", n)->required();
  fmult->add_option("--word", word);

  CLI::App* dim = app.add_subcommand("dimension", "algebra dimension");
  dim->add_option("--n", n)->required();
  dim->add_flag("--forked", forked_dim);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember(
      {"relations", "order", "maps", "branching", "gram52", "recurrence", "closed",
       "typea", "all"}));
  verify->add_option("--max-n", max_n);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*enumerate) return do_enumerate(n, p, variant, format, out);
    if (*gram_cmd) return do_gram(n, cell_text, format, out);
    if (*det) return do_det(n, cell_text, method, out);
    if (*mult) {
      out << to_json(word_product(n, word)) << "\n";
      return 0;
    }
    if (*semi) return do_semisimple(n, delta_text, crosscheck, out);
    if (*quasi) {
      out << to_json(quasihereditary(n, parse_rational(delta_text))) << "\n";
      return 0;
    }
    if (*fdim) {
      out << ftl_dim(n).str() << "\n";
      return 0;
    }
    if (*fsemi) {
      out << to_json(ftl_semisimple(n, parse_rational(delta_text))) << "\n";
      return 0;
    }
    if (*fqh) {
      out << to_json(ftl_quasihereditary(n, parse_rational(delta_text))) << "\n";
      return 0;
    }
    if (*fmult) {
      FtlElement acc = FtlElement::of(TLDiagram::identity(n));
      std::istringstream in(word);
      std::string token;
      while (in >> token)
        acc = ftl_multiply(acc, FtlElement::of(generator(GeneratorId::parse(token), n)));
      out << to_json(acc) << "\n";
      return 0;
    }
    if (*dim) {
      out << (forked_dim ? ftl_dim(n) : BigInt(basis_count(n).total)).str() << "\n";
      return 0;
    }
    if (*verify) return do_verify(suite, max_n, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command selected\n";
  return 2;
}

}  // namespace tldkit
