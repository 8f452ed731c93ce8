#include "hopfcalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "hopfcalc/antipode.hpp"
#include "hopfcalc/corpus.hpp"
#include "hopfcalc/egf.hpp"
#include "hopfcalc/expr.hpp"
#include "hopfcalc/format.hpp"
#include "hopfcalc/hadamard_routes.hpp"
#include "hopfcalc/instances.hpp"
#include "hopfcalc/partitions.hpp"
#include "hopfcalc/suites.hpp"

namespace hopfcalc {

namespace {

using nlohmann::json;

bool is_json(const std::string& format) { return format == "json"; }

template <class B>
void print_lc(std::ostream& out, const LinComb<B>& x, bool as_json) {
  if (!as_json) {
    out << format_lc(x) << "\n";
    return;
  }
  json terms = json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"basis", basis_str(b)}, {"coefficient", c.str()}});
  out << terms.dump() << "\n";
}

void print_value(std::ostream& out, const std::string& value, bool as_json) {
  if (as_json)
    out << json{{"value", value}}.dump() << "\n";
  else
    out << value << "\n";
}

template <class C, class Show>
void print_series(std::ostream& out, const EGFSeries<C>& f, bool as_json,
                  Show show) {
  if (as_json) {
    json coeffs = json::array();
    for (int n = 0; n <= f.order(); ++n) coeffs.push_back(show(f.coeff(n)));
    out << json{{"coefficients", coeffs}}.dump() << "\n";
    return;
  }
  for (int n = 0; n <= f.order(); ++n)
    out << n << ": " << show(f.coeff(n)) << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer list: " + text);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size()) throw ParseError("bad integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("bad series: " + text);
    out.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ParseError("empty series");
  return out;
}

FiniteGroup::Ptr group_by_name(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S')) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used + 1 != name.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (name[0] == 'C' && n >= 1 && n <= 48) return FiniteGroup::cyclic(n);
    if (name[0] == 'S' && n >= 1 && n <= 6) return FiniteGroup::symmetric(n);
  }
  throw UsageError("unknown group (use C1..C48 or S1..S6): " + name);
}

struct AlgebraChoice {
  std::string alg = "free-q";
  std::string q = "0";
  std::string alphabet;  // empty means the full a..z
  std::string theta;
  std::string group = "C3";
};

struct VerbCall {
  std::string verb;
  std::vector<std::string> exprs;
  bool as_json = false;
  bool tensor = false;                 // pair: emit the tensor, not the pairing
  std::optional<std::string> lin;      // prod: "r,s" for r*X + s*Y
};

template <class B, class ParseFn>
int algebra_dispatch(const BialgebraOps<B>& alg, ParseFn parse,
                     const VerbCall& call, std::ostream& out) {
  const bool js = call.as_json;
  if (call.verb == "coprod") {
    print_lc(out, alg_coproduct(alg, parse(call.exprs[0])), js);
  } else if (call.verb == "prod") {
    LinComb<B> x = parse(call.exprs[0]);
    LinComb<B> y = parse(call.exprs[1]);
    if (call.lin) {
      std::vector<Rational> rs = parse_rational_list(*call.lin);
      if (rs.size() != 2) throw UsageError("--lin wants two rationals r,s");
      print_lc(out, lc_combine(rs[0], x, rs[1], y), js);
    } else {
      print_lc(out, alg_product(alg, x, y), js);
    }
  } else if (call.verb == "antipode") {
    print_lc(out, antipode(alg, parse(call.exprs[0])), js);
  } else if (call.verb == "counit") {
    print_value(out, alg_counit(alg, parse(call.exprs[0])).str(), js);
  } else {  // pair
    LinComb<B> x = parse(call.exprs[0]);
    LinComb<B> y = parse(call.exprs[1]);
    if (call.tensor)
      print_lc(out, lc_tensor(x, y), js);
    else
      print_value(out, lc_pair(x, y).str(), js);
  }
  return 0;
}

int run_algebra_verb(const AlgebraChoice& which, const VerbCall& call,
                     std::ostream& out) {
  Alphabet a = which.alphabet.empty() ? Alphabet::full() : Alphabet(which.alphabet);
  Rational q = Rational::parse(which.q);
  if (which.alg == "free-q") {
    auto alg = make_free_concat_unshuffle(a, q);
    return algebra_dispatch<Word>(
        alg, [&a](const std::string& s) { return parse_word_expr(s, a); }, call, out);
  }
  if (which.alg == "shuffle-q") {
    auto alg = make_shuffle_deconcat(a, q);
    return algebra_dispatch<Word>(
        alg, [&a](const std::string& s) { return parse_word_expr(s, a); }, call, out);
  }
  if (which.alg == "free-grouplike") {
    auto alg = make_free_grouplike(a);
    return algebra_dispatch<Word>(
        alg, [&a](const std::string& s) { return parse_word_expr(s, a); }, call, out);
  }
  if (which.alg == "poly") {
    auto alg = make_poly_binomial(a);
    return algebra_dispatch<Monomial>(
        alg, [&a](const std::string& s) { return parse_monomial_expr(s, a); }, call,
        out);
  }
  if (which.alg == "trace") {
    CommutationGraph theta = CommutationGraph::parse(which.theta);
    auto alg = make_trace_unshuffle(a, theta);
    return algebra_dispatch<TraceWord>(
        alg,
        [&a, &theta](const std::string& s) { return parse_trace_expr(s, a, theta); },
        call, out);
  }
  if (which.alg == "group") {
    FiniteGroup::Ptr g = group_by_name(which.group);
    auto alg = make_group_algebra(g);
    return algebra_dispatch<GroupElem>(
        alg, [&g](const std::string& s) { return parse_group_expr(s, g); }, call, out);
  }
  if (which.alg == "ldiag") {
    auto alg = make_ldiag();
    return algebra_dispatch<LabelledDiagram>(
        alg, [](const std::string& s) { return parse_ldiag_expr(s); }, call, out);
  }
  if (which.alg == "diag") {
    auto alg = make_diag();
    return algebra_dispatch<Diagram>(
        alg, [](const std::string& s) { return parse_diag_expr(s); }, call, out);
  }
  throw UsageError("unknown algebra: " + which.alg);
}

int run_check(int degree, bool as_json, std::ostream& out) {
  std::vector<SuiteResult> rows = run_property_suites(degree);
  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  if (as_json) {
    json suites = json::array();
    for (const auto& r : rows)
      suites.push_back(
          {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << json{{"suites", suites}, {"all_passed", all}}.dump() << "\n";
  } else {
    int passed = 0;
    for (const auto& r : rows) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed && !r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
      passed += r.passed ? 1 : 0;
    }
    out << passed << "/" << rows.size() << " suites passed\n";
  }
  return all ? 0 : 1;
}

int dispatch(const std::string& verb, const AlgebraChoice& which, VerbCall& call,
             const std::vector<std::string>& words, const std::vector<int>& ints,
             const std::string& positions, bool word_mode, const std::string& route,
             int order, const std::string& f_text, const std::string& g_text,
             const std::string& op, int degree, std::ostream& out) {
  call.verb = verb;
  const bool js = call.as_json;

  if (verb == "coprod" || verb == "prod" || verb == "antipode" ||
      verb == "counit" || verb == "pair")
    return run_algebra_verb(which, call, out);

  if (verb == "infiltrate") {
    Alphabet a = which.alphabet.empty() ? Alphabet::full() : Alphabet(which.alphabet);
    Word u = parse_single_word(words[0], a);
    Word v = parse_single_word(words[1], a);
    print_lc(out, infiltration(u, v, Rational::parse(which.q)), js);
    return 0;
  }
  if (verb == "bell") {
    print_value(out, bell(ints[0]).get_str(), js);
    return 0;
  }
  if (verb == "stirling") {
    print_value(out, stirling2(ints[0], ints[1]).get_str(), js);
    return 0;
  }
  if (verb == "bellpoly") {
    print_lc(out, bell_polynomial(ints[0]), js);
    return 0;
  }
  if (verb == "hadamard") {
    auto show_sym = [](const LinComb<Monomial>& c) { return format_lc(c); };
    auto show_rat = [](const Rational& c) { return c.str(); };
    if (!f_text.empty()) {
      EGFSeries<Rational> f(parse_rational_list(f_text));
      if (op == "exp") {
        print_series(out, egf_exp(f), js, show_rat);
        return 0;
      }
      if (g_text.empty()) throw UsageError("--op " + op + " needs --g");
      EGFSeries<Rational> g(parse_rational_list(g_text));
      if (op == "mul")
        print_series(out, egf_mul(f, g), js, show_rat);
      else if (op == "had")
        print_series(out, hadamard(f, g), js, show_rat);
      else
        throw UsageError("unknown --op: " + op);
      return 0;
    }
    if (route == "exp")
      print_series(out, hadamard_via_exp(order), js, show_sym);
    else if (route == "partitions")
      print_series(out, hadamard_via_partitions(order), js, show_sym);
    else if (route == "diagrams")
      print_series(out, hadamard_via_diagrams(order), js, show_sym);
    else
      throw UsageError("unknown --route: " + route);
    return 0;
  }
  if (verb == "diag-canon") {
    Diagram d = diag_canonical(parse_matrix_literal(words[0]));
    auto [alpha, beta] = spot_types(d.canon);
    if (js) {
      out << json{{"canonical", basis_str(d)},
                  {"alpha", multi_index_str(alpha)},
                  {"beta", multi_index_str(beta)}}
                 .dump()
          << "\n";
    } else {
      out << "canonical: " << basis_str(d) << "\n";
      out << "alpha: " << multi_index_str(alpha) << "\n";
      out << "beta: " << multi_index_str(beta) << "\n";
    }
    return 0;
  }
  if (verb == "diag-restrict") {
    std::vector<int> picks = parse_int_list(positions);
    if (word_mode) {
      Alphabet a = which.alphabet.empty() ? Alphabet::full() : Alphabet(which.alphabet);
      Word w = subword(parse_single_word(words[0], a), picks);
      print_value(out, basis_str(w), js);
      return 0;
    }
    LabelledDiagram d = ldiag_restrict(parse_matrix_literal(words[0]), picks);
    print_value(out, basis_str(d), js);
    return 0;
  }
  if (verb == "mult") {
    Diagram d = diag_canonical(parse_matrix_literal(words[0]));
    print_value(out, mult_of_diagram(d).get_str(), js);
    return 0;
  }
  if (verb == "check") return run_check(degree, call.as_json, out);
  throw UsageError("unknown verb: " + verb);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact calculator for products, coproducts, antipodes, and "
               "diagram expansions",
               "hopfcalc"};
  app.require_subcommand(1);

  AlgebraChoice which;
  VerbCall call;
  std::string format = "text";
  std::vector<std::string> words(2);
  std::vector<int> ints(2, 0);
  std::string positions, route = "exp", f_text, g_text, op = "had", lin_text;
  bool word_mode = false, tensor = false;
  int order = 5;
  int degree = env_max_degree(4);

  auto add_format = [&format](CLI::App* sc) {
    sc->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_algebra = [&which, &add_format](CLI::App* sc) {
    sc->add_option("--alg", which.alg, "algebra: free-q, shuffle-q, poly, trace, "
                                       "group, free-grouplike, ldiag, diag")
        ->check(CLI::IsMember({"free-q", "shuffle-q", "poly", "trace", "group",
                               "free-grouplike", "ldiag", "diag"}));
    sc->add_option("--q", which.q, "deformation parameter, e.g. 1/2");
    sc->add_option("--alphabet", which.alphabet, "allowed letters (default a..z)");
    sc->add_option("--theta", which.theta, "commuting pairs, e.g. ac,bd");
    sc->add_option("--group", which.group, "group name: C1..C48 or S1..S6");
    add_format(sc);
  };

  auto* coprod = app.add_subcommand("coprod", "coproduct of an expression");
  coprod->add_option("expr", words[0], "input expression")->required();
  add_algebra(coprod);

  auto* prod = app.add_subcommand("prod", "product, or r*X + s*Y with --lin");
  prod->add_option("x", words[0])->required();
  prod->add_option("y", words[1])->required();
  prod->add_option("--lin", lin_text, "two rationals r,s: compute r*X + s*Y");
  add_algebra(prod);

  auto* anti = app.add_subcommand("antipode", "antipode of an expression");
  anti->add_option("expr", words[0])->required();
  add_algebra(anti);

  auto* coun = app.add_subcommand("counit", "counit of an expression");
  coun->add_option("expr", words[0])->required();
  add_algebra(coun);

  auto* pair = app.add_subcommand("pair", "basis pairing, or tensor with --tensor");
  pair->add_option("x", words[0])->required();
  pair->add_option("y", words[1])->required();
  pair->add_flag("--tensor", tensor, "emit X (x) Y instead of the pairing");
  add_algebra(pair);

  auto* infl = app.add_subcommand("infiltrate", "q-infiltration product of two words");
  infl->add_option("u", words[0])->required();
  infl->add_option("v", words[1])->required();
  infl->add_option("--q", which.q, "deformation parameter");
  infl->add_option("--alphabet", which.alphabet, "allowed letters (default a..z)");
  add_format(infl);

  auto* bellv = app.add_subcommand("bell", "Bell number B(n)");
  bellv->add_option("n", ints[0])->required()->check(CLI::NonNegativeNumber);
  add_format(bellv);

  auto* stir = app.add_subcommand("stirling", "Stirling partition number S(n,k)");
  stir->add_option("n", ints[0])->required()->check(CLI::NonNegativeNumber);
  stir->add_option("k", ints[1])->required()->check(CLI::NonNegativeNumber);
  add_format(stir);

  auto* bpoly = app.add_subcommand("bellpoly", "Bell polynomial in y");
  bpoly->add_option("n", ints[0])->required()->check(CLI::NonNegativeNumber);
  add_format(bpoly);

  auto* had = app.add_subcommand(
      "hadamard", "coefficientwise EGF product; symbolic expansion routes");
  had->add_option("--order", order, "truncation order for the symbolic routes")
      ->check(CLI::Range(0, 6));
  had->add_option("--route", route, "exp, partitions, or diagrams")
      ->check(CLI::IsMember({"exp", "partitions", "diagrams"}));
  had->add_option("--f", f_text, "scalar EGF coefficients c0,c1,...");
  had->add_option("--g", g_text, "scalar EGF coefficients c0,c1,...");
  had->add_option("--op", op, "scalar operation: had, mul, or exp")
      ->check(CLI::IsMember({"had", "mul", "exp"}));
  add_format(had);

  auto* canon = app.add_subcommand("diag-canon",
                                   "canonical diagram class and spot types");
  canon->add_option("matrix", words[0], "labelled diagram, e.g. [[1,0],[0,2]]")
      ->required();
  add_format(canon);

  auto* restr = app.add_subcommand(
      "diag-restrict", "restrict a diagram to rows, or a word to positions");
  restr->add_option("object", words[0], "matrix literal, or a word with --word")
      ->required();
  restr->add_option("positions", positions, "1-based indices, e.g. 1,3")
      ->required();
  restr->add_flag("--word", word_mode, "treat the object as a word");
  restr->add_option("--alphabet", which.alphabet, "allowed letters (default a..z)");
  add_format(restr);

  auto* multv = app.add_subcommand("mult",
                                   "partition-pair multiplicity of a diagram");
  multv->add_option("matrix", words[0])->required();
  add_format(multv);

  auto* check = app.add_subcommand("check", "run the property suites");
  check->add_option("--degree", degree,
                    "corpus size bound (default HOPFCALC_MAX_DEGREE or 4)")
      ->check(CLI::Range(1, 12));
  add_format(check);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hopfcalc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  call.as_json = is_json(format);
  call.tensor = tensor;
  if (!lin_text.empty()) call.lin = lin_text;
  call.exprs = {words[0], words[1]};

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, which, call, words, ints, positions, word_mode, route,
                    order, f_text, g_text, op, degree, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const UnknownLetterError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const MalformedMatrixError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << e.name() << "\n";
    return 3;
  }
}

const std::map<std::string, std::vector<std::string>>& verb_operation_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"coprod", {"coproduct"}},
      {"prod", {"product", "lc_combine"}},
      {"antipode", {"antipode", "convolve"}},
      {"counit", {"counit"}},
      {"pair", {"lc_pair", "lc_tensor"}},
      {"infiltrate", {"infiltration"}},
      {"bell", {"bell"}},
      {"stirling", {"stirling2"}},
      {"bellpoly", {"bell_polynomial"}},
      {"hadamard",
       {"hadamard", "egf_mul", "egf_exp", "hadamard_via_partitions",
        "hadamard_via_diagrams"}},
      {"diag-canon", {"diag_canonical", "spot_types"}},
      {"diag-restrict", {"ldiag_restrict", "subword"}},
      {"mult", {"mult_of_diagram", "diagram_from_partitions", "set_partitions"}},
      {"check",
       {"check_bialgebra", "duality_check", "rep_apply", "rep_tensor",
        "trace_normal_form", "ldiag_concat"}},
  };
  return table;
}

std::vector<std::string> all_kernel_operations() {
  return {"lc_combine",     "lc_tensor",
          "lc_pair",        "convolve",
          "subword",        "trace_normal_form",
          "diagram_from_partitions", "ldiag_concat",
          "ldiag_restrict", "diag_canonical",
          "spot_types",     "product",
          "coproduct",      "counit",
          "antipode",       "infiltration",
          "duality_check",  "check_bialgebra",
          "rep_apply",      "rep_tensor",
          "set_partitions", "stirling2",
          "bell",           "bell_polynomial",
          "egf_mul",        "egf_exp",
          "hadamard",       "hadamard_via_partitions",
          "hadamard_via_diagrams", "mult_of_diagram"};
}

}  // namespace hopfcalc
