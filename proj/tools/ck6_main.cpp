#include <CLI11.hpp>
#include <iostream>

#include "ck6/classifier.hpp"
#include "ck6/parser.hpp"
#include "ck6/verify.hpp"

namespace {

using namespace ck6;

Rational parse_cli_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::array<long, 3> parse_labels(const std::string& text) {
  std::array<long, 3> out{};
  size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    size_t next = k < 2 ? text.find(',', pos) : text.size();
    if (next == std::string::npos) throw std::invalid_argument("labels must be a1,a2,a3");
    out[k] = std::stol(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

void print_element(const SuperSum& value) {
  if (value.is_zero()) {
    std::cout << "0 (zero element)\n";
    return;
  }
  auto show = [](const SuperMatrix& part) {
    std::cout << part.str();
    if (auto name = recognize_element(part)) std::cout << "recognized: " << *name << "\n";
    if (auto r = find_root_space(part))
      std::cout << "root: " << r->str() << " (f = " << f_value(*r) << ")\n";
    else
      std::cout << "root: not homogeneous\n";
  };
  if (auto homog = value.homogeneous()) {
    show(*homog);
  } else {
    std::cout << "even part:\n";
    show(value.even);
    std::cout << "odd part:\n";
    show(value.odd);
  }
}

int cmd_bracket(const std::string& expr_text) {
  ExprAst ast = parse_expr(expr_text);
  print_element(eval_expr(ast));
  return 0;
}

int cmd_verify(const std::string& selection) {
  std::vector<CheckResult> results = run_verify(selection);
  for (const auto& r : results) std::cout << report_line(r) << "\n";
  long unexpected = 0;
  for (const auto& r : results)
    if (!r.as_expected()) ++unexpected;
  std::cout << results.size() << " checks; " << unexpected << " with unexpected verdict\n";
  return unexpected == 0 ? 0 : 1;
}

int cmd_classify(const std::string& labels_text, const std::string& beta_text,
                 const std::string& alpha_text) {
  HWParams p;
  p.labels = parse_labels(labels_text);
  p.beta = parse_cli_rational(beta_text);
  p.alpha = parse_cli_rational(alpha_text);
  FiniteTypeVerdict v = is_finite_type(p);
  std::cout << (v.finite ? "FINITE " : "INFINITE ") << clause_name(v.clause) << " -- "
            << v.explanation << "\n";
  return 0;
}

int cmd_roots() {
  std::cout << "22 roots; f(w1..w4) = (5, -3, 2, -4); positive means f > 0\n";
  for (const RootVector& r : all_roots()) {
    std::cout << r.str() << "  parity=" << (is_odd_root(r) ? "odd" : "even")
              << "  f=" << f_value(r) << (f_value(r) > 0 ? "  positive" : "") << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& root_text) {
  RootVector r = parse_root(root_text);
  std::cout << "root " << r.str() << ", f = " << f_value(r) << "\n";
  auto decs = positive_decompositions(r);
  if (decs.empty()) {
    std::cout << "no decomposition into >= 2 positive roots\n";
    return 0;
  }
  for (const auto& d : decs) {
    std::cout << r.str() << " =";
    for (size_t k = 0; k < d.size(); ++k) std::cout << (k ? " + (" : " (") << d[k].str() << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact CK6 bracket engine and classifier"};
  app.require_subcommand(1);

  std::string expr_text, selection, labels_text, root_text;
  std::string beta_text = "0", alpha_text = "0";

  CLI::App* bracket = app.add_subcommand("bracket", "evaluate a bracket expression");
  bracket->add_option("expr", expr_text, "expression, e.g. \"[e(3,4;1), q(+1,+4)]\"")->required();

  CLI::App* verify = app.add_subcommand("verify", "run identity and calibration checks");
  verify->add_option("selection", selection, "check id glob, or 'all'")->required();

  CLI::App* classify = app.add_subcommand("classify", "finite-type decision for V(labels, beta, alpha)");
  classify->add_option("labels", labels_text, "dominant labels a1,a2,a3")->required();
  classify->add_option("--beta", beta_text, "rational beta")->required();
  classify->add_option("--alpha", alpha_text, "rational alpha (default 0)");

  CLI::App* roots = app.add_subcommand("roots", "list the 22 roots with parity and f-values");
  CLI::App* decompose = app.add_subcommand("decompose", "positive-root decompositions of a root");
  decompose->add_option("root", root_text, "root, e.g. w1+w3 or -2w4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(expr_text);
    if (verify->parsed()) return cmd_verify(selection);
    if (classify->parsed()) return cmd_classify(labels_text, beta_text, alpha_text);
    if (roots->parsed()) return cmd_roots();
    if (decompose->parsed()) return cmd_decompose(root_text);
  } catch (const ck6::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
