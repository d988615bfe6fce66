#include "ck6/parser.hpp"

#include <cctype>
#include <sstream>

namespace ck6 {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, size_t at) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  size_t pos() const { return pos_; }

  Rational scan_unsigned_rational() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected number");
    BigInt num = scan_digits();
    BigInt den = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected denominator");
      den = scan_digits();
      if (den == 0) fail("zero denominator");
    }
    return make_rational(num, den);
  }

  Rational scan_rational() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Rational r = scan_unsigned_rational();
    return neg ? -r : r;
  }

  int scan_index() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '4')
      fail("expected index 1..4");
    return text_[pos_++] - '0';
  }

  LaurentPoly scan_polynomial() {
    skip_ws();
    size_t p = pos_;
    try {
      LaurentPoly poly = scan_poly(text_, &p);
      pos_ = p;
      return poly;
    } catch (const std::invalid_argument& e) {
      fail_at(e.what(), p);
    }
  }

 private:
  BigInt scan_digits() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits.push_back(text_[pos_++]);
    return BigInt(digits);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : sc_(text) {}

  ExprAst parse() {
    ExprAst e = parse_sum();
    if (!sc_.eof()) sc_.fail("trailing input");
    return e;
  }

 private:
  ExprAst parse_sum() {
    std::vector<ExprAst> terms;
    terms.push_back(parse_signed_term());
    for (;;) {
      if (sc_.accept('+')) {
        terms.push_back(parse_term());
      } else if (sc_.accept('-')) {
        ExprAst t = parse_term();
        ExprAst neg;
        neg.node = ExprAst::Node::Scale;
        neg.scale = -1;
        neg.children.push_back(std::move(t));
        terms.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms[0]);
    ExprAst s;
    s.node = ExprAst::Node::Sum;
    s.children = std::move(terms);
    return s;
  }

  ExprAst parse_signed_term() {
    if (sc_.accept('-')) {
      ExprAst neg;
      neg.node = ExprAst::Node::Scale;
      neg.scale = -1;
      neg.children.push_back(parse_term());
      return neg;
    }
    sc_.accept('+');
    return parse_term();
  }

  ExprAst parse_term() {
    if (std::isdigit(static_cast<unsigned char>(sc_.peek()))) {
      Rational r = sc_.scan_unsigned_rational();
      sc_.expect('*');
      ExprAst scaled;
      scaled.node = ExprAst::Node::Scale;
      scaled.scale = r;
      scaled.children.push_back(parse_atom());
      return scaled;
    }
    return parse_atom();
  }

  ExprAst parse_atom() {
    if (sc_.accept('[')) {
      ExprAst b;
      b.node = ExprAst::Node::Bracket;
      b.children.push_back(parse_sum());
      sc_.expect(',');
      b.children.push_back(parse_sum());
      sc_.expect(']');
      return b;
    }
    if (sc_.accept('(')) {
      ExprAst inner = parse_sum();
      sc_.expect(')');
      return inner;
    }
    return parse_gen();
  }

  ExprAst parse_gen() {
    const size_t at = sc_.pos();
    ExprAst g;
    g.node = ExprAst::Node::Gen;
    try {
      if (sc_.accept_word("vir")) {
        sc_.expect('(');
        LaurentPoly a = sc_.scan_polynomial();
        sc_.expect(')');
        g.gen = GeneratorSpec::Vir(a);
        return g;
      }
      if (sc_.accept_word("central")) {
        sc_.expect('(');
        Rational c = sc_.scan_rational();
        sc_.expect(')');
        g.gen = GeneratorSpec::Central(c);
        return g;
      }
      if (sc_.accept_word("e(") || sc_.accept_word("e (")) {
        int i = sc_.scan_index();
        sc_.expect(',');
        int j = sc_.scan_index();
        sc_.expect(';');
        LaurentPoly a = sc_.scan_polynomial();
        sc_.expect(')');
        g.gen = GeneratorSpec::E(i, j, a);
        return g;
      }
      if (sc_.accept_word("h(") || sc_.accept_word("h (")) {
        int i = sc_.scan_index();
        sc_.expect(',');
        int j = sc_.scan_index();
        sc_.expect(';');
        LaurentPoly a = sc_.scan_polynomial();
        sc_.expect(')');
        g.gen = GeneratorSpec::H(i, j, a);
        return g;
      }
      if (sc_.accept_word("q(") || sc_.accept_word("q (")) {
        int s1 = scan_sign();
        int i = sc_.scan_index();
        sc_.expect(',');
        int s2 = scan_sign();
        int j = sc_.scan_index();
        if (s1 != s2) sc_.fail_at("q indices must carry equal signs (not a root)", at);
        LaurentPoly a = LaurentPoly::one();
        if (sc_.accept(';')) a = sc_.scan_polynomial();
        sc_.expect(')');
        g.gen = s1 > 0 ? GeneratorSpec::Qpos(i, j, a) : GeneratorSpec::Qneg(i, j, a);
        return g;
      }
    } catch (const std::invalid_argument& e) {
      sc_.fail_at(e.what(), at);  // semantic errors from GeneratorSpec::validate
    }
    sc_.fail("expected generator, bracket or '('");
  }

  int scan_sign() {
    if (sc_.accept('+')) return 1;
    if (sc_.accept('-')) return -1;
    sc_.fail("expected '+' or '-'");
  }

  Scanner sc_;
};

}  // namespace

ExprAst parse_expr(const std::string& input) { return Parser(input).parse(); }

SuperSum eval_expr(const ExprAst& ast) {
  switch (ast.node) {
    case ExprAst::Node::Gen:
      return SuperSum::of(make_generator(ast.gen));
    case ExprAst::Node::Bracket:
      return superbracket(eval_expr(ast.children[0]), eval_expr(ast.children[1]));
    case ExprAst::Node::Scale:
      return eval_expr(ast.children[0]).scaled(ast.scale);
    case ExprAst::Node::Sum: {
      SuperSum out;
      for (const ExprAst& child : ast.children) out = out + eval_expr(child);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void print_node(const ExprAst& ast, std::ostream& out, bool as_term) {
  switch (ast.node) {
    case ExprAst::Node::Gen:
      out << ast.gen.str();
      return;
    case ExprAst::Node::Bracket:
      out << "[";
      print_node(ast.children[0], out, false);
      out << ", ";
      print_node(ast.children[1], out, false);
      out << "]";
      return;
    case ExprAst::Node::Scale: {
      Rational s = ast.scale;
      if (s < 0) {
        out << "-";
        s = -s;
      }
      if (s == 1) {
        print_node(ast.children[0], out, true);
      } else {
        out << to_string(s) << " * ";
        print_node(ast.children[0], out, true);
      }
      return;
    }
    case ExprAst::Node::Sum: {
      if (as_term) out << "(";
      bool first = true;
      for (const ExprAst& child : ast.children) {
        if (child.node == ExprAst::Node::Scale && child.scale < 0) {
          out << (first ? "-" : " - ");
          Rational mag = -child.scale;
          if (mag == 1) {
            print_node(child.children[0], out, true);
          } else {
            out << to_string(mag) << " * ";
            print_node(child.children[0], out, true);
          }
        } else {
          if (!first) out << " + ";
          print_node(child, out, true);
        }
        first = false;
      }
      if (as_term) out << ")";
      return;
    }
  }
}

}  // namespace

std::string print_expr(const ExprAst& ast) {
  std::ostringstream out;
  print_node(ast, out, false);
  return out.str();
}

}  // namespace ck6
