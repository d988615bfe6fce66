#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ck6/ck6.hpp"
#include "ck6/supermatrix.hpp"

namespace ck6 {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// expr := sum
// sum  := term (('+'|'-') term)*
// term := (rational '*')? atom
// atom := gen | '[' expr ',' expr ']' | '(' expr ')'
// gen  := 'e(' idx ',' idx ';' poly ')' | 'q(' sidx ',' sidx (';' poly)? ')'
//       | 'h(' idx ',' idx ';' poly ')' | 'vir(' poly ')' | 'central(' rational ')'
struct ExprAst {
  enum class Node { Gen, Bracket, Scale, Sum };
  Node node = Node::Gen;
  GeneratorSpec gen;
  Rational scale{1};
  std::vector<ExprAst> children;
};

ExprAst parse_expr(const std::string& input);
SuperSum eval_expr(const ExprAst& ast);
// parser-compatible text; parse_expr(print_expr(ast)) evaluates to the same
// element
std::string print_expr(const ExprAst& ast);

}  // namespace ck6
