#include <doctest.h>

#include "ck6/parser.hpp"

using namespace ck6;

TEST_CASE("grammar instances") {
  ExprAst e = parse_expr("[e(4,1; t), q(+3,+1)]");
  REQUIRE(e.node == ExprAst::Node::Bracket);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].gen.kind == GeneratorSpec::Kind::E);
  CHECK(e.children[0].gen.i == 4);
  CHECK(e.children[0].gen.j == 1);
  CHECK(e.children[0].gen.coeff == LaurentPoly::t(1));
  CHECK(e.children[1].gen.kind == GeneratorSpec::Kind::Q);
  CHECK(e.children[1].gen.q_positive);
  CHECK(e.children[1].gen.i == 3);
  CHECK(e.children[1].gen.j == 1);
  CHECK(e.children[1].gen.coeff == LaurentPoly::one());  // default coefficient

  ExprAst v = parse_expr("vir(t^2 - 1)");
  CHECK(v.node == ExprAst::Node::Gen);
  CHECK(v.gen.kind == GeneratorSpec::Kind::Vir);
  CHECK(v.gen.coeff == LaurentPoly::t(2) - LaurentPoly::one());

  ExprAst s = parse_expr("2 * e(1,2; t) - [q(-1,-1; t), h(2,3; 1)] + central(1/2)");
  CHECK(s.node == ExprAst::Node::Sum);
  CHECK(s.children.size() == 3);
}

TEST_CASE("whitespace insensitivity") {
  SuperSum a = eval_expr(parse_expr("[e(4,1; t), q(+3,+1)]"));
  SuperSum b = eval_expr(parse_expr(" [ e( 4 , 1 ; t ) ,q(+3,+1) ] "));
  CHECK(a == b);
}

TEST_CASE("semantic and syntax errors carry positions") {
  CHECK_THROWS_AS(parse_expr("e(2,2; t)"), ParseError);
  try {
    parse_expr("e(2,2; t)");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 1);
  }
  CHECK_THROWS_AS(parse_expr("q(+1,-2; t)"), ParseError);  // mixed signs: not a root
  CHECK_THROWS_AS(parse_expr("e(5,1; t)"), ParseError);
  CHECK_THROWS_AS(parse_expr("[e(1,2; t), ]"), ParseError);
  CHECK_THROWS_AS(parse_expr("e(1,2; t) extra"), ParseError);
  CHECK_THROWS_AS(parse_expr("3 e(1,2; t)"), ParseError);  // missing '*'
  try {
    parse_expr("[e(1,2; t),\n e(3,3; 1)]");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 2);
  }
}

TEST_CASE("q sign semantics") {
  CHECK(eval_expr(parse_expr("q(+4,+1)")) == eval_expr(parse_expr("-q(+1,+4)")));
  CHECK(eval_expr(parse_expr("q(-4,-1; t)")) == eval_expr(parse_expr("q(-1,-4; t)")));
  CHECK_NOTHROW(parse_expr("q(-2,-2; t)"));
  CHECK_THROWS_AS(parse_expr("q(+2,+2)"), ParseError);
}

TEST_CASE("print round-trips on generator literals") {
  const char* inputs[] = {
      "e(1,2; t)",
      "e(4,1; 3t^2 - 1/2t^-1)",
      "h(2,4; t^-3)",
      "q(+3,+1)",
      "q(+1,+4; 2t)",
      "q(-2,-2; t + 1)",
      "vir(t^2 - 1)",
      "central(3/4)",
      "[e(4,1; t), q(+3,+1)]",
      "2 * e(1,2; t) - 1/3 * vir(t)",
      "-e(1,2; t) + q(+1,+2)",
  };
  for (const char* text : inputs) {
    ExprAst ast = parse_expr(text);
    std::string printed = print_expr(ast);
    ExprAst reparsed = parse_expr(printed);
    CHECK(eval_expr(reparsed) == eval_expr(ast));
    CHECK(print_expr(reparsed) == printed);  // printing is a fixed point
  }
}

TEST_CASE("evaluation matches the construction") {
  CHECK(eval_expr(parse_expr("[e(3,4;1), q(+1,+4)]")) ==
        SuperSum::of(-make_generator(GeneratorSpec::Qpos(3, 1))));
  CHECK(eval_expr(parse_expr("[[e(4,1; t), q(+3,+1)], q(+2,+1)]")) ==
        SuperSum::of(make_generator(GeneratorSpec::Vir(LaurentPoly::t(1)))));
  CHECK(eval_expr(parse_expr("vir(1)")) ==
        SuperSum::of(make_generator(GeneratorSpec::Vir(LaurentPoly::one()))));
  // parenthesised grouping
  CHECK(eval_expr(parse_expr("2 * (e(1,2; t) + e(1,2; t))")) ==
        SuperSum::of(make_generator(GeneratorSpec::E(1, 2, LaurentPoly::monomial(1, 4)))));
}
