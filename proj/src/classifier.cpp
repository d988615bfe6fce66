#include "ck6/classifier.hpp"

namespace ck6 {

std::string clause_name(FiniteClause c) {
  switch (c) {
    case FiniteClause::A1_GE_2:
      return "A1-GE-2";
    case FiniteClause::A1_EQ_1_BETA_MINUS_1:
      return "A1-EQ-1-BETA-MINUS-1";
    case FiniteClause::NOT_DOMINANT:
      return "NOT-DOMINANT";
    case FiniteClause::A1_EQ_1_FAIL:
      return "A1-EQ-1-FAIL";
    case FiniteClause::A1_EQ_0_EXCLUDED:
      return "A1-EQ-0-EXCLUDED";
  }
  return "?";
}

FiniteTypeVerdict is_finite_type(const HWParams& p) {
  const auto [a1, a2, a3] = p.labels;
  if (a1 < 0 || a2 < 0 || a3 < 0)
    return {false, FiniteClause::NOT_DOMINANT,
            "labels must be nonnegative integers (integral dominant weight)"};
  if (a1 >= 2)
    return {true, FiniteClause::A1_GE_2,
            "clause (1): <lambda, h_{w1-w3}> >= 2, any beta and alpha"};
  if (a1 == 1) {
    if (a2 == 0 && p.beta == -1)
      return {true, FiniteClause::A1_EQ_1_BETA_MINUS_1,
              "clause (2): <lambda, h_{w1-w3}> = 1, <lambda, h_{w3-w2}> = 0, beta = -1"};
    return {false, FiniteClause::A1_EQ_1_FAIL,
            "clause (2) requires <lambda, h_{w3-w2}> = 0 and beta = -1"};
  }
  return {false, FiniteClause::A1_EQ_0_EXCLUDED,
          "<lambda, h_{w1-w3}> = 0 forces the trivial 1-dimensional module, "
          "not counted as irreducible"};
}

std::string JordanFamily::str() const {
  std::string out = "V(" + weight.str() + ", ";
  out += beta ? to_string(*beta) : std::string("beta");
  out += ", alpha)";
  return out;
}

std::vector<JordanFamily> jordan_unital_families() {
  return {
      {RootVector::w(1) + RootVector::w(1), std::nullopt},
      {RootVector::w(1) - RootVector::w(4), Rational(-1)},
  };
}

std::string verdict_name(OneSidedVerdict v) {
  switch (v) {
    case OneSidedVerdict::irreducible:
      return "irreducible";
    case OneSidedVerdict::indecomposable:
      return "indecomposable";
    case OneSidedVerdict::decomposable:
      return "decomposable";
  }
  return "?";
}

OneSidedVerdict jordan_one_sided_classify(int dim, const Rational& alpha, JordanShape shape) {
  (void)alpha;  // the verdict is alpha-independent
  if (dim < 1) throw std::invalid_argument("jordan_one_sided_classify: dim must be >= 1");
  if (dim == 1) return OneSidedVerdict::irreducible;
  return shape == JordanShape::block ? OneSidedVerdict::indecomposable
                                     : OneSidedVerdict::decomposable;
}

}  // namespace ck6
