#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ck6/rep.hpp"

namespace ck6 {

enum class FiniteClause {
  A1_GE_2,
  A1_EQ_1_BETA_MINUS_1,
  NOT_DOMINANT,
  A1_EQ_1_FAIL,
  A1_EQ_0_EXCLUDED,
};

std::string clause_name(FiniteClause c);

struct FiniteTypeVerdict {
  bool finite = false;
  FiniteClause clause = FiniteClause::NOT_DOMINANT;
  std::string explanation;
};

// Finite type iff a1 >= 2 (any beta, alpha), or a1 = 1, a2 = 0 and
// beta = -1 (any alpha). a1 = 0 is excluded (the trivial 1-dimensional
// module); negative labels are rejected as non-dominant. alpha never enters
// a condition.
FiniteTypeVerdict is_finite_type(const HWParams& p);

struct JordanFamily {
  RootVector weight;
  std::optional<Rational> beta;  // nullopt: free
  // alpha is free in both families
  std::string str() const;
};

// the two families of unital one-parameter/two-parameter modules
std::vector<JordanFamily> jordan_unital_families();

enum class JordanShape { block, diagonal };
enum class OneSidedVerdict { irreducible, indecomposable, decomposable };

std::string verdict_name(OneSidedVerdict v);

// dim 1: irreducible; dim > 1 as a single block: indecomposable; diagonal
// (split) d-action in dim > 1: decomposable
OneSidedVerdict jordan_one_sided_classify(int dim, const Rational& alpha,
                                          JordanShape shape = JordanShape::block);

}  // namespace ck6
