#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ck6/ck6.hpp"

namespace ck6 {

// Coefficient slot of a generator inside an identity: a scalar times a
// literal polynomial times a product of (parameter, derivative-order)
// factors. Parameters range over monomials t^m in a declared window.
struct CoeffExpr {
  Rational scalar{1};
  LaurentPoly literal{LaurentPoly::one()};
  std::vector<std::pair<int, int>> factors;  // (parameter index, derivative order)

  static CoeffExpr lit(const LaurentPoly& p) {
    CoeffExpr c;
    c.literal = p;
    return c;
  }
  static CoeffExpr one() { return lit(LaurentPoly::one()); }
  static CoeffExpr param(int p, int deriv = 0) {
    CoeffExpr c;
    c.factors.push_back({p, deriv});
    return c;
  }
  CoeffExpr times(int p, int deriv = 0) const {
    CoeffExpr c = *this;
    c.factors.push_back({p, deriv});
    return c;
  }

  LaurentPoly eval(const std::vector<LaurentPoly>& params) const;
  int max_param() const;
};

// Expression tree over generators with bracket, associative-product, sum and
// scalar nodes.
class IdExpr {
 public:
  enum class Node { Gen, Bracket, Product, Sum, Scale, Custom };

  IdExpr() = default;  // the empty sum, i.e. zero

  static IdExpr E(int i, int j, CoeffExpr c);
  static IdExpr H(int i, int j, CoeffExpr c);
  static IdExpr Qpos(int i, int j, CoeffExpr c = CoeffExpr::one());
  static IdExpr Qneg(int i, int j, CoeffExpr c);
  static IdExpr Vir(CoeffExpr c);
  static IdExpr bracket(IdExpr a, IdExpr b);
  static IdExpr product(IdExpr a, IdExpr b);
  static IdExpr sum(std::vector<IdExpr> kids);
  static IdExpr scaled(const Rational& s, IdExpr a);
  static IdExpr zero() { return sum({}); }
  static IdExpr custom(std::function<SuperSum(const std::vector<LaurentPoly>&)> fn);

  SuperSum eval(const std::vector<LaurentPoly>& params) const;
  int max_param() const;

 private:
  Node node_ = Node::Sum;
  GeneratorSpec::Kind gkind_ = GeneratorSpec::Kind::E;
  int i_ = 0, j_ = 0;
  bool qpos_ = false;
  CoeffExpr coeff_;
  Rational scale_{1};
  std::function<SuperSum(const std::vector<LaurentPoly>&)> custom_;
  std::vector<IdExpr> kids_;
};

struct IdentityCheck {
  std::string id;
  std::string statement;  // human-readable form of lhs = rhs
  IdExpr lhs, rhs;
  std::vector<std::pair<int, int>> windows;  // inclusive exponent window per parameter
  bool expect_pass = true;  // asWritten variants of documented slips expect FAIL
  std::string note;
};

struct CheckResult {
  std::string id;
  bool passed = false;
  bool expected_pass = true;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // lexicographically smallest failing assignment
  std::string note;

  bool as_expected() const { return passed == expected_pass; }
};

// Evaluates lhs - rhs over every monomial assignment in the windows; passes
// iff identically zero. Throws std::invalid_argument on a tree that
// references an undeclared parameter.
CheckResult run_check(const IdentityCheck& check);

// The deterministic list of quoted bracket identities. Ids are L<lemma>-* /
// S<section>-* keys of the source construction.
const std::vector<IdentityCheck>& builtin_catalog();

// `<id> <PASS|FAIL> <detail>`
std::string report_line(const CheckResult& result);

struct SweepResult {
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;
  double seconds = 0.0;
};

// Graded Jacobi over all ordered homogeneous triples of generators from the
// E/Q/H/Vir families with monomial coefficients t^m, m in [mmin, mmax].
// threads = 0 picks the hardware count.
SweepResult jacobi_sweep(int mmin, int mmax, int threads = 0);

// All generator pairs: superbracket lands in the root space of the canonical
// sum root (grading_check) and f is additive on it.
SweepResult grading_sweep(int mmin, int mmax);

// the generator family used by the sweeps
std::vector<GeneratorSpec> sweep_family(int mmin, int mmax);

}  // namespace ck6
