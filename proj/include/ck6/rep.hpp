#pragma once

#include <array>
#include <map>
#include <variant>

#include "ck6/ck6.hpp"
#include "ck6/identity.hpp"

namespace ck6 {

// (lambda labels, beta, alpha): the data parametrizing the L0-module
// V(lambda, beta, alpha) on Laurent polynomials.
struct HWParams {
  std::array<long, 3> labels{0, 0, 0};  // pairings with h_{w1-w3}, h_{w3-w2}, h_{w2-w4}
  Rational beta, alpha;
};

struct VirActor {
  LaurentPoly a;
};
struct HActor {
  int i = 1, j = 2;
  LaurentPoly a;
};
using L0Actor = std::variant<VirActor, HActor>;

// (h (x) a) b = <lambda, h> ab;  Vir(a) b = -ab' + beta a'b + alpha ab
LaurentPoly v_action(const HWParams& p, const L0Actor& actor, const LaurentPoly& b);

using ColumnVector = std::array<LaurentPoly, 8>;

// Left action of M8(W) on 8-columns of Laurent polynomials: each entry acts
// tautologically (sum a_i d^i applied as sum a_i b^(i)); this is the unique
// derivative sign satisfying the associative module law (CAL-col-d).
ColumnVector column_action(const SuperMatrix& x, const ColumnVector& v);

// The element realizing the abstract Vir(a) of the module formulas on the
// column module: -make_generator(Vir(a)). The sign is calibrated
// (CAL-vir-norm): with +Vir the leading -ab' term cannot be matched.
SuperMatrix module_vir(const LaurentPoly& a);

struct ColumnParams {
  RootVector weight;
  Rational beta, alpha;
};
// Identifies (highest weight, beta, alpha) of the column module by acting
// with Cartan elements and module_vir(t^m); throws when no consistent
// (beta, alpha) fits.
ColumnParams column_identify_params();

// Filtration-quotient realization: b |-> b v d^beta with v^2 = 0 and the
// calibrated twist v' = -alpha v; acts with the Virasoro element by the
// commutator with -(a d), projects modulo the layer below beta, and returns
// the coefficient of v d^beta. Must equal v_action's Vir formula.
LaurentPoly quotient_action(const Rational& beta, const Rational& alpha, const LaurentPoly& a,
                            const LaurentPoly& b, int depth);

// Laurent polynomial in two variables t1, t2.
class TwoVarPoly {
 public:
  TwoVarPoly() = default;
  static TwoVarPoly monomial(int m1, int m2, const Rational& c = Rational(1)) {
    TwoVarPoly p;
    if (c != 0) p.coeffs_[{m1, m2}] = c;
    return p;
  }
  static TwoVarPoly embed_t1(const LaurentPoly& a);  // a(t1)

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeffs_; }

  TwoVarPoly operator+(const TwoVarPoly& o) const;
  TwoVarPoly operator-() const;
  TwoVarPoly operator-(const TwoVarPoly& o) const { return *this + (-o); }
  TwoVarPoly operator*(const TwoVarPoly& o) const;
  TwoVarPoly scaled(const Rational& s) const;
  TwoVarPoly d1() const;  // d/dt1
  TwoVarPoly d2() const;  // d/dt2
  LaurentPoly substitute_equal() const;  // t2 -> t1

  bool operator==(const TwoVarPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<std::pair<int, int>, Rational> coeffs_;
};

// Two-factor version of the quotient realization, with v = v1 v2 and the
// diagonal Virasoro element a(t1) acting through the derivation of both
// variables; the result is reduced modulo (t1 - t2) by substitution and must
// match v_action for (beta1 + beta2, alpha1 + alpha2).
LaurentPoly tensor_quotient_action(const Rational& beta1, const Rational& alpha1,
                                   const Rational& beta2, const Rational& alpha2,
                                   const LaurentPoly& actor, const TwoVarPoly& b, int depth);

// n-dimensional cyclic module where d acts as alpha * identity + one-step
// nilpotent shift (d u_k = alpha u_k + u_(k-1), u_(-1) = 0).
struct JordanBlockModule {
  int dim = 1;
  Rational alpha;
};

// element of N[t,t^-1]^4: per slot, a finite map exponent -> N-coordinates
struct NVector {
  int dim = 1;
  std::array<std::map<int, std::vector<Rational>>, 4> slots;

  static NVector basis(const JordanBlockModule& n, int slot, int exponent, int index);
  bool is_zero() const;
  bool operator==(const NVector& o) const;
  NVector operator-(const NVector& o) const;
};

using Mat4Weyl = std::array<std::array<WeylElement, 4>, 4>;
Mat4Weyl mat4_scalar(const WeylElement& w);

// t shifts exponents; d acts as (d on N) + d/dt on the t-part, extended
// entrywise to 4-columns.
NVector one_sided_action(const Mat4Weyl& x, const NVector& v, const JordanBlockModule& n);

// Calibration checks exposed to the verify report (CAL-* ids).
struct CalCheck {
  std::string id;
  std::function<CheckResult()> run;
};
std::vector<CalCheck> calibration_checks();

}  // namespace ck6
