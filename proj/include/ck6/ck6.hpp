#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ck6/supermatrix.hpp"

namespace ck6 {

// Element of the grading group sum(Z w_i) / Z(w1+w2+w3+w4), canonicalized so
// that min coordinate = 0. This makes -w1-w2 and w3+w4 literally equal.
struct RootVector {
  std::array<int, 4> c{0, 0, 0, 0};

  RootVector() = default;
  static RootVector of(int c1, int c2, int c3, int c4) {
    RootVector r;
    r.c = {c1, c2, c3, c4};
    int lo = std::min(std::min(r.c[0], r.c[1]), std::min(r.c[2], r.c[3]));
    for (int& v : r.c) v -= lo;
    return r;
  }
  static RootVector w(int i);  // basis weight w_i, 1..4

  friend RootVector operator+(const RootVector& a, const RootVector& b) {
    return of(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
  }
  friend RootVector operator-(const RootVector& a, const RootVector& b) {
    return of(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]);
  }
  bool operator==(const RootVector& other) const { return c == other.c; }
  bool operator<(const RootVector& other) const { return c < other.c; }
  bool is_zero() const { return c == std::array<int, 4>{0, 0, 0, 0}; }

  std::string str() const;
};

// f(w1..w4) = (5, -3, 2, -4); vanishes exactly on the quotient relation
int f_value(const RootVector& r);

// the 22 roots (12 even w_i - w_j, 6 odd w_i + w_j, 4 odd -2w_i)
const std::vector<RootVector>& all_roots();
// the 11 roots with f > 0, ordered by (f, coords)
const std::vector<RootVector>& positive_roots();
bool is_root(const RootVector& r);
bool is_odd_root(const RootVector& r);
// text forms "w1+w2", "w3-w2", "-2w4", "-w1-w3", "0"
RootVector parse_root(const std::string& text);

// Cartan element diag(a1..a4, -a1..-a4) tensored with a coefficient in R.
struct CartanElement {
  std::array<Rational, 4> diag;
  LaurentPoly coeff;

  CartanElement(std::array<Rational, 4> d, LaurentPoly a = LaurentPoly::one());
};

// h_{w_i - w_j} (x) a
CartanElement cartan_h(int i, int j, const LaurentPoly& a = LaurentPoly::one());

// <sum c_i w_i, h> = sum c_i a_i; well-defined on the quotient since the
// diagonal is traceless
Rational cartan_pairing(const RootVector& r, const CartanElement& h);

// dominant labels (a1,a2,a3) = pairings with h_{w1-w3}, h_{w3-w2}, h_{w2-w4}
std::array<long, 3> weight_to_labels(const RootVector& weight);
RootVector labels_to_weight(long a1, long a2, long a3);

using Mat4Rat = std::array<std::array<Rational, 4>, 4>;

// The involution k -> k' - k'' for the splitting of skew 4x4 matrices into
// two simple ideals. The labeling of the ideals is fixed by calibration
// (phi_sign); throws on non-skew input.
Mat4Rat phi(const Mat4Rat& k);
// +1 or -1 (times the Hodge pairing A12<->A34, A13<->-A24, A14<->A23),
// resolved by brute force against the quoted bracket identities and the
// explicit Vir matrix; cached after the first call.
int phi_sign();

struct GeneratorSpec {
  enum class Kind { E, Q, H, Vir, Central };

  Kind kind = Kind::E;
  int i = 0, j = 0;         // index pair for E/H/Q (order preserved)
  bool q_positive = false;  // Q: +w_i+w_j versus -w_i-w_j
  LaurentPoly coeff;        // coefficient in R (E/H/Q/Vir)
  Rational central_coeff;   // Central

  static GeneratorSpec E(int i, int j, const LaurentPoly& a);
  static GeneratorSpec H(int i, int j, const LaurentPoly& a);
  // q_{w_i + w_j}; the index order carries a sign (e_ij - e_ji). With a
  // non-constant coefficient this is a homogeneous element of the ambient
  // matrix algebra (used by the sweeps), not of the subalgebra itself.
  static GeneratorSpec Qpos(int i, int j, const LaurentPoly& a = LaurentPoly::one());
  // q_{-w_i - w_j}; i == j gives the -2w_i generator
  static GeneratorSpec Qneg(int i, int j, const LaurentPoly& a);
  static GeneratorSpec Vir(const LaurentPoly& a);
  static GeneratorSpec Central(const Rational& c);

  void validate() const;  // throws std::invalid_argument on bad indices
  std::string str() const;
};

// the literal 8x8 matrices of the construction
SuperMatrix make_generator(const GeneratorSpec& spec);
// Vir(a) assembled from its diagonal display e11(da) + e22(ad) + ... ;
// an independent construction route from make_generator(Vir(a)), which uses
// the I8(ad) - correction form
SuperMatrix vir_via_diag_display(const LaurentPoly& a);

RootVector root_of(const GeneratorSpec& spec);  // zero class for H/Vir/Central
Parity parity_of(const GeneratorSpec& spec);

// All multisets {alpha_1..alpha_k}, k >= 2, of positive roots summing to r
// in the quotient lattice. Each multiset is sorted; the list is sorted.
std::vector<std::vector<RootVector>> positive_decompositions(const RootVector& r);

// [h, x] = <r, h> x for the spanning Cartan elements h12, h23, h34
bool grading_check(const SuperMatrix& x, const RootVector& r);
// the unique root class r (including zero) with grading_check(x, r); nullopt
// when x is not homogeneous under the Cartan action
std::optional<RootVector> find_root_space(const SuperMatrix& x);

// Writes x in the root space w_i + w_j as [q_{w_i+w_k}, e_{w_j-w_k}(b)] +
// q_{-w_k-w_l}(c) with k the smallest admissible index; nullopt when x does
// not decompose this way.
std::optional<std::pair<LaurentPoly, LaurentPoly>> span_decompose(const SuperMatrix& x, int i,
                                                                  int j);

// Matches x against the generator shapes (e/h/q/vir/central) and returns the
// parser-compatible text when one fits.
std::optional<std::string> recognize_element(const SuperMatrix& x);

}  // namespace ck6
