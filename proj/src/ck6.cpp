#include "ck6/ck6.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace ck6 {

namespace {

constexpr std::array<int, 4> kF = {5, -3, 2, -4};

void check_index(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("index out of range 1..4");
}

}  // namespace

RootVector RootVector::w(int i) {
  check_index(i);
  std::array<int, 4> c{0, 0, 0, 0};
  c[i - 1] = 1;
  return of(c[0], c[1], c[2], c[3]);
}

int f_value(const RootVector& r) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += kF[i] * r.c[i];
  return s;
}

std::string RootVector::str() const {
  if (is_zero()) return "0";
  // prefer the standard names: w_i - w_j, w_i + w_j, -w_i - w_j, -2w_i
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i != j && *this == RootVector::w(i) - RootVector::w(j))
        return "w" + std::to_string(i) + "-w" + std::to_string(j);
      if (i < j && *this == RootVector::w(i) + RootVector::w(j))
        return "w" + std::to_string(i) + "+w" + std::to_string(j);
    }
  for (int i = 1; i <= 4; ++i) {
    if (*this == RootVector::of(0, 0, 0, 0) - RootVector::w(i) - RootVector::w(i))
      return "-2w" + std::to_string(i);
  }
  std::ostringstream out;  // general fallback: canonical coordinates
  out << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return out.str();
}

const std::vector<RootVector>& all_roots() {
  static const std::vector<RootVector> roots = [] {
    std::vector<RootVector> rs;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (i != j) rs.push_back(RootVector::w(i) - RootVector::w(j));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) rs.push_back(RootVector::w(i) + RootVector::w(j));
    for (int i = 1; i <= 4; ++i)
      rs.push_back(RootVector() - RootVector::w(i) - RootVector::w(i));
    return rs;
  }();
  return roots;
}

const std::vector<RootVector>& positive_roots() {
  static const std::vector<RootVector> roots = [] {
    std::vector<RootVector> rs;
    for (const RootVector& r : all_roots())
      if (f_value(r) > 0) rs.push_back(r);
    std::sort(rs.begin(), rs.end(), [](const RootVector& a, const RootVector& b) {
      return std::make_pair(f_value(a), a.c) < std::make_pair(f_value(b), b.c);
    });
    return rs;
  }();
  return roots;
}

bool is_root(const RootVector& r) {
  const auto& rs = all_roots();
  return std::find(rs.begin(), rs.end(), r) != rs.end();
}

bool is_odd_root(const RootVector& r) {
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (r == RootVector::w(i) + RootVector::w(j)) return true;
  for (int i = 1; i <= 4; ++i)
    if (r == RootVector() - RootVector::w(i) - RootVector::w(i)) return true;
  return false;
}

RootVector parse_root(const std::string& text) {
  // signed terms of the form [k]w<i>, e.g. "w1+w2", "-2w4", "w3-w2"
  std::array<int, 4> acc{0, 0, 0, 0};
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return RootVector();
  bool any = false;
  while (pos < text.size()) {
    skip();
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (any) {
      throw std::invalid_argument("parse_root: expected '+' or '-' at offset " +
                                  std::to_string(pos));
    }
    int mult = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mult = text[pos] - '0';
      ++pos;
    }
    if (pos >= text.size() || text[pos] != 'w')
      throw std::invalid_argument("parse_root: expected 'w' at offset " + std::to_string(pos));
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '4')
      throw std::invalid_argument("parse_root: expected index 1..4 at offset " +
                                  std::to_string(pos));
    int idx = text[pos] - '1';
    ++pos;
    acc[idx] += sign * mult;
    any = true;
    skip();
  }
  if (!any) throw std::invalid_argument("parse_root: empty input");
  return RootVector::of(acc[0], acc[1], acc[2], acc[3]);
}

CartanElement::CartanElement(std::array<Rational, 4> d, LaurentPoly a)
    : diag(std::move(d)), coeff(std::move(a)) {
  if (diag[0] + diag[1] + diag[2] + diag[3] != 0)
    throw std::invalid_argument("CartanElement: diagonal must be traceless");
}

CartanElement cartan_h(int i, int j, const LaurentPoly& a) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("cartan_h: equal indices");
  std::array<Rational, 4> d{Rational(0), Rational(0), Rational(0), Rational(0)};
  d[i - 1] = 1;
  d[j - 1] = -1;
  return CartanElement(d, a);
}

Rational cartan_pairing(const RootVector& r, const CartanElement& h) {
  Rational s(0);
  for (int k = 0; k < 4; ++k) s += Rational(r.c[k]) * h.diag[k];
  return s;
}

std::array<long, 3> weight_to_labels(const RootVector& weight) {
  return {to_long(cartan_pairing(weight, cartan_h(1, 3))),
          to_long(cartan_pairing(weight, cartan_h(3, 2))),
          to_long(cartan_pairing(weight, cartan_h(2, 4)))};
}

RootVector labels_to_weight(long a1, long a2, long a3) {
  // lambda_4 = 0, lambda_2 = a3, lambda_3 = a2 + a3, lambda_1 = a1 + a2 + a3
  return RootVector::of(static_cast<int>(a1 + a2 + a3), static_cast<int>(a3),
                        static_cast<int>(a2 + a3), 0);
}

// ---------------------------------------------------------------------------
// phi and the generator matrices
// ---------------------------------------------------------------------------

namespace {

// Hodge pairing on the basis A_ij = e_ij - e_ji (i < j):
//   A12 <-> A34, A13 <-> -A24, A14 <-> A23
struct StarImage {
  int sign;
  int k, l;
};
StarImage star(int i, int j) {
  if (i > j) {
    StarImage s = star(j, i);
    s.sign = -s.sign;
    return s;
  }
  if (i == 1 && j == 2) return {1, 3, 4};
  if (i == 3 && j == 4) return {1, 1, 2};
  if (i == 1 && j == 3) return {-1, 2, 4};
  if (i == 2 && j == 4) return {-1, 1, 3};
  if (i == 1 && j == 4) return {1, 2, 3};
  if (i == 2 && j == 3) return {1, 1, 4};
  throw std::invalid_argument("star: bad indices");
}

// places w at block position; blocks: 0 = rows/cols 1..4, 1 = rows/cols 5..8
void put(SuperMatrix& m, int r, int c, bool lower_row, bool lower_col, const WeylElement& w) {
  int rr = (lower_row ? 4 : 0) + r - 1;
  int cc = (lower_col ? 4 : 0) + c - 1;
  WeylElement cur = m.entry(rr, cc);
  m.set_entry(rr, cc, cur + w);
}

SuperMatrix make_qpos_with_sign(int i, int j, const LaurentPoly& a, int sign) {
  SuperMatrix m(Parity::odd);
  put(m, i, j, false, true, WeylElement::from_poly(a));
  put(m, j, i, false, true, WeylElement::from_poly(-a));
  StarImage s = star(i, j);
  const int c = s.sign * sign;
  put(m, s.k, s.l, true, false, WeylElement::d_power(1, a.scaled(Rational(c))));
  put(m, s.l, s.k, true, false, WeylElement::d_power(1, a.scaled(Rational(-c))));
  return m;
}

SuperMatrix make_generator_with_sign(const GeneratorSpec& spec, int sign);

int compute_phi_sign() {
  // Try both ideal labelings; keep the one under which the quoted bracket
  // facts AND the explicit Vir matrix hold. The two bracket facts are
  // labeling-equivariant (they hold under both), so the Vir display is the
  // discriminating check.
  const LaurentPoly t = LaurentPoly::t();
  int found = 0, count = 0;
  for (int s : {+1, -1}) {
    SuperMatrix e34 = make_generator_with_sign(GeneratorSpec::E(3, 4, LaurentPoly::one()), s);
    SuperMatrix q14 = make_qpos_with_sign(1, 4, LaurentPoly::one(), s);
    SuperMatrix q31 = make_qpos_with_sign(3, 1, LaurentPoly::one(), s);
    SuperMatrix q21 = make_qpos_with_sign(2, 1, LaurentPoly::one(), s);
    bool ok = superbracket(e34, q14) == -q31;
    ok = ok && superbracket(q14, make_generator_with_sign(
                                     GeneratorSpec::Qneg(1, 4, t), s)) ==
                   make_generator_with_sign(GeneratorSpec::H(1, 4, t), s);
    SuperMatrix e41 = make_generator_with_sign(GeneratorSpec::E(4, 1, t), s);
    SuperMatrix triple = superbracket(superbracket(e41, q31), q21);
    ok = ok && triple == vir_via_diag_display(t);
    if (ok) {
      found = s;
      ++count;
    }
  }
  if (count != 1)
    throw std::logic_error("phi calibration: expected exactly one working labeling, got " +
                           std::to_string(count));
  return found;
}

SuperMatrix make_generator_with_sign(const GeneratorSpec& spec, int sign) {
  spec.validate();
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::E: {
      SuperMatrix m(Parity::even);
      put(m, spec.i, spec.j, false, false, WeylElement::from_poly(spec.coeff));
      put(m, spec.j, spec.i, true, true, WeylElement::from_poly(-spec.coeff));
      return m;
    }
    case Kind::H: {
      SuperMatrix m(Parity::even);
      put(m, spec.i, spec.i, false, false, WeylElement::from_poly(spec.coeff));
      put(m, spec.j, spec.j, false, false, WeylElement::from_poly(-spec.coeff));
      put(m, spec.j, spec.j, true, true, WeylElement::from_poly(spec.coeff));
      put(m, spec.i, spec.i, true, true, WeylElement::from_poly(-spec.coeff));
      return m;
    }
    case Kind::Q: {
      if (spec.q_positive) return make_qpos_with_sign(spec.i, spec.j, spec.coeff, sign);
      SuperMatrix m(Parity::odd);
      put(m, spec.i, spec.j, true, false, WeylElement::from_poly(spec.coeff));
      put(m, spec.j, spec.i, true, false, WeylElement::from_poly(spec.coeff));
      return m;
    }
    case Kind::Vir: {
      // I8(ad) - (e11(a') (+) (-e11(a') + I4(a'))) with a' = [a,d] = -da/dt
      SuperMatrix m(Parity::even);
      const WeylElement ad = WeylElement::d_power(1, spec.coeff);
      const LaurentPoly aprime = -spec.coeff.derivative();
      for (int r = 1; r <= 4; ++r) {
        put(m, r, r, false, false, ad);
        put(m, r, r, true, true, ad);
      }
      put(m, 1, 1, false, false, WeylElement::from_poly(-aprime));
      put(m, 1, 1, true, true, WeylElement::from_poly(aprime));
      for (int r = 1; r <= 4; ++r) put(m, r, r, true, true, WeylElement::from_poly(-aprime));
      return m;
    }
    case Kind::Central: {
      SuperMatrix m(Parity::even);
      const WeylElement cd = WeylElement::d_power(1, LaurentPoly(spec.central_coeff));
      for (int r = 1; r <= 4; ++r) {
        put(m, r, r, false, false, cd);
        put(m, r, r, true, true, cd);
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int phi_sign() {
  static const int sign = compute_phi_sign();
  return sign;
}

Mat4Rat phi(const Mat4Rat& k) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (k[r][c] != -k[c][r]) throw std::invalid_argument("phi: input is not skew-symmetric");
  Mat4Rat out{};
  const int sign = phi_sign();
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const Rational& coeff = k[i - 1][j - 1];  // coefficient of A_ij
      if (coeff == 0) continue;
      StarImage s = star(i, j);
      out[s.k - 1][s.l - 1] += coeff * (s.sign * sign);
      out[s.l - 1][s.k - 1] -= coeff * (s.sign * sign);
    }
  return out;
}

GeneratorSpec GeneratorSpec::E(int i, int j, const LaurentPoly& a) {
  GeneratorSpec s;
  s.kind = Kind::E;
  s.i = i;
  s.j = j;
  s.coeff = a;
  s.validate();
  return s;
}
GeneratorSpec GeneratorSpec::H(int i, int j, const LaurentPoly& a) {
  GeneratorSpec s;
  s.kind = Kind::H;
  s.i = i;
  s.j = j;
  s.coeff = a;
  s.validate();
  return s;
}
GeneratorSpec GeneratorSpec::Qpos(int i, int j, const LaurentPoly& a) {
  GeneratorSpec s;
  s.kind = Kind::Q;
  s.q_positive = true;
  s.i = i;
  s.j = j;
  s.coeff = a;
  s.validate();
  return s;
}
GeneratorSpec GeneratorSpec::Qneg(int i, int j, const LaurentPoly& a) {
  GeneratorSpec s;
  s.kind = Kind::Q;
  s.q_positive = false;
  s.i = i;
  s.j = j;
  s.coeff = a;
  s.validate();
  return s;
}
GeneratorSpec GeneratorSpec::Vir(const LaurentPoly& a) {
  GeneratorSpec s;
  s.kind = Kind::Vir;
  s.coeff = a;
  return s;
}
GeneratorSpec GeneratorSpec::Central(const Rational& c) {
  GeneratorSpec s;
  s.kind = Kind::Central;
  s.central_coeff = c;
  return s;
}

void GeneratorSpec::validate() const {
  switch (kind) {
    case Kind::E:
    case Kind::H:
      check_index(i);
      check_index(j);
      if (i == j) throw std::invalid_argument("generator: equal indices");
      break;
    case Kind::Q:
      check_index(i);
      check_index(j);
      if (q_positive && i == j)
        throw std::invalid_argument("generator: q with +w_i+w_i is not a root");
      break;
    case Kind::Vir:
    case Kind::Central:
      break;
  }
}

std::string GeneratorSpec::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::E:
      out << "e(" << i << "," << j << "; " << coeff.str() << ")";
      break;
    case Kind::H:
      out << "h(" << i << "," << j << "; " << coeff.str() << ")";
      break;
    case Kind::Q:
      if (q_positive) {
        out << "q(+" << i << ",+" << j;
        if (!(coeff == LaurentPoly::one())) out << "; " << coeff.str();
        out << ")";
      } else {
        out << "q(-" << i << ",-" << j << "; " << coeff.str() << ")";
      }
      break;
    case Kind::Vir:
      out << "vir(" << coeff.str() << ")";
      break;
    case Kind::Central:
      out << "central(" << to_string(central_coeff) << ")";
      break;
  }
  return out.str();
}

SuperMatrix make_generator(const GeneratorSpec& spec) {
  return make_generator_with_sign(spec, phi_sign());
}

SuperMatrix vir_via_diag_display(const LaurentPoly& a) {
  // e11(da) + e22(ad) + e33(ad) + e44(ad)  (+)  e11(ad) + e22(da) + ... e44(da)
  SuperMatrix m(Parity::even);
  const WeylElement ad = WeylElement::d_power(1, a);
  const WeylElement da = ad + WeylElement::from_poly(a.derivative());
  put(m, 1, 1, false, false, da);
  for (int r = 2; r <= 4; ++r) put(m, r, r, false, false, ad);
  put(m, 1, 1, true, true, ad);
  for (int r = 2; r <= 4; ++r) put(m, r, r, true, true, da);
  return m;
}

RootVector root_of(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::E:
      return RootVector::w(spec.i) - RootVector::w(spec.j);
    case Kind::Q:
      if (spec.q_positive) return RootVector::w(spec.i) + RootVector::w(spec.j);
      return RootVector() - RootVector::w(spec.i) - RootVector::w(spec.j);
    case Kind::H:
    case Kind::Vir:
    case Kind::Central:
      return RootVector();
  }
  throw std::logic_error("unreachable");
}

Parity parity_of(const GeneratorSpec& spec) {
  return spec.kind == GeneratorSpec::Kind::Q ? Parity::odd : Parity::even;
}

std::vector<std::vector<RootVector>> positive_decompositions(const RootVector& r) {
  const auto& pos = positive_roots();
  std::vector<std::vector<RootVector>> out;
  std::vector<RootVector> current;
  const int target_f = f_value(r);

  // multisets as non-decreasing index sequences; f is additive and >= 1 on
  // every positive root, so the budget recursion terminates
  auto rec = [&](auto&& self, size_t start, int budget, std::array<int, 4> sum) -> void {
    if (budget == 0 && current.size() >= 2 &&
        RootVector::of(sum[0], sum[1], sum[2], sum[3]) == r) {
      out.push_back(current);
    }
    if (budget <= 0) return;
    for (size_t k = start; k < pos.size(); ++k) {
      const int fk = f_value(pos[k]);
      if (fk > budget) continue;
      current.push_back(pos[k]);
      std::array<int, 4> s2 = sum;
      for (int q = 0; q < 4; ++q) s2[q] += pos[k].c[q];
      self(self, k, budget - fk, s2);
      current.pop_back();
    }
  };
  rec(rec, 0, target_f, {0, 0, 0, 0});

  for (auto& d : out) std::sort(d.begin(), d.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool grading_check(const SuperMatrix& x, const RootVector& r) {
  for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 4}}) {
    SuperMatrix h = make_generator(GeneratorSpec::H(i, j, LaurentPoly::one()));
    Rational lambda = cartan_pairing(r, cartan_h(i, j));
    if (!(superbracket(h, x) == x.scaled(lambda))) return false;
  }
  return true;
}

std::optional<RootVector> find_root_space(const SuperMatrix& x) {
  if (x.is_zero()) return RootVector();
  if (grading_check(x, RootVector())) return RootVector();
  for (const RootVector& r : all_roots())
    if (grading_check(x, r)) return r;
  return std::nullopt;
}

std::optional<std::string> recognize_element(const SuperMatrix& x) {
  if (x.is_zero()) return "0";
  auto try_spec = [&](const GeneratorSpec& spec) -> std::optional<std::string> {
    if (x == make_generator(spec)) return spec.str();
    return std::nullopt;
  };
  if (x.parity() == Parity::even) {
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        if (i == j) continue;
        const LaurentPoly a = x.entry(i - 1, j - 1).coefficient(0);
        if (!a.is_zero())
          if (auto s = try_spec(GeneratorSpec::E(i, j, a))) return s;
      }
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const LaurentPoly a = x.entry(i - 1, i - 1).coefficient(0);
        if (!a.is_zero())
          if (auto s = try_spec(GeneratorSpec::H(i, j, a))) return s;
      }
    const LaurentPoly v = x.entry(1, 1).coefficient(1);  // Vir(a) carries a*d at (2,2)
    if (!v.is_zero())
      if (auto s = try_spec(GeneratorSpec::Vir(v))) return s;
    const LaurentPoly c0 = x.entry(0, 0).coefficient(1);
    if (!c0.is_zero() && c0.coefficients().size() == 1 && c0.coeff(0) != 0)
      if (auto s = try_spec(GeneratorSpec::Central(c0.coeff(0)))) return s;
    return std::nullopt;
  }
  // odd: q shapes
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      LaurentPoly a = x.entry(4 + i - 1, j - 1).coefficient(0);
      if (i == j) a = a.scaled(Rational(1, 2));
      if (!a.is_zero())
        if (auto s = try_spec(GeneratorSpec::Qneg(i, j, a))) return s;
    }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const LaurentPoly a = x.entry(i - 1, 4 + j - 1).coefficient(0);
      if (!a.is_zero())
        if (auto s = try_spec(GeneratorSpec::Qpos(i, j, a))) return s;
    }
  return std::nullopt;
}

std::optional<std::pair<LaurentPoly, LaurentPoly>> span_decompose(const SuperMatrix& x, int i,
                                                                  int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("span_decompose: equal indices");
  if (x.parity() != Parity::odd) return std::nullopt;
  int k = 0, l = 0;
  for (int cand = 1; cand <= 4; ++cand)
    if (cand != i && cand != j) {
      if (k == 0)
        k = cand;
      else if (l == 0)
        l = cand;
    }

  // b from the upper-right block, which must be a multiple of e_ij - e_ji
  const WeylElement& ur = x.entry(i - 1, 4 + j - 1);
  if (ur.top_power() > 0) return std::nullopt;
  LaurentPoly pattern = ur.coefficient(0);
  SuperMatrix probe = superbracket(
      make_generator(GeneratorSpec::Qpos(i, k)),
      make_generator(GeneratorSpec::E(j, k, LaurentPoly::one())));
  LaurentPoly unit = probe.entry(i - 1, 4 + j - 1).coefficient(0);  // +-1
  if (unit.is_zero()) return std::nullopt;
  Rational unit_scalar = unit.coeff(0);
  LaurentPoly b = pattern.scaled(Rational(1) / unit_scalar);

  SuperMatrix rest = x - superbracket(make_generator(GeneratorSpec::Qpos(i, k)),
                                      make_generator(GeneratorSpec::E(j, k, b)));
  // rest must be q_{-w_k-w_l}(c)
  const WeylElement& ll = rest.entry(4 + k - 1, l - 1);
  if (ll.top_power() > 0) return std::nullopt;
  LaurentPoly c = ll.coefficient(0);
  if (!(rest == make_generator(GeneratorSpec::Qneg(k, l, c)))) return std::nullopt;
  return std::make_pair(b, c);
}

}  // namespace ck6
