#include "ck6/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace ck6 {

namespace {

BigInt int_binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

[[noreturn]] void incomparable() {
  throw std::domain_error("ExtWeylElement: bases differ by a non-integer");
}

// integer gap b - a, or throws
int integer_gap(const Rational& a, const Rational& b) {
  Rational gap = b - a;
  if (!is_integer(gap)) incomparable();
  return static_cast<int>(to_long(gap));
}

}  // namespace

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  WeylElement out;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      LaurentPoly bk = b;  // k-th derivative of b, built incrementally
      for (int k = 0; k <= i; ++k) {
        if (bk.is_zero()) break;
        out.add_term(i + j - k, (a * bk).scaled(Rational(int_binomial(i, k))));
        bk = bk.derivative();
      }
    }
  }
  return out;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.str() << ")";
    if (it->first > 0) out << " * d^" << it->first;
  }
  return out.str();
}

LaurentPoly ExtWeylElement::coefficient_at(const Rational& e) const {
  int k = integer_gap(e, base_);
  if (k < 0 || k >= depth()) return LaurentPoly();
  return tail_[k];
}

ExtWeylElement operator+(const ExtWeylElement& a, const ExtWeylElement& b) {
  int gap = integer_gap(a.base_, b.base_);  // b.base - a.base
  const ExtWeylElement& hi = gap >= 0 ? b : a;
  const ExtWeylElement& lo = gap >= 0 ? a : b;
  int shift = std::abs(gap);  // layers of `lo` sit this far below hi.base
  // validity floors: hi.base - hi.depth and lo.base - lo.depth
  Rational floor = std::max(hi.floor_exponent(), lo.floor_exponent());
  int depth = integer_gap(floor, hi.base_);
  if (depth < 1)
    throw std::domain_error("ExtWeylElement: sum has no retained layers");
  ExtWeylElement out(hi.base_, depth);
  for (int i = 0; i < depth && i < hi.depth(); ++i) out.tail_[i] = hi.tail_[i];
  for (int i = 0; i + shift < depth && i < lo.depth(); ++i)
    out.tail_[i + shift] += lo.tail_[i];
  return out;
}

ExtWeylElement ext_mul_right_poly(const ExtWeylElement& x, const LaurentPoly& a) {
  ExtWeylElement out(x.base(), x.depth());
  for (int i = 0; i < x.depth(); ++i) {
    if (x.layer(i).is_zero()) continue;
    LaurentPoly ak = a;  // k-th derivative of a
    for (int k = 0; i + k < x.depth(); ++k) {
      if (ak.is_zero()) break;
      out.set_layer(i + k,
                    out.layer(i + k) + (x.layer(i) * ak).scaled(binomial(x.base() - i, k)));
      ak = ak.derivative();
    }
  }
  return out;
}

ExtWeylElement act_left_weyl(const WeylElement& x, const ExtWeylElement& y) {
  if (x.is_zero()) return ExtWeylElement(y.base(), y.depth());
  const int top = x.top_power();
  // result base = y.base + top; validity floor = y.floor + top, so the depth
  // is preserved
  ExtWeylElement out(y.base() + top, y.depth());
  for (const auto& [j, c] : x.terms()) {
    for (int i = 0; i < y.depth(); ++i) {
      if (y.layer(i).is_zero()) continue;
      // c d^j (a_i d^(base-i)) = sum_k C(j,k) c a_i^(k) d^(base-i+j-k)
      LaurentPoly ak = y.layer(i);
      for (int k = 0; k <= j; ++k) {
        if (ak.is_zero()) break;
        int offset = (top - j) + i + k;  // distance below the new base
        if (offset < y.depth())
          out.set_layer(offset,
                        out.layer(offset) + (c * ak).scaled(Rational(int_binomial(j, k))));
        ak = ak.derivative();
      }
    }
  }
  return out;
}

ExtWeylElement ext_project(const ExtWeylElement& x, const Rational& floor) {
  Rational gap = x.base() - floor;
  if (!is_integer(gap) || gap < 0)
    throw std::domain_error("ext_project: floor is not base - k for integer k >= 0");
  int k = static_cast<int>(to_long(gap));
  ExtWeylElement out = x;
  for (int i = k; i < x.depth(); ++i) out.set_layer(i, LaurentPoly());
  return out;
}

bool equal_retained(const ExtWeylElement& a, const ExtWeylElement& b) {
  integer_gap(a.base(), b.base());  // comparability check
  // exponents above either base carry coefficient zero by construction, so
  // start from the higher base; stop at the higher validity floor
  Rational top = std::max(a.base(), b.base());
  Rational floor = std::max(a.floor_exponent(), b.floor_exponent());
  for (Rational e = top; e > floor; e -= 1)
    if (!(a.coefficient_at(e) == b.coefficient_at(e))) return false;
  return true;
}

std::string ExtWeylElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < depth(); ++i) {
    if (tail_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << tail_[i].str() << ") * d^(" << to_string(base_ - i) << ")";
  }
  if (first) out << "0";
  out << "  [mod d^(" << to_string(floor_exponent()) << ")]";
  return out.str();
}

}  // namespace ck6
