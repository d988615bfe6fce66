#pragma once

#include <map>
#include <string>
#include <vector>

#include "ck6/laurent.hpp"

namespace ck6 {

// Element of the Weyl algebra W = sum_{i>=0} R d^i over R = Q[t,t^-1],
// with the relation d a = a d + a'. Canonical form keeps coefficients on
// the left of the d powers; zero coefficients are never stored.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement from_poly(const LaurentPoly& a) {
    WeylElement w;
    if (!a.is_zero()) w.terms_[0] = a;
    return w;
  }
  static WeylElement d_power(int i, const LaurentPoly& coeff = LaurentPoly::one()) {
    if (i < 0) throw std::domain_error("WeylElement: negative power of d");
    WeylElement w;
    if (!coeff.is_zero()) w.terms_[i] = coeff;
    return w;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }
  // -1 for the zero element
  int top_power() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  WeylElement& operator+=(const WeylElement& other) {
    for (const auto& [i, a] : other.terms_) add_term(i, a);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& other) {
    for (const auto& [i, a] : other.terms_) add_term(i, -a);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  WeylElement operator-() const {
    WeylElement w;
    for (const auto& [i, a] : terms_) w.terms_[i] = -a;
    return w;
  }
  WeylElement scaled(const Rational& s) const {
    WeylElement w;
    if (s == 0) return w;
    for (const auto& [i, a] : terms_) w.terms_[i] = a.scaled(s);
    return w;
  }

  // (a d^i)(b d^j) = sum_k C(i,k) a b^(k) d^(i+j-k)
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y);

  // Tautological action on R: sum a_i b^(i). This is the unique left-module
  // structure on R with a acting by multiplication, per the calibration
  // checks in the module layer.
  LaurentPoly apply(const LaurentPoly& b) const {
    LaurentPoly out;
    for (const auto& [i, a] : terms_) out += a * b.derivative(i);
    return out;
  }

  bool operator==(const WeylElement& other) const { return terms_ == other.terms_; }

  std::string str() const;

  void add_term(int i, const LaurentPoly& a) {
    if (a.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
      terms_[i] = a;
    } else {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  std::map<int, LaurentPoly> terms_;
};

inline WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) { return x * y; }

// Truncated tail a_0 d^base + a_1 d^(base-1) + ... + a_(T-1) d^(base-T+1),
// representing its class modulo d^(base-T). Elements with bases differing
// by a non-integer are incomparable; mixing them throws.
class ExtWeylElement {
 public:
  ExtWeylElement(const Rational& base, int depth) : base_(base), tail_(check_depth(depth)) {}

  static ExtWeylElement d_power(const Rational& beta, int depth) {
    ExtWeylElement x(beta, depth);
    x.tail_[0] = LaurentPoly::one();
    return x;
  }
  static ExtWeylElement from_poly_times_d_power(const LaurentPoly& a, const Rational& beta,
                                                int depth) {
    ExtWeylElement x(beta, depth);
    x.tail_[0] = a;
    return x;
  }

  const Rational& base() const { return base_; }
  int depth() const { return static_cast<int>(tail_.size()); }
  Rational floor_exponent() const { return base_ - depth(); }
  // coefficient of d^(base - i)
  const LaurentPoly& layer(int i) const { return tail_.at(i); }
  void set_layer(int i, const LaurentPoly& a) { tail_.at(i) = a; }
  // coefficient at exponent e = base - k for integer k (zero when outside
  // the retained window; throws when e is incomparable with the base)
  LaurentPoly coefficient_at(const Rational& e) const;

  ExtWeylElement operator-() const {
    ExtWeylElement x(base_, depth());
    for (int i = 0; i < depth(); ++i) x.tail_[i] = -tail_[i];
    return x;
  }

  // Sum, aligned to the higher base; the retained window shrinks to the
  // intersection of the two validity windows.
  friend ExtWeylElement operator+(const ExtWeylElement& a, const ExtWeylElement& b);
  friend ExtWeylElement operator-(const ExtWeylElement& a, const ExtWeylElement& b) {
    return a + (-b);
  }

  std::string str() const;

 private:
  static int check_depth(int depth) {
    if (depth < 1) throw std::domain_error("ExtWeylElement: depth must be positive");
    return depth;
  }

  Rational base_;
  std::vector<LaurentPoly> tail_;
};

// d^gamma a = sum_i C(gamma, i) a^(i) d^(gamma-i), applied termwise and
// truncated at the input's depth.
ExtWeylElement ext_mul_right_poly(const ExtWeylElement& x, const LaurentPoly& a);

// Left multiplication by a finite Weyl element; the truncation depth of y is
// preserved (the unknown tail of y pollutes exactly top_power(x) layers,
// which matches the base shift).
ExtWeylElement act_left_weyl(const WeylElement& x, const ExtWeylElement& y);

// Zeroes every retained layer at exponent <= floor. floor must equal
// base - k for an integer k >= 0.
ExtWeylElement ext_project(const ExtWeylElement& x, const Rational& floor);

// Equality on the intersection of the retained windows. Throws when the
// bases differ by a non-integer.
bool equal_retained(const ExtWeylElement& a, const ExtWeylElement& b);

}  // namespace ck6
