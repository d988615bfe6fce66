#pragma once

#include <map>
#include <string>

#include "ck6/rational.hpp"

namespace ck6 {

// Laurent polynomial over Q in one variable t, stored as a finite map from
// exponent to coefficient. Zero coefficients are never stored, so equality
// is map equality. Text form: signed sum of terms `c`, `c*t^m`, `t^m`,
// e.g. "3t^2 - 1/2t^-1".
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }
  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1)) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exponent] = c;
    return p;
  }
  // t^m, the workhorse for monomial windows
  static LaurentPoly t(int exponent = 1) { return monomial(exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }

  Rational coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.coeffs_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.coeffs_) add_term(m, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly p;
    for (const auto& [m, c] : coeffs_) p.coeffs_[m] = -c;
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [m1, c1] : a.coeffs_)
      for (const auto& [m2, c2] : b.coeffs_) p.add_term(m1 + m2, c1 * c2);
    return p;
  }

  LaurentPoly scaled(const Rational& s) const {
    LaurentPoly p;
    if (s == 0) return p;
    for (const auto& [m, c] : coeffs_) p.coeffs_[m] = c * s;
    return p;
  }

  // (t^m)' = m t^(m-1)
  LaurentPoly derivative(int order = 1) const {
    LaurentPoly p = *this;
    for (int k = 0; k < order; ++k) {
      LaurentPoly q;
      for (const auto& [m, c] : p.coeffs_)
        if (m != 0) q.coeffs_[m - 1] = c * m;
      p = std::move(q);
    }
    return p;
  }

  bool operator==(const LaurentPoly& other) const { return coeffs_ == other.coeffs_; }

  std::string str() const;

 private:
  void add_term(int exponent, const Rational& c) {
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[exponent] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, Rational> coeffs_;
};

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly derive(const LaurentPoly& p) { return p.derivative(); }

// Scans a Laurent polynomial from text starting at *pos; advances *pos past
// the consumed characters. Throws std::invalid_argument (with offset in the
// message) on malformed input.
LaurentPoly scan_poly(const std::string& text, size_t* pos);
LaurentPoly parse_poly(const std::string& text);

}  // namespace ck6
