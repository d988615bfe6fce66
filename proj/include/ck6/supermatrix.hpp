#pragma once

#include <array>
#include <optional>
#include <string>

#include "ck6/weyl.hpp"

namespace ck6 {

enum class Parity { even, odd };

inline Parity parity_sum(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}
inline std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// 8x8 matrix over the Weyl algebra with a Z/2 parity. Even matrices live in
// the two diagonal 4x4 blocks, odd matrices in the two off-diagonal blocks;
// set_entry and mat_mul enforce the block pattern.
class SuperMatrix {
 public:
  explicit SuperMatrix(Parity p = Parity::even) : parity_(p) {}

  static SuperMatrix zeros(Parity p) { return SuperMatrix(p); }
  static SuperMatrix identity() {
    SuperMatrix m(Parity::even);
    for (int i = 0; i < 8; ++i) m.entries_[i * 8 + i] = WeylElement::from_poly(LaurentPoly::one());
    return m;
  }
  // infers the parity from the occupied blocks; throws on a mixed pattern
  static SuperMatrix from_entries(const std::array<WeylElement, 64>& entries);

  Parity parity() const { return parity_; }

  const WeylElement& entry(int r, int c) const { return entries_.at(r * 8 + c); }

  void set_entry(int r, int c, const WeylElement& w) {
    if (!w.is_zero() && !in_block(r, c, parity_))
      throw std::domain_error("SuperMatrix: entry outside the " + parity_name(parity_) +
                              " block pattern");
    entries_.at(r * 8 + c) = w;
  }

  bool is_zero() const {
    for (const auto& w : entries_)
      if (!w.is_zero()) return false;
    return true;
  }

  SuperMatrix operator-() const {
    SuperMatrix m(parity_);
    for (int k = 0; k < 64; ++k) m.entries_[k] = -entries_[k];
    return m;
  }
  SuperMatrix scaled(const Rational& s) const {
    SuperMatrix m(parity_);
    for (int k = 0; k < 64; ++k) m.entries_[k] = entries_[k].scaled(s);
    return m;
  }

  // sums require equal parity unless one side is zero
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) { return a + (-b); }

  friend SuperMatrix mat_mul(const SuperMatrix& x, const SuperMatrix& y);

  // equality of entries; a zero matrix equals a zero matrix of either parity
  bool operator==(const SuperMatrix& other) const {
    if (parity_ != other.parity_ && !(is_zero() && other.is_zero())) return false;
    return entries_ == other.entries_;
  }

  std::string str() const;

  static bool in_block(int r, int c, Parity p) {
    const bool diagonal = (r < 4) == (c < 4);
    return p == Parity::even ? diagonal : !diagonal;
  }

 private:
  std::array<WeylElement, 64> entries_{};
  Parity parity_;
};

Parity infer_parity(const std::array<WeylElement, 64>& entries);

// [x, y] = xy - (-1)^(|x||y|) yx
SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y);

// Explicit even + odd pair, for the few places that need parity-mixed sums.
struct SuperSum {
  SuperMatrix even{Parity::even};
  SuperMatrix odd{Parity::odd};

  static SuperSum of(const SuperMatrix& m) {
    SuperSum s;
    (m.parity() == Parity::even ? s.even : s.odd) = m;
    return s;
  }

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  // the homogeneous part when one side vanishes
  std::optional<SuperMatrix> homogeneous() const {
    if (odd.is_zero()) return even;
    if (even.is_zero()) return odd;
    return std::nullopt;
  }

  SuperSum operator-() const { return {-even, -odd}; }
  SuperSum scaled(const Rational& s) const { return {even.scaled(s), odd.scaled(s)}; }
  friend SuperSum operator+(const SuperSum& a, const SuperSum& b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend SuperSum operator-(const SuperSum& a, const SuperSum& b) { return a + (-b); }
  bool operator==(const SuperSum& other) const {
    return even == other.even && odd == other.odd;
  }
};

SuperSum mat_mul(const SuperSum& x, const SuperSum& y);
SuperSum superbracket(const SuperSum& x, const SuperSum& y);

}  // namespace ck6
