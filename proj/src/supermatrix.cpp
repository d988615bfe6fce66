#include "ck6/supermatrix.hpp"

#include <sstream>

namespace ck6 {

Parity infer_parity(const std::array<WeylElement, 64>& entries) {
  bool diag = false, off = false;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (!entries[r * 8 + c].is_zero())
        (SuperMatrix::in_block(r, c, Parity::even) ? diag : off) = true;
  if (diag && off) throw std::domain_error("infer_parity: mixed block pattern");
  return off ? Parity::odd : Parity::even;  // zero matrix defaults to even
}

SuperMatrix SuperMatrix::from_entries(const std::array<WeylElement, 64>& entries) {
  SuperMatrix m(infer_parity(entries));
  m.entries_ = entries;
  return m;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.is_zero()) {
    SuperMatrix m = b;
    return m;
  }
  if (b.is_zero()) return a;
  if (a.parity_ != b.parity_)
    throw std::domain_error("SuperMatrix: sum of matrices of different parity");
  SuperMatrix m(a.parity_);
  for (int k = 0; k < 64; ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
  return m;
}

SuperMatrix mat_mul(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix m(parity_sum(x.parity(), y.parity()));
  for (int r = 0; r < 8; ++r) {
    for (int k = 0; k < 8; ++k) {
      const WeylElement& a = x.entry(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < 8; ++c) {
        const WeylElement& b = y.entry(k, c);
        if (b.is_zero()) continue;
        WeylElement prod = a * b;
        if (prod.is_zero()) continue;
        if (!SuperMatrix::in_block(r, c, m.parity()))
          throw std::domain_error("mat_mul: product violates the block pattern");
        m.entries_[r * 8 + c] += prod;
      }
    }
  }
  return m;
}

SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix xy = mat_mul(x, y);
  SuperMatrix yx = mat_mul(y, x);
  const bool both_odd = x.parity() == Parity::odd && y.parity() == Parity::odd;
  return both_odd ? xy + yx : xy - yx;
}

SuperSum mat_mul(const SuperSum& x, const SuperSum& y) {
  SuperSum out;
  out.even = mat_mul(x.even, y.even) + mat_mul(x.odd, y.odd);
  out.odd = mat_mul(x.even, y.odd) + mat_mul(x.odd, y.even);
  return out;
}

SuperSum superbracket(const SuperSum& x, const SuperSum& y) {
  SuperSum out;
  out.even = superbracket(x.even, y.even) + superbracket(x.odd, y.odd);
  out.odd = superbracket(x.even, y.odd) + superbracket(x.odd, y.even);
  return out;
}

std::string SuperMatrix::str() const {
  std::ostringstream out;
  out << parity_name(parity_) << " 8x8:\n";
  bool any = false;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (!entry(r, c).is_zero()) {
        out << "  [" << r + 1 << "," << c + 1 << "] = " << entry(r, c).str() << "\n";
        any = true;
      }
  if (!any) out << "  (zero)\n";
  return out.str();
}

}  // namespace ck6
