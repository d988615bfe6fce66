#include "ck6/laurent.hpp"

#include <cctype>
#include <sstream>

namespace ck6 {

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest exponent first
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int m = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit = (c == 1);
    if (m == 0) {
      out << to_string(c);
    } else {
      if (!unit) out << to_string(c);
      out << "t";
      if (m != 1) out << "^" << m;
    }
  }
  return out.str();
}

namespace {

void skip_ws(const std::string& s, size_t* pos) {
  while (*pos < s.size() && std::isspace(static_cast<unsigned char>(s[*pos]))) ++*pos;
}

[[noreturn]] void fail(const std::string& what, size_t pos) {
  throw std::invalid_argument(what + " at offset " + std::to_string(pos));
}

BigInt scan_uint(const std::string& s, size_t* pos) {
  if (*pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[*pos])))
    fail("expected digit", *pos);
  std::string digits;
  while (*pos < s.size() && std::isdigit(static_cast<unsigned char>(s[*pos])))
    digits.push_back(s[(*pos)++]);
  return BigInt(digits);
}

int scan_int(const std::string& s, size_t* pos) {
  bool neg = false;
  if (*pos < s.size() && (s[*pos] == '+' || s[*pos] == '-')) neg = (s[(*pos)++] == '-');
  BigInt v = scan_uint(s, pos);
  if (v > 1000000) fail("exponent out of range", *pos);
  int out = static_cast<int>(v);
  return neg ? -out : out;
}

}  // namespace

LaurentPoly scan_poly(const std::string& text, size_t* pos) {
  LaurentPoly result;
  bool first_term = true;
  for (;;) {
    skip_ws(text, pos);
    Rational sign(1);
    if (*pos < text.size() && (text[*pos] == '+' || text[*pos] == '-')) {
      if (text[*pos] == '-') sign = -1;
      ++*pos;
      skip_ws(text, pos);
    } else if (!first_term) {
      break;  // no sign, no further term
    }
    // term: rational? ('*'? 't' ('^' int)?)?
    bool have_coeff = false;
    Rational coeff(1);
    if (*pos < text.size() && std::isdigit(static_cast<unsigned char>(text[*pos]))) {
      BigInt num = scan_uint(text, pos);
      BigInt den = 1;
      if (*pos < text.size() && text[*pos] == '/') {
        ++*pos;
        skip_ws(text, pos);
        den = scan_uint(text, pos);
        if (den == 0) fail("zero denominator", *pos);
      }
      coeff = make_rational(num, den);
      have_coeff = true;
      skip_ws(text, pos);
      if (*pos < text.size() && text[*pos] == '*') {
        ++*pos;
        skip_ws(text, pos);
        if (*pos >= text.size() || text[*pos] != 't') fail("expected t after '*'", *pos);
      }
    }
    int exponent = 0;
    if (*pos < text.size() && text[*pos] == 't') {
      ++*pos;
      exponent = 1;
      if (*pos < text.size() && text[*pos] == '^') {
        ++*pos;
        exponent = scan_int(text, pos);
      }
    } else if (!have_coeff) {
      fail(first_term ? "expected polynomial" : "expected term", *pos);
    }
    result += LaurentPoly::monomial(exponent, sign * coeff);
    first_term = false;
    skip_ws(text, pos);
  }
  return result;
}

LaurentPoly parse_poly(const std::string& text) {
  size_t pos = 0;
  LaurentPoly p = scan_poly(text, &pos);
  skip_ws(text, &pos);
  if (pos != text.size()) fail("trailing input", pos);
  return p;
}

}  // namespace ck6
