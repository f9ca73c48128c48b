#include "domino3d/polynomial.hpp"

#include <cctype>

#include "domino3d/error.hpp"

namespace domino3d {

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (auto [ea, ca] : a.coeffs_)
    for (auto [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scale(Coeff k) const {
  LaurentPoly out;
  if (k == 0) return out;
  for (auto [e, c] : coeffs_) out.coeffs_.emplace(e, c * k);
  return out;
}

LaurentPoly LaurentPoly::mul_qk(int k) const {
  LaurentPoly out;
  for (auto [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

LaurentPoly::Coeff LaurentPoly::eval_at_one() const {
  Coeff s = 0;
  for (auto [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly::Coeff LaurentPoly::derivative_at_one() const {
  Coeff s = 0;
  for (auto [e, c] : coeffs_) s += Coeff(e) * c;
  return s;
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms_descending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms_descending()) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0 || mag != 1) out += std::to_string(mag);
    if (e == 0) continue;
    out += "q";
    if (e == 1) continue;
    out += e < 0 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    // U+2212 minus sign
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    s += char(ch);
  }
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::ParseError, "polynomial '" + text + "': " + why); };
  if (s.empty()) fail("empty");
  if (s == "0") return {};
  LaurentPoly p;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& j) {
    std::size_t start = j;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == start || (j == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    return std::stoll(s.substr(start, j - start));
  };
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    Coeff mag = 1;
    bool has_digits = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    if (has_digits) mag = read_int(i);
    if (i < s.size() && s[i] == '*') ++i;
    int e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        e = int(read_int(i));
        if (brace) {
          if (i >= s.size() || s[i] != '}') fail("unclosed brace");
          ++i;
        }
      }
    } else if (!has_digits) {
      fail("expected term");
    }
    p.add_term(e, sign * mag);
  }
  return p;
}

std::optional<int> equal_up_to_shift(const LaurentPoly& p1, const LaurentPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) {
    if (p1.is_zero() && p2.is_zero()) return 0;
    return std::nullopt;
  }
  int k = p1.min_exponent() - p2.min_exponent();
  if (p2.mul_qk(k) == p1) return k;
  return std::nullopt;
}

std::optional<int> as_positive_trit_delta(const LaurentPoly& d) {
  if (d.coeffs().size() != 2) return std::nullopt;
  int k = d.min_exponent();
  if (d.coeff(k) == -1 && d.coeff(k + 1) == 1) return k;
  return std::nullopt;
}

}  // namespace domino3d
