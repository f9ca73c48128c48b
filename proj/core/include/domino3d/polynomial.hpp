#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domino3d {

class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly constant(Coeff c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, Coeff coeff = 1);

  // Exponent -> coefficient, no zero entries.
  const std::map<int, Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.rbegin()->first; }

  void add_term(int exponent, Coeff coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const { return scale(-1); }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scale(Coeff k) const;
  LaurentPoly mul_qk(int k) const;

  Coeff eval_at_one() const;
  Coeff derivative_at_one() const;

  // Descending exponents as [exponent, coefficient] pairs.
  std::vector<std::pair<int, Coeff>> terms_descending() const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::map<int, Coeff> coeffs_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
inline LaurentPoly scale(const LaurentPoly& p, LaurentPoly::Coeff k) { return p.scale(k); }
inline LaurentPoly mul_qk(const LaurentPoly& p, int k) { return p.mul_qk(k); }
inline LaurentPoly::Coeff eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }
inline LaurentPoly::Coeff derivative_at_one(const LaurentPoly& p) { return p.derivative_at_one(); }

// k with p1 == q^k * p2, if any.
std::optional<int> equal_up_to_shift(const LaurentPoly& p1, const LaurentPoly& p2);

// If d == q^k (q - 1) for some k, returns k.
std::optional<int> as_positive_trit_delta(const LaurentPoly& d);

}  // namespace domino3d
