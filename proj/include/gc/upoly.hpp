#ifndef GC_UPOLY_HPP
#define GC_UPOLY_HPP

#include "gc/rational.hpp"

#include <utility>
#include <vector>

namespace gc {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c) { if (c != 0) c_.push_back(c); }
  UPoly(int c) : UPoly(Rational(c)) {}
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static UPoly monomial(int k, const Rational& a = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& a);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division, b nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);
  /// Shift down by c^k; requires valuation() >= k.
  UPoly shift_down(int k) const;

  UPoly monic() const;
  Rational eval(const Rational& t) const;
  std::string to_string(const char* var = "c") const;

 private:
  void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
  std::vector<Rational> c_;
};

}  // namespace gc

#endif
