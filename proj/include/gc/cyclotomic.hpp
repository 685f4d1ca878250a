#ifndef GC_CYCLOTOMIC_HPP
#define GC_CYCLOTOMIC_HPP

#include "gc/upoly.hpp"

#include <string>
#include <vector>

namespace gc {

/// M-th cyclotomic polynomial (cached, thread safe).
const UPoly& cyclotomic_polynomial(int m);

/// Element of Q(zeta_M) stored as a residue mod Phi_M.
/// Orders 1 and 2 are plain rationals and are stored with order 1;
/// they promote silently when mixed with any other order.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1) {}
  Cyclotomic(const Rational& a) : order_(1), p_(a) {}
  Cyclotomic(int a) : Cyclotomic(Rational(a)) {}
  Cyclotomic(int order, UPoly residue);

  /// zeta_m = exp(2 pi i / m).
  static Cyclotomic zeta(int m);

  int order() const { return order_; }
  const UPoly& residue() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  Cyclotomic operator-() const { return Cyclotomic(order_, -p_); }
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;
  /// Coefficients of 1, z, z^2, ... as "p/q" strings.
  std::vector<std::string> coefficient_strings() const;
  std::string to_string() const;

 private:
  static int common_order(int a, int b);
  int order_;
  UPoly p_;
};

}  // namespace gc

#endif
