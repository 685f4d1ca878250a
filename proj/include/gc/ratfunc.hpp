#ifndef GC_RATFUNC_HPP
#define GC_RATFUNC_HPP

#include "gc/upoly.hpp"

#include <optional>
#include <string>

namespace gc {

/// Rational function in the formal parameter c, lowest terms, monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& a) : num_(a), den_(1) {}
  RatFunc(int a) : RatFunc(Rational(a)) {}
  RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(UPoly num, UPoly den);

  static RatFunc c() { return RatFunc(UPoly::x()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Value at c = t, or nullopt at a pole.
  std::optional<Rational> eval(const Rational& t) const;
  /// "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  UPoly num_, den_;
};

}  // namespace gc

#endif
