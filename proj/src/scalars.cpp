#include "gc/cyclotomic.hpp"
#include "gc/errors.hpp"
#include "gc/ratfunc.hpp"
#include "gc/upoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gc {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    std::string s;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) s += text[i++];
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') s += text[i++];
    if (i == start) throw ParseError("malformed rational '" + std::string(text) + "'", i, "digit");
    return Integer(s);
  };
  Integer p = read_int(true);
  Integer q = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    q = read_int(false);
    if (q == 0) throw ParseError("zero denominator", i, "nonzero integer");
  }
  if (i != text.size()) throw ParseError("malformed rational '" + std::string(text) + "'", i, "end of number");
  return Rational(p, q);
}

// ---------------------------------------------------------------- UPoly

UPoly UPoly::monomial(int k, const Rational& a) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = a;
  return UPoly(std::move(c));
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& a) {
  if (a == 0) { c_.clear(); return *this; }
  for (auto& x : c_) x *= a;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
  const int db = b.degree();
  const Rational lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational t = r[k + db] / lb;
    q[k] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= t * b.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UPoly UPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  return UPoly(std::vector<Rational>(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end()));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Rational UPoly::eval(const Rational& t) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) { if (a < 0) os << "-"; }
    else os << (a < 0 ? " - " : " + ");
    first = false;
    if (i == 0) { os << mag.str(); continue; }
    if (mag != 1) os << mag.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) { den_ = UPoly(1); return; }
  if (den_.degree() > 0) {
    bool pure_power = true;
    for (int i = 0; i < den_.degree(); ++i)
      if (den_.coeff(i) != 0) { pure_power = false; break; }
    if (pure_power) {
      int k = std::min(den_.degree(), num_.valuation());
      if (k > 0) { num_ = num_.shift_down(k); den_ = den_.shift_down(k); }
    } else {
      UPoly g = UPoly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = UPoly::divmod(num_, g).first;
        den_ = UPoly::divmod(den_, g).first;
      }
    }
  }
  if (den_.leading() != 1) {
    Rational s = Rational(1) / den_.leading();
    num_ *= s;
    den_ *= s;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = UPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ = num_ * o.num_;
  bool trivial = den_.degree() == 0 && o.den_.degree() == 0;
  den_ = den_ * o.den_;
  if (!trivial) normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return *this *= RatFunc(o.den_, o.num_);
}

std::optional<Rational> RatFunc::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d == 0) return std::nullopt;
  return num_.eval(t) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string("c");
  return "(" + num_.to_string("c") + ")/(" + den_.to_string("c") + ")";
}

// ---------------------------------------------------------------- Cyclotomic

const UPoly& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  if (m < 1) throw std::domain_error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  UPoly p = UPoly::monomial(m) - UPoly(1);
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    // recursion without the lock: compute divisors first
    UPoly q = UPoly::monomial(d) - UPoly(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) q = UPoly::divmod(q, cache.at(e)).first;
    cache.emplace(d, q);
    p = UPoly::divmod(p, cache.at(d)).first;
  }
  return cache.emplace(m, p).first->second;
}

Cyclotomic::Cyclotomic(int order, UPoly residue) : order_(order), p_(std::move(residue)) {
  if (order_ < 1) throw std::domain_error("cyclotomic order must be positive");
  p_ = UPoly::divmod(p_, cyclotomic_polynomial(order_)).second;
  if (order_ <= 2) order_ = 1;
}

Cyclotomic Cyclotomic::zeta(int m) { return Cyclotomic(m, UPoly::x()); }

int Cyclotomic::common_order(int a, int b) {
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  throw FieldMismatch("cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b) +
                      " are not compatible");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  order_ = common_order(order_, o.order_);
  p_ += o.p_;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int m = common_order(order_, o.order_);
  *this = Cyclotomic(m, p_ * o.p_);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Cyclotomic::common_order(a.order_, b.order_);
  return a.p_ == b.p_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (order_ == 1) return Cyclotomic(Rational(1) / p_.coeff(0));
  // extended Euclid: s*p + t*Phi = 1
  UPoly r0 = cyclotomic_polynomial(order_), r1 = p_;
  UPoly s0 = UPoly(), s1 = UPoly(1);
  while (!r1.is_zero()) {
    auto [q, r] = UPoly::divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi is irreducible
  return Cyclotomic(order_, s0 * (Rational(1) / r0.coeff(0)));
}

std::vector<std::string> Cyclotomic::coefficient_strings() const {
  std::vector<std::string> out;
  int n = order_ == 1 ? 1 : cyclotomic_polynomial(order_).degree();
  for (int i = 0; i < n; ++i) out.push_back(p_.coeff(i).str());
  return out;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return p_.coeff(0).str();
  return "(" + p_.to_string(("z" + std::to_string(order_)).c_str()) + ")";
}

}  // namespace gc
