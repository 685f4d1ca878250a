#ifndef GC_SUPERPOLY_HPP
#define GC_SUPERPOLY_HPP

#include "gc/errors.hpp"
#include "gc/field.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gc {

/// Polynomial in commuting even variables and anticommuting odd variables (odd exponents <= 1).
/// Even variables have degree 1, odd variables degree 1/2; degrees are reported doubled.
template <class S>
class SuperPolynomial {
 public:
  struct Key {
    std::vector<int> e;
    std::uint64_t odd = 0;
    int twice_degree() const {
      int d = std::popcount(odd);
      for (int x : e) d += 2 * x;
      return d;
    }
    friend bool operator==(const Key& a, const Key& b) { return a.e == b.e && a.odd == b.odd; }
    /// Graded lexicographic.
    friend bool operator<(const Key& a, const Key& b) {
      int da = a.twice_degree(), db = b.twice_degree();
      if (da != db) return da < db;
      if (a.e != b.e) return a.e < b.e;
      return a.odd < b.odd;
    }
  };
  using Terms = std::map<Key, S>;

  SuperPolynomial() = default;
  SuperPolynomial(std::vector<std::string> even, std::vector<std::string> odd = {})
      : even_(std::move(even)), odd_(std::move(odd)) {
    if (odd_.size() > 64) throw Unsupported("too many odd variables");
  }

  static SuperPolynomial constant(const SuperPolynomial& like, const S& c) {
    SuperPolynomial p = like.empty_like();
    p.add_term(p.unit_key(), c);
    return p;
  }
  static SuperPolynomial even_variable(const SuperPolynomial& like, int i) {
    SuperPolynomial p = like.empty_like();
    Key k = p.unit_key();
    k.e[i] = 1;
    p.add_term(k, S(1));
    return p;
  }
  static SuperPolynomial odd_variable(const SuperPolynomial& like, int j) {
    SuperPolynomial p = like.empty_like();
    Key k = p.unit_key();
    k.odd = std::uint64_t(1) << j;
    p.add_term(k, S(1));
    return p;
  }
  /// c0 + sum_i c_i x_i over even variables.
  static SuperPolynomial affine(const SuperPolynomial& like, const std::vector<Rational>& coeffs, const Rational& c0) {
    SuperPolynomial p = constant(like, S(c0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) p += even_variable(like, static_cast<int>(i)) * S(coeffs[i]);
    return p;
  }

  SuperPolynomial empty_like() const { return SuperPolynomial(even_, odd_); }
  Key unit_key() const { return Key{std::vector<int>(even_.size(), 0), 0}; }

  const std::vector<std::string>& even_vars() const { return even_; }
  const std::vector<std::string>& odd_vars() const { return odd_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const S& c) {
    if (gc::is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (gc::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Doubled total degree; -1 for zero.
  int twice_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.twice_degree(); }
  bool has_odd() const {
    for (const auto& [k, c] : terms_)
      if (k.odd) return true;
    return false;
  }
  S coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? S(0) : it->second;
  }
  S constant_term() const { return coefficient(unit_key()); }
  SuperPolynomial homogeneous_part(int twice_deg) const {
    SuperPolynomial p = empty_like();
    for (const auto& [k, c] : terms_)
      if (k.twice_degree() == twice_deg) p.terms_.emplace(k, c);
    return p;
  }

  SuperPolynomial operator-() const {
    SuperPolynomial p = *this;
    for (auto& [k, c] : p.terms_) c = -c;
    return p;
  }
  SuperPolynomial& operator+=(const SuperPolynomial& o) {
    check_vars(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SuperPolynomial& operator-=(const SuperPolynomial& o) {
    check_vars(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SuperPolynomial& operator*=(const S& s) {
    if (gc::is_zero(s)) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c = c * s;
    return *this;
  }
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const S& s) { return a *= s; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    a.check_vars(b);
    SuperPolynomial p = a.empty_like();
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        if (ka.odd & kb.odd) continue;
        Key k{ka.e, ka.odd | kb.odd};
        for (std::size_t i = 0; i < k.e.size(); ++i) k.e[i] += kb.e[i];
        int inv = 0;
        for (std::uint64_t m = kb.odd; m; m &= m - 1) {
          int j = std::countr_zero(m);
          inv += std::popcount(ka.odd >> (j + 1));
        }
        S c = ca * cb;
        p.add_term(k, (inv & 1) ? S(-c) : c);
      }
    return p;
  }
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

  /// Value at even coordinates lambda; odd terms are not allowed.
  S evaluate(const std::vector<Rational>& lambda) const {
    if (lambda.size() != even_.size()) throw Unsupported("evaluation point has wrong length");
    S out(0);
    for (const auto& [k, c] : terms_) {
      if (k.odd) throw Unsupported("cannot evaluate a polynomial with odd variables at a weight");
      Rational m = 1;
      for (std::size_t i = 0; i < k.e.size(); ++i)
        for (int t = 0; t < k.e[i]; ++t) m *= lambda[i];
      out += c * S(m);
    }
    return out;
  }

  /// Replaces even variable i by images[i]; odd part kept.
  SuperPolynomial substitute_even(const std::vector<SuperPolynomial>& images) const {
    SuperPolynomial out = empty_like();
    std::vector<std::vector<SuperPolynomial>> powers(even_.size());
    auto power = [&](std::size_t i, int e) -> const SuperPolynomial& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(*this, S(1)));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      return pw[e];
    };
    for (const auto& [k, c] : terms_) {
      SuperPolynomial t = constant(*this, c);
      for (std::size_t i = 0; i < k.e.size(); ++i)
        if (k.e[i]) t = t * power(i, k.e[i]);
      if (k.odd) {
        Key ok = unit_key();
        ok.odd = k.odd;
        SuperPolynomial o = empty_like();
        o.add_term(ok, S(1));
        t = t * o;
      }
      out += t;
    }
    return out;
  }

  /// Exact quotient by d (even polynomials only), or nullopt when d does not divide.
  std::optional<SuperPolynomial> divide_exact(const SuperPolynomial& d) const {
    check_vars(d);
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (has_odd() || d.has_odd()) throw Unsupported("division with odd variables");
    SuperPolynomial q = empty_like(), r = *this;
    const auto& [dk, dc] = *d.terms_.rbegin();
    while (!r.is_zero()) {
      const auto [rk, rc] = *r.terms_.rbegin();
      Key t = unit_key();
      for (std::size_t i = 0; i < t.e.size(); ++i) {
        t.e[i] = rk.e[i] - dk.e[i];
        if (t.e[i] < 0) return std::nullopt;
      }
      SuperPolynomial m = empty_like();
      m.add_term(t, rc / dc);
      q += m;
      r -= m * d;
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono = monomial_string(it->first);
      std::string coef = scalar_string(it->second);
      bool simple = coef.find_first_of("+ ") == std::string::npos && coef.find('-', 1) == std::string::npos &&
                    coef.find('(') == std::string::npos;
      bool neg = simple && coef[0] == '-';
      if (neg) coef = coef.substr(1);
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (mono == "1") s += simple ? coef : "(" + coef + ")";
      else if (coef == "1") s += mono;
      else s += (simple ? coef : "(" + coef + ")") + "*" + mono;
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [k, c] : terms_) t.push_back(nlohmann::json::array({monomial_string(k), FieldTraits<S>::to_json(c)}));
    return nlohmann::json{{"variables", {{"even", even_}, {"odd", odd_}}}, {"terms", t}, {"text", to_string()}};
  }

  std::string monomial_string(const Key& k) const {
    std::string s;
    for (std::size_t i = 0; i < k.e.size(); ++i) {
      if (!k.e[i]) continue;
      if (!s.empty()) s += "*";
      s += even_[i];
      if (k.e[i] > 1) s += "^" + std::to_string(k.e[i]);
    }
    for (std::size_t j = 0; j < odd_.size(); ++j)
      if (k.odd >> j & 1) s += (s.empty() ? "" : "*") + odd_[j];
    return s.empty() ? "1" : s;
  }

 private:
  void check_vars(const SuperPolynomial& o) const {
    if (even_ != o.even_ || odd_ != o.odd_) throw FieldMismatch("polynomials over different variable sets");
  }
  std::vector<std::string> even_, odd_;
  Terms terms_;
};

template <class T, class S>
SuperPolynomial<T> promote(const SuperPolynomial<S>& p) {
  SuperPolynomial<T> out(p.even_vars(), p.odd_vars());
  for (const auto& [k, c] : p.terms()) out.add_term(typename SuperPolynomial<T>::Key{k.e, k.odd}, T(c));
  return out;
}

}  // namespace gc

#endif
