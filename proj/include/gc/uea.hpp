#ifndef GC_UEA_HPP
#define GC_UEA_HPP

#include "gc/automorphism.hpp"
#include "gc/field.hpp"
#include "gc/pbw.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

namespace gc {

/// Sparse combination of normal PBW words with coefficients in S.
template <class S>
class UEAElement {
 public:
  using Terms = std::map<Word, S, WordLess>;

  UEAElement() = default;
  explicit UEAElement(EnginePtr e) : eng_(std::move(e)) {}

  static UEAElement one(EnginePtr e) { return scalar(std::move(e), S(1)); }
  static UEAElement scalar(EnginePtr e, const S& s) {
    UEAElement a(std::move(e));
    a.add_term(Word{}, s);
    return a;
  }
  static UEAElement generator(EnginePtr e, int basis_index) {
    UEAElement a(e);
    a.add_term(Word{static_cast<std::uint16_t>(e->position(basis_index))}, S(1));
    return a;
  }
  /// Linear combination of generators.
  static UEAElement linear(EnginePtr e, const SparseVec<S>& x) {
    UEAElement a(e);
    for (const auto& [i, c] : x) a.add_term(Word{static_cast<std::uint16_t>(e->position(i))}, c);
    return a;
  }
  static UEAElement from_q(EnginePtr e, const QTerms& q, const S& factor = S(1)) {
    UEAElement a(std::move(e));
    a.add_q(q, factor);
    return a;
  }

  const EnginePtr& engine() const { return eng_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const S& c) {
    if (gc::is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (gc::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add_q(const QTerms& q, const S& factor) {
    if (gc::is_zero(factor)) return;
    for (const auto& [w, c] : q) add_term(w, factor * S(c));
  }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }
  S counit() const { return coefficient(Word{}); }

  int filtration_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, eng_->filtration(w));
    return d;
  }
  /// 0/1, or nullopt for mixed parity (zero counts as even).
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [w, c] : terms_) {
      int q = eng_->parity(w);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p.value_or(0);
  }
  /// Parts of parity 0 and 1.
  std::pair<UEAElement, UEAElement> split_parity() const {
    UEAElement e(eng_), o(eng_);
    for (const auto& [w, c] : terms_) (eng_->parity(w) ? o : e).terms_.emplace(w, c);
    return {e, o};
  }

  UEAElement operator-() const {
    UEAElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  UEAElement& operator+=(const UEAElement& o) {
    adopt(o);
    for (const auto& [w, c] : o.reordered_terms(eng_)) add_term(w, c);
    return *this;
  }
  UEAElement& operator-=(const UEAElement& o) {
    adopt(o);
    for (const auto& [w, c] : o.reordered_terms(eng_)) add_term(w, -c);
    return *this;
  }
  UEAElement& operator*=(const S& s) {
    if (gc::is_zero(s)) { terms_.clear(); return *this; }
    for (auto& [w, c] : terms_) c = c * s;
    return *this;
  }
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const S& s) { return a *= s; }
  friend UEAElement operator*(const S& s, UEAElement a) { return a *= s; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) { return multiply(a, b); }
  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    if (a.eng_ && b.eng_ && a.eng_ != b.eng_) return a.terms_ == b.reordered_terms(a.eng_);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }

  /// Terms rewritten under another engine for the same algebra.
  Terms reordered_terms(const EnginePtr& target) const {
    if (!eng_ || !target || target == eng_) return terms_;
    if (target->algebra_ptr() != eng_->algebra_ptr() &&
        target->algebra().fingerprint() != eng_->algebra().fingerprint())
      throw OrderingMismatch("elements belong to different algebras");
    UEAElement r(target);
    for (const auto& [w, c] : terms_) r.add_q(target->normal_order(eng_->basis_word(w)), c);
    return r.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string coef = scalar_string(it->second);
      std::string mono = eng_->word_string(it->first);
      const bool simple = coef.find_first_of("( ") == std::string::npos && coef.find('-', 1) == std::string::npos;
      const bool neg = simple && coef[0] == '-';
      if (neg) coef = coef.substr(1);
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (it->first.empty()) s += simple ? coef : "(" + coef + ")";
      else if (coef == "1") s += mono;
      else s += (simple ? coef : "(" + coef + ")") + "*" + mono;
    }
    return s;
  }

  /// Sorted list of [monomial, coefficient] pairs.
  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, c] : terms_)
      out.push_back(nlohmann::json::array({eng_->word_string(w), FieldTraits<S>::to_json(c)}));
    return out;
  }

 private:
  void adopt(const UEAElement& o) {
    if (!eng_) eng_ = o.eng_;
  }

  EnginePtr eng_;
  Terms terms_;
};

/// Re-normal-orders `a` under `target`.
template <class S>
UEAElement<S> reorder(const UEAElement<S>& a, const EnginePtr& target) {
  UEAElement<S> r(target);
  for (const auto& [w, c] : a.reordered_terms(target)) r.add_term(w, c);
  return r;
}

template <class S>
UEAElement<S> multiply(const UEAElement<S>& a, const UEAElement<S>& b) {
  const EnginePtr& e = a.engine() ? a.engine() : b.engine();
  auto bt = b.reordered_terms(e);
  UEAElement<S> r(e);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : bt) r.add_q(e->mul(wa, wb), ca * cb);
  return r;
}

/// coeff * (word of basis indices) in normal form.
template <class S>
UEAElement<S> normal_order(const EnginePtr& e, const std::vector<int>& basis_word, const S& coeff = S(1)) {
  return UEAElement<S>::from_q(e, e->normal_order(basis_word), coeff);
}

template <class S> S counit(const UEAElement<S>& a) { return a.counit(); }
template <class S> int filtration_degree(const UEAElement<S>& a) { return a.filtration_degree(); }

/// Weight of a homogeneous element; nullopt when inhomogeneous. Zero has weight 0.
template <class S>
std::optional<Weight> weight_of(const UEAElement<S>& a) {
  std::optional<Weight> w;
  for (const auto& [word, c] : a.terms()) {
    auto ww = a.engine()->weight(word);
    if (!ww) return std::nullopt;
    if (w && *w != *ww) return std::nullopt;
    w = ww;
  }
  if (!w && a.engine()) return Weight(a.engine()->algebra().rank(), Rational(0));
  return w;
}

/// e_i * a.
template <class S>
UEAElement<S> left_mul_generator(int basis_index, const UEAElement<S>& a) {
  const EnginePtr& e = a.engine();
  const int p = e->position(basis_index);
  UEAElement<S> r(e);
  for (const auto& [w, c] : a.terms()) r.add_q(e->left_mul(p, w), c);
  return r;
}

/// a * x for x a linear combination of generators.
template <class S>
UEAElement<S> right_mul_linear(const UEAElement<S>& a, const SparseVec<S>& x) {
  const EnginePtr& e = a.engine();
  UEAElement<S> r(e);
  for (const auto& [i, xi] : x) {
    const int p = e->position(i);
    for (const auto& [w, c] : a.terms()) r.add_q(e->right_mul(w, p), c * xi);
  }
  return r;
}

/// Drops every term whose trailing generator lies in `sub`; `sub` must be the last block of the ordering.
template <class S>
UEAElement<S> reduce_mod_right_subalgebra(const UEAElement<S>& a, const std::set<int>& sub) {
  const EnginePtr& e = a.engine();
  const int n = e->dim();
  const int first = n - static_cast<int>(sub.size());
  for (int p = 0; p < n; ++p)
    if ((p >= first) != static_cast<bool>(sub.count(e->basis_index(p))))
      throw OrderingMismatch("ordering does not place the subalgebra as a suffix block");
  UEAElement<S> r(e);
  for (const auto& [w, c] : a.terms())
    if (w.empty() || w.back() < first) r.add_term(w, c);
  return r;
}

/// ad_phi(u)(v) = u v - (-1)^{|u||v|} v phi(u); mixed v is split by parity.
template <class S>
UEAElement<S> twisted_adjoint(const GradedAutomorphism<S>& phi, int u, const UEAElement<S>& v) {
  auto par = v.parity();
  if (!par) {
    auto [ve, vo] = v.split_parity();
    return twisted_adjoint(phi, u, ve) + twisted_adjoint(phi, u, vo);
  }
  UEAElement<S> r = left_mul_generator(u, v);
  UEAElement<S> t = right_mul_linear(v, phi.apply(u));
  if (v.engine()->algebra().parity(u) && *par) r += t;
  else r -= t;
  return r;
}

/// ad_phi(w_1) o ... o ad_phi(w_k) (v).
template <class S>
UEAElement<S> twisted_adjoint_monomial(const GradedAutomorphism<S>& phi, const std::vector<int>& word,
                                       UEAElement<S> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = twisted_adjoint(phi, *it, v);
  return v;
}

/// Promotes coefficients into a larger field.
template <class T, class S>
UEAElement<T> promote(const UEAElement<S>& a) {
  UEAElement<T> r(a.engine());
  for (const auto& [w, c] : a.terms()) r.add_term(w, T(c));
  return r;
}

/// Image under the algebra homomorphism sending basis vector i to images[i] (coordinates in target's algebra).
template <class S>
UEAElement<S> map_homomorphism(const UEAElement<S>& a, const EnginePtr& target, const std::vector<Coords>& images) {
  UEAElement<S> r(target);
  for (const auto& [w, c] : a.terms()) {
    UEAElement<S> prod = UEAElement<S>::scalar(target, c);
    for (int i : a.engine()->basis_word(w)) {
      SparseVec<S> img;
      for (const auto& [k, x] : images[i]) img.emplace(k, S(x));
      prod = right_mul_linear(prod, img);
    }
    r += prod;
  }
  return r;
}

}  // namespace gc

#endif
