#ifndef GC_PARSE_HPP
#define GC_PARSE_HPP

#include "gc/harish_chandra.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace gc {

/// Named scalar literals of a field: "c" for ratfun-c, "zM" for cyclotomic:M.
template <class S> std::optional<S> field_literal(const std::string&, const FieldSpec&) { return std::nullopt; }
template <> inline std::optional<RatFunc> field_literal<RatFunc>(const std::string& s, const FieldSpec& f) {
  if (s == "c" && f.kind == FieldSpec::Kind::ratfunc) return RatFunc::c();
  return std::nullopt;
}
template <> inline std::optional<Cyclotomic> field_literal<Cyclotomic>(const std::string& s, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::cyclotomic && s == "z" + std::to_string(f.order)) return Cyclotomic::zeta(f.order);
  return std::nullopt;
}

/// Recursive-descent parser for
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := power (('*' power) | ('/' scalar-power))*
///   power := atom ['^' integer]
///   atom := integer | generator | field literal | '(' expr ')'
template <class S>
class ElementParser {
 public:
  ElementParser(std::string_view text, EnginePtr e, FieldSpec f) : s_(text), e_(std::move(e)), f_(f) {}

  UEAElement<S> parse() {
    auto v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character", "operator or end of input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(msg, i_, expected);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) { ++i_; return true; }
    return false;
  }
  UEAElement<S> expr() {
    UEAElement<S> v(e_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  UEAElement<S> term() {
    UEAElement<S> v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        const std::size_t at = i_;
        UEAElement<S> d = power();
        auto s = as_scalar(d);
        if (!s) { i_ = at; fail("division by a non-scalar", "scalar divisor"); }
        if (is_zero(*s)) { i_ = at; fail("division by zero", "nonzero divisor"); }
        v *= S(1) / *s;
      } else {
        return v;
      }
    }
  }
  UEAElement<S> power() {
    UEAElement<S> base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("missing exponent", "nonnegative integer");
    const int k = std::stoi(std::string(s_.substr(st, i_ - st)));
    UEAElement<S> r = UEAElement<S>::one(e_);
    for (int t = 0; t < k; ++t) r = r * base;
    return r;
  }
  UEAElement<S> atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input", "number, generator or '('");
    const char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      auto v = expr();
      if (!eat(')')) fail("unbalanced parenthesis", "')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return UEAElement<S>::scalar(e_, S(Rational(parse_rational(s_.substr(st, i_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name(s_.substr(st, i_ - st));
      if (auto g = e_->algebra().index_of(name)) return UEAElement<S>::generator(e_, *g);
      if (auto lit = field_literal<S>(name, f_)) return UEAElement<S>::scalar(e_, *lit);
      i_ = st;
      if (name == "c") fail("parameter c is only available over ratfun-c", "generator name");
      fail("unknown symbol '" + name + "'", "generator name");
    }
    fail(std::string("unexpected character '") + ch + "'", "number, generator or '('");
  }
  std::optional<S> as_scalar(const UEAElement<S>& a) const {
    if (a.is_zero()) return S(0);
    if (a.size() == 1 && a.terms().begin()->first.empty()) return a.terms().begin()->second;
    return std::nullopt;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  EnginePtr e_;
  FieldSpec f_;
};

template <class S>
UEAElement<S> parse_element(std::string_view text, const EnginePtr& e, const FieldSpec& f) {
  return ElementParser<S>(text, e, f).parse();
}

/// Parses a polynomial on the Cartan even part written with generator names.
template <class S>
SuperPolynomial<S> parse_cartan_polynomial(std::string_view text, const EnginePtr& hc, const BorelChoice& b,
                                          const FieldSpec& f) {
  auto a = parse_element<S>(text, hc, f);
  std::set<int> cartan(hc->algebra().cartan_even().begin(), hc->algebra().cartan_even().end());
  for (const auto& [w, c] : a.terms())
    for (auto p : w)
      if (!cartan.count(hc->basis_index(p))) throw ParseError("target polynomial uses a non-Cartan generator", 0, "Cartan generator");
  return hc_project_group(a, b);
}

}  // namespace gc

#endif
