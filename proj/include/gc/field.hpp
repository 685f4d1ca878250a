#ifndef GC_FIELD_HPP
#define GC_FIELD_HPP

#include "gc/cyclotomic.hpp"
#include "gc/errors.hpp"
#include "gc/ratfunc.hpp"
#include "gc/rational.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <optional>
#include <string>

namespace gc {

/// Runtime description of the coefficient field chosen on the command line.
struct FieldSpec {
  enum class Kind { rational, cyclotomic, ratfunc };
  Kind kind = Kind::rational;
  int order = 1;  ///< cyclotomic order

  static FieldSpec parse(const std::string& text);
  std::string name() const;
};

template <class T> struct FieldTraits;

template <> struct FieldTraits<Rational> {
  static constexpr const char* name = "Q";
  static bool is_zero(const Rational& a) { return a == 0; }
  static std::string to_string(const Rational& a) { return a.str(); }
  static nlohmann::json to_json(const Rational& a) { return a.str(); }
  static std::optional<Rational> root_of_unity(int m, const FieldSpec&) {
    if (m == 1) return Rational(1);
    if (m == 2) return Rational(-1);
    return std::nullopt;
  }
};

template <> struct FieldTraits<RatFunc> {
  static constexpr const char* name = "ratfun-c";
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
  static std::string to_string(const RatFunc& a) { return a.to_string(); }
  static nlohmann::json to_json(const RatFunc& a) { return a.to_string(); }
  static std::optional<RatFunc> root_of_unity(int m, const FieldSpec&) {
    if (m == 1) return RatFunc(1);
    if (m == 2) return RatFunc(-1);
    return std::nullopt;
  }
};

template <> struct FieldTraits<Cyclotomic> {
  static constexpr const char* name = "cyclotomic";
  static bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
  static std::string to_string(const Cyclotomic& a) { return a.to_string(); }
  static nlohmann::json to_json(const Cyclotomic& a) {
    return nlohmann::json{{"order", a.order()}, {"coeffs", a.coefficient_strings()}};
  }
  static std::optional<Cyclotomic> root_of_unity(int m, const FieldSpec& f) {
    if (m == 1) return Cyclotomic(1);
    if (m == 2) return Cyclotomic(-1);
    if (f.kind == FieldSpec::Kind::cyclotomic && f.order % m == 0) {
      Cyclotomic z = Cyclotomic::zeta(f.order), r(1);
      for (int i = 0; i < f.order / m; ++i) r *= z;
      return r;
    }
    return std::nullopt;
  }
};

template <class T> bool is_zero(const T& a) { return FieldTraits<T>::is_zero(a); }
template <class T> std::string scalar_string(const T& a) { return FieldTraits<T>::to_string(a); }

}  // namespace gc

namespace Eigen {

template <> struct NumTraits<gc::RatFunc> : GenericNumTraits<gc::RatFunc> {
  typedef gc::RatFunc Real;
  typedef gc::RatFunc NonInteger;
  typedef gc::RatFunc Nested;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 20, AddCost = 100, MulCost = 100 };
  static gc::RatFunc epsilon() { return gc::RatFunc(0); }
  static gc::RatFunc dummy_precision() { return gc::RatFunc(0); }
  static int digits10() { return 0; }
};

template <> struct NumTraits<gc::Cyclotomic> : GenericNumTraits<gc::Cyclotomic> {
  typedef gc::Cyclotomic Real;
  typedef gc::Cyclotomic NonInteger;
  typedef gc::Cyclotomic Nested;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 20, AddCost = 50, MulCost = 100 };
  static gc::Cyclotomic epsilon() { return gc::Cyclotomic(0); }
  static gc::Cyclotomic dummy_precision() { return gc::Cyclotomic(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif
