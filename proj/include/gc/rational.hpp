#ifndef GC_RATIONAL_HPP
#define GC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace gc {

/// Exact rational with expression templates disabled (safe with `auto` and Eigen).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace gc

#endif
