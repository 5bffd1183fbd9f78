#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace loopforge {

// Exact arithmetic over Q. cpp_rational keeps gcd(|num|, den) = 1 and
// den > 0 after every operation, so values are always in canonical form.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UniverseMismatch : Error {
  using Error::Error;
};
struct WindowOverflow : Error {
  explicit WindowOverflow(const std::string& what, int deg)
      : Error(what), degree(deg) {}
  int degree;
};
struct DomainError : Error {
  using Error::Error;
};
struct SingularFormError : Error {
  using Error::Error;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s);

}  // namespace loopforge
