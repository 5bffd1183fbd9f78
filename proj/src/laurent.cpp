#include "loopforge/laurent.hpp"

#include <sstream>

namespace loopforge {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw DomainError("bad rational literal: '" + s + "'");
  }
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (d != 0) os << "*t^" << d;
  }
  return os.str();
}

}  // namespace loopforge
