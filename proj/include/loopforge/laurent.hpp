#pragma once

#include "loopforge/rational.hpp"

#include <map>

namespace loopforge {

// Sparse Laurent polynomial in one variable, degree -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant) {  // NOLINT: implicit on purpose
    set(0, constant);
  }
  LaurentPoly(int i) { set(0, Rational(i)); }  // NOLINT

  static LaurentPoly monomial(int degree, const Rational& coeff = Rational(1)) {
    LaurentPoly p;
    p.set(degree, coeff);
    return p;
  }

  void set(int degree, const Rational& coeff) {
    if (is_zero(coeff))
      coeffs_.erase(degree);
    else
      coeffs_[degree] = coeff;
  }
  void add_to(int degree, const Rational& coeff) {
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
      set(degree, coeff);
    } else {
      it->second += coeff;
      if (is_zero(it->second)) coeffs_.erase(it);
    }
  }

  Rational coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_to(d, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_to(d, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [d, c] : a.coeffs_) r.set(d, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_) r.add_to(da + db, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  std::map<int, Rational> coeffs_;
};

inline bool is_zero(const LaurentPoly& p) { return p.zero(); }

// Graded pairing on monomial degrees: 1 if m + n = 0, else 0.
inline Rational epsilon_pairing(int m, int n) {
  return Rational(m + n == 0 ? 1 : 0);
}

}  // namespace loopforge
