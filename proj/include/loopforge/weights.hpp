#pragma once

#include "loopforge/diag.hpp"

#include <map>
#include <string>

namespace loopforge {

// Integer combination of the coordinate functionals eps_i.  On a diagonal
// p this evaluates as sum_i c_i * p(i) (the scalar part of p contributes
// scalar * sum_i c_i).
struct Weight {
  std::map<int, int> eps;  // no zero coefficients stored

  Weight() = default;
  static Weight unit(int i, int c = 1) {
    Weight w;
    w.set(i, c);
    return w;
  }

  int coeff(int i) const {
    auto it = eps.find(i);
    return it == eps.end() ? 0 : it->second;
  }
  void set(int i, int c) {
    if (c == 0)
      eps.erase(i);
    else
      eps[i] = c;
  }
  void add(int i, int c) { set(i, coeff(i) + c); }
  bool zero() const { return eps.empty(); }

  Rational eval(const DiagExt& p) const {
    Rational acc = 0;
    int total = 0;
    for (const auto& [i, c] : eps) {
      acc += Rational(c) * p.finite_at(i);
      total += c;
    }
    return acc + Rational(total) * p.scalar;
  }

  // Squared length under the standard inner product (eps_i, eps_j) = d_ij.
  int norm2() const {
    int n = 0;
    for (const auto& [i, c] : eps) n += c * c;
    return n;
  }
  // (mu, nu) under the same inner product.
  int dot(const Weight& o) const {
    int n = 0;
    for (const auto& [i, c] : eps) n += c * o.coeff(i);
    return n;
  }

  friend Weight operator+(Weight a, const Weight& b) {
    for (const auto& [i, c] : b.eps) a.add(i, c);
    return a;
  }
  friend Weight operator-(const Weight& a) {
    Weight r;
    for (const auto& [i, c] : a.eps) r.eps[i] = -c;
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    return a + (-b);
  }
  friend Weight operator*(int k, const Weight& a) {
    Weight r;
    if (k != 0)
      for (const auto& [i, c] : a.eps) r.eps[i] = k * c;
    return r;
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.eps == b.eps;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.eps < b.eps;
  }

  std::string str() const;
};

// Cartan integer <mu, nu> = 2 (mu, nu) / (nu, nu).
inline int cartan_integer(const Weight& mu, const Weight& nu) {
  if (mu.zero()) return 0;
  int num = 2 * mu.dot(nu), den = nu.norm2();
  if (den == 0 || num % den != 0)
    throw DomainError("cartan integer is not integral");
  return num / den;
}

}  // namespace loopforge
