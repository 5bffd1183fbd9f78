#pragma once

#include "loopforge/matrix.hpp"

#include <vector>

namespace loopforge {

// Almost-scalar diagonal: a finitely supported diagonal plus an explicit
// multiple of iota (the identity of infinite size).  The scalar part is what
// survives outside every truncation window.
struct DiagExt {
  IndexUniverse u;
  std::map<int, Rational> finite;  // no zero values stored
  Rational scalar = 0;             // coefficient of iota

  DiagExt() = default;
  explicit DiagExt(IndexUniverse uni) : u(uni) {}

  Rational entry(int i) const {
    auto it = finite.find(i);
    return (it == finite.end() ? Rational(0) : it->second) + scalar;
  }
  void set_finite(int i, const Rational& v) {
    if (is_zero(v))
      finite.erase(i);
    else
      finite[i] = v;
  }
  void add_finite(int i, const Rational& v) { set_finite(i, finite_at(i) + v); }
  Rational finite_at(int i) const {
    auto it = finite.find(i);
    return it == finite.end() ? Rational(0) : it->second;
  }
  bool zero() const { return finite.empty() && is_zero(scalar); }

  Rational finite_trace() const {
    Rational t = 0;
    for (const auto& [i, v] : finite) t += v;
    return t;
  }

  Mat finite_matrix() const {
    Mat m(u);
    for (const auto& [i, v] : finite) m.set(i, i, v);
    return m;
  }

  DiagExt& operator+=(const DiagExt& o) {
    u = join_universe(u, o.u, "diag add: universe mismatch");
    for (const auto& [i, v] : o.finite) add_finite(i, v);
    scalar += o.scalar;
    return *this;
  }
  friend DiagExt operator+(DiagExt a, const DiagExt& b) {
    a += b;
    return a;
  }
  friend DiagExt operator-(const DiagExt& a) {
    DiagExt r(a.u);
    for (const auto& [i, v] : a.finite) r.finite[i] = -v;
    r.scalar = -a.scalar;
    return r;
  }
  friend DiagExt operator-(DiagExt a, const DiagExt& b) { return a + (-b); }
  DiagExt& scale(const Rational& c) {
    if (is_zero(c)) {
      finite.clear();
      scalar = 0;
      return *this;
    }
    for (auto& [i, v] : finite) v *= c;
    scalar *= c;
    return *this;
  }
  friend DiagExt operator*(const Rational& c, DiagExt a) {
    a.scale(c);
    return a;
  }
  // Two representations of the same diagonal compare equal: both are kept
  // normalized (finite part holds offsets from the scalar).
  friend bool operator==(const DiagExt& a, const DiagExt& b) {
    return a.finite == b.finite && a.scalar == b.scalar;
  }
};

inline DiagExt iota(IndexUniverse u) {
  DiagExt d(u);
  d.scalar = 1;
  return d;
}
inline DiagExt diag_unit(IndexUniverse u, int i, const Rational& v = 1) {
  DiagExt d(u);
  d.set_finite(i, v);
  return d;
}

// [p, x]: entry (i,j) of the result is (p_i - p_j) * x_ij; the scalar part
// of p contributes nothing.
inline Mat diag_bracket(const DiagExt& p, const Mat& x) {
  IndexUniverse u =
      join_universe(p.u, x.universe(), "diag bracket: universe mismatch");
  Mat r(u);
  for (const auto& [ij, v] : x.entries()) {
    Rational f = p.finite_at(ij.first) - p.finite_at(ij.second);
    if (!is_zero(f)) r.set(ij.first, ij.second, f * v);
  }
  return r;
}

struct AlmostScalarSplit {
  DiagExt traceless;  // supported on the window, trace 0 there
  Rational scalar;    // multiplies iota restricted to the window
  DiagExt residual;   // vanishes on the window
};

// Decomposition T = h_I + F iota_I + T_{off I} over a finite window I.
AlmostScalarSplit normalize_almost_scalar(const DiagExt& p,
                                          const std::vector<int>& window);

// Sparse column vector over the universe (the natural module of o_{2I+1}).
struct SparseVector {
  IndexUniverse u;
  std::map<int, Rational> v;

  SparseVector() = default;
  explicit SparseVector(IndexUniverse uni) : u(uni) {}

  Rational at(int i) const {
    auto it = v.find(i);
    return it == v.end() ? Rational(0) : it->second;
  }
  void set(int i, const Rational& c) {
    if (is_zero(c))
      v.erase(i);
    else
      v[i] = c;
  }
  void add_to(int i, const Rational& c) { set(i, at(i) + c); }
  bool zero() const { return v.empty(); }

  SparseVector& operator+=(const SparseVector& o) {
    u = join_universe(u, o.u, "vector add: universe mismatch");
    for (const auto& [i, c] : o.v) add_to(i, c);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a += b;
    return a;
  }
  friend SparseVector operator-(const SparseVector& a) {
    SparseVector r(a.u);
    for (const auto& [i, c] : a.v) r.v[i] = -c;
    return r;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    return a + (-b);
  }
  SparseVector& scale(const Rational& c) {
    if (is_zero(c)) {
      v.clear();
      return *this;
    }
    for (auto& [i, x] : v) x *= c;
    return *this;
  }
  friend SparseVector operator*(const Rational& c, SparseVector a) {
    a.scale(c);
    return a;
  }
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.v == b.v;
  }
};

inline SparseVector unit_vector(IndexUniverse u, int i,
                                const Rational& c = 1) {
  SparseVector w(u);
  w.set(i, c);
  return w;
}

inline SparseVector mat_vec(const Mat& x, const SparseVector& w) {
  IndexUniverse u =
      join_universe(x.universe(), w.u, "matrix-vector: universe mismatch");
  SparseVector r(u);
  for (const auto& [ij, c] : x.entries()) {
    Rational wc = w.at(ij.second);
    if (!is_zero(wc)) r.add_to(ij.first, c * wc);
  }
  return r;
}

}  // namespace loopforge
