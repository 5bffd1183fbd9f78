#pragma once

#include "loopforge/laurent.hpp"
#include "loopforge/universe.hpp"

#include <map>
#include <utility>

namespace loopforge {

// Finitely supported sparse matrix; no zero entries are stored.  The scalar
// type is Rational for the graded representation and LaurentPoly when a
// whole loop-algebra element is flattened into one matrix.
template <class S>
class FinitaryMatrix {
 public:
  using Entry = std::pair<int, int>;

  FinitaryMatrix() = default;
  explicit FinitaryMatrix(IndexUniverse u) : u_(u) {}

  const IndexUniverse& universe() const { return u_; }
  const std::map<Entry, S>& entries() const { return e_; }
  bool zero() const { return e_.empty(); }

  S at(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? S{} : it->second;
  }
  void set(int i, int j, const S& v) {
    check_index(i, j);
    if (is_zero(v))
      e_.erase({i, j});
    else
      e_[{i, j}] = v;
  }
  void add_to(int i, int j, const S& v) {
    check_index(i, j);
    auto it = e_.find({i, j});
    if (it == e_.end()) {
      if (!is_zero(v)) e_[{i, j}] = v;
    } else {
      it->second += v;
      if (is_zero(it->second)) e_.erase(it);
    }
  }

  FinitaryMatrix& operator+=(const FinitaryMatrix& o) {
    u_ = join_universe(u_, o.u_, "matrix add: universe mismatch");
    for (const auto& [ij, v] : o.e_) add_to(ij.first, ij.second, v);
    return *this;
  }
  FinitaryMatrix& operator-=(const FinitaryMatrix& o) {
    u_ = join_universe(u_, o.u_, "matrix sub: universe mismatch");
    for (const auto& [ij, v] : o.e_) add_to(ij.first, ij.second, S{} - v);
    return *this;
  }
  friend FinitaryMatrix operator+(FinitaryMatrix a, const FinitaryMatrix& b) {
    a += b;
    return a;
  }
  friend FinitaryMatrix operator-(FinitaryMatrix a, const FinitaryMatrix& b) {
    a -= b;
    return a;
  }
  friend FinitaryMatrix operator-(const FinitaryMatrix& a) {
    FinitaryMatrix r(a.u_);
    for (const auto& [ij, v] : a.e_) r.e_[ij] = S{} - v;
    return r;
  }
  FinitaryMatrix& scale(const S& c) {
    if (is_zero(c)) {
      e_.clear();
      return *this;
    }
    for (auto& [ij, v] : e_) v = v * c;
    return *this;
  }
  friend FinitaryMatrix operator*(const S& c, FinitaryMatrix a) {
    a.scale(c);
    return a;
  }

  friend FinitaryMatrix mul(const FinitaryMatrix& a, const FinitaryMatrix& b) {
    IndexUniverse u =
        join_universe(a.u_, b.u_, "matrix mul: universe mismatch");
    FinitaryMatrix r(u);
    if (a.zero() || b.zero()) return r;
    for (const auto& [ik, va] : a.e_) {
      auto it = b.e_.lower_bound({ik.second, 0});
      for (; it != b.e_.end() && it->first.first == ik.second; ++it)
        r.add_to(ik.first, it->first.second, va * it->second);
    }
    return r;
  }

  FinitaryMatrix transpose() const {
    FinitaryMatrix r(u_);
    for (const auto& [ij, v] : e_) r.e_[{ij.second, ij.first}] = v;
    return r;
  }
  S trace() const {
    S t{};
    for (const auto& [ij, v] : e_)
      if (ij.first == ij.second) t += v;
    return t;
  }

  friend bool operator==(const FinitaryMatrix& a, const FinitaryMatrix& b) {
    if (!a.u_.unset() && !b.u_.unset() && !(a.u_ == b.u_)) return false;
    return a.e_ == b.e_;
  }

 private:
  void check_index(int i, int j) const {
    if (!u_.unset() && (!u_.contains(i) || !u_.contains(j)))
      throw DomainError("matrix index outside universe");
  }

  IndexUniverse u_;
  std::map<Entry, S> e_;
};

using Mat = FinitaryMatrix<Rational>;
using LaurentMat = FinitaryMatrix<LaurentPoly>;

template <class S>
FinitaryMatrix<S> mat_bracket(const FinitaryMatrix<S>& x,
                              const FinitaryMatrix<S>& y) {
  return mul(x, y) - mul(y, x);
}

template <class S = Rational>
FinitaryMatrix<S> unit_matrix(IndexUniverse u, int i, int j,
                              const S& v = S{1}) {
  FinitaryMatrix<S> m(u);
  m.set(i, j, v);
  return m;
}

// iota restricted to the universe (the finite identity at truncation).
template <class S = Rational>
FinitaryMatrix<S> identity_on(IndexUniverse u) {
  FinitaryMatrix<S> m(u);
  for (int i = 1; i <= u.size(); ++i) m.set(i, i, S{1});
  return m;
}

}  // namespace loopforge
