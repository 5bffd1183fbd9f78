#include "loopforge/structural.hpp"

namespace loopforge {

Mat sigma(SType type, const Mat& x) {
  if (x.zero()) return x;
  StructuralS s(type, x.universe());
  const IndexUniverse& u = x.universe();
  // (s x^t s)_{ij} = s_{i,pi(i)} x_{pi(j),pi(i)} s_{pi(j),j}; iterate entries
  // (p,q) of x and scatter to (pi(q), pi(p)).
  Rational sign = (type == SType::C) ? Rational(1) : Rational(-1);
  Mat r(u);
  for (const auto& [pq, v] : x.entries()) {
    int p = pq.first, q = pq.second;
    int i = u.pair_of(q), j = u.pair_of(p);
    r.add_to(i, j, sign * s.row_value(i) * s.row_value(p) * v);
  }
  return r;
}

DiagExt sigma_diag(SType type, const DiagExt& p) {
  IndexUniverse u = p.u;
  if (u.unset()) {
    DiagExt r = p;
    r.scale(Rational(-1));
    return r;
  }
  StructuralS s(type, u);
  // On a diagonal d, sigma(d)_{ii} = sign * s_{i,pi(i)} s_{pi(i),i} d_{pi(i)}.
  // The two s-values multiply to s^2's diagonal: +1 for B/D, -1 for C, so
  // sigma(d) = -d o pi in every type (sign * s^2-value = -1).
  DiagExt r(u);
  for (const auto& [i, v] : p.finite) r.set_finite(u.pair_of(i), -v);
  r.scalar = -p.scalar;
  return r;
}

Mat tau(const Mat& x) {
  const IndexUniverse& u = x.universe();
  if (u.unset()) return x;
  if (u.kind != UniverseKind::Doubled)
    throw DomainError("tau: expects a Doubled universe");
  int j0 = u.rank, mj0 = 2 * u.rank;
  auto rho = [&](int i) { return i == j0 ? mj0 : (i == mj0 ? j0 : i); };
  Mat r(u);
  for (const auto& [pq, v] : x.entries())
    r.set(rho(pq.first), rho(pq.second), v);
  return r;
}

DiagExt tau_diag(const DiagExt& p) {
  const IndexUniverse& u = p.u;
  if (u.unset()) return p;
  if (u.kind != UniverseKind::Doubled)
    throw DomainError("tau: expects a Doubled universe");
  int j0 = u.rank, mj0 = 2 * u.rank;
  auto rho = [&](int i) { return i == j0 ? mj0 : (i == mj0 ? j0 : i); };
  DiagExt r(u);
  for (const auto& [i, v] : p.finite) r.set_finite(rho(i), v);
  r.scalar = p.scalar;
  return r;
}

Rational s_pairing(const StructuralS& s, const SparseVector& v,
                   const SparseVector& w) {
  Rational acc = 0;
  for (const auto& [i, c] : v.v) {
    // (s w)_i = s_{i,pi(i)} w_{pi(i)}
    Rational wc = w.at(s.u.pair_of(i));
    if (!is_zero(wc)) acc += c * s.row_value(i) * wc;
  }
  return acc;
}

Mat d_operator(const StructuralS& s, const SparseVector& v,
               const SparseVector& w) {
  // D_{v,w} = v (s w)^t - w (s v)^t
  Mat r(s.u);
  auto scatter = [&](const SparseVector& a, const SparseVector& b,
                     const Rational& sign) {
    // sign * a (s b)^t : entry (i, j) = sign * a_i * s_{j,pi(j)} b_{pi(j)}
    for (const auto& [i, ai] : a.v)
      for (const auto& [k, bk] : b.v) {
        int j = s.u.pair_of(k);  // pi(j) = k
        r.add_to(i, j, sign * ai * s.row_value(j) * bk);
      }
  };
  scatter(v, w, Rational(1));
  scatter(w, v, Rational(-1));
  return r;
}

AlmostScalarSplit normalize_almost_scalar(const DiagExt& p,
                                          const std::vector<int>& window) {
  if (window.empty()) throw DomainError("normalize: empty window");
  Rational mean = 0;
  for (int i : window) mean += p.entry(i);
  mean /= Rational(static_cast<int>(window.size()));

  AlmostScalarSplit out;
  out.traceless = DiagExt(p.u);
  out.scalar = mean;
  out.residual = p;
  for (int i : window) {
    out.traceless.set_finite(i, p.entry(i) - mean);
    // subtract traceless_i + mean so the residual vanishes on the window
    out.residual.add_finite(i, -(p.entry(i) - mean) - mean);
  }
  return out;
}

}  // namespace loopforge
