#pragma once

#include "loopforge/diag.hpp"

namespace loopforge {

enum class SType { B, C, D };

// The structural matrix s: block antidiagonal iota blocks, with -iota in the
// upper block for type C and the extra 1 in the corner for type B.  Then
// s^2 = iota for B and D, s^2 = -iota for C.
struct StructuralS {
  SType type;
  IndexUniverse u;

  StructuralS(SType t, IndexUniverse uni) : type(t), u(uni) {
    bool ok = (t == SType::B) ? u.kind == UniverseKind::DoubledPlusOne
                              : u.kind == UniverseKind::Doubled;
    if (!ok) throw DomainError("structural s: universe does not match type");
  }

  // Value of the single nonzero entry in row i (at column pair_of(i)).
  Rational row_value(int i) const {
    if (type == SType::C && i <= u.rank) return Rational(-1);
    return Rational(1);
  }

  Mat matrix() const {
    Mat s(u);
    for (int i = 1; i <= u.size(); ++i) s.set(i, u.pair_of(i), row_value(i));
    return s;
  }
};

// The period-2 automorphism with the split simple fixed algebra:
//   sigma(x) = -s x^t s for B and D (fixed algebra o),
//   sigma(x) =  s x^t s for C      (fixed algebra sp).
Mat sigma(SType type, const Mat& x);

// sigma restricted to diagonals: negated entry-permutation by the pairing
// for B/D, entry-permutation negated... for C the same formula applies; both
// reduce to h_i -> -h_{pair(i)} on finite parts and iota -> -iota for B/D,
// iota -> -iota for C as well (s iota s = +-iota).
DiagExt sigma_diag(SType type, const DiagExt& p);

// Conjugation by the transposition g = e_{j0,-j0} + e_{-j0,j0} exchanging
// the last pair (rank, 2*rank) of a Doubled universe.
Mat tau(const Mat& x);
DiagExt tau_diag(const DiagExt& p);

// The bilinear form on the natural module determined by s: (v, w) = v^t s w.
Rational s_pairing(const StructuralS& s, const SparseVector& v,
                   const SparseVector& w);

// D_{v,w}(u) = (w,u) v - (v,u) w, as a matrix: v (s w)^t - w (s v)^t.
Mat d_operator(const StructuralS& s, const SparseVector& v,
               const SparseVector& w);

}  // namespace loopforge
