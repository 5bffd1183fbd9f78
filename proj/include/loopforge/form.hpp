#pragma once

#include "loopforge/algebra.hpp"

#include <tuple>

namespace loopforge {

// Generators of the canonical diagonal complement T' at truncation, used to
// key the psi tables:
//   Iota   - the scalar part (present for A1 and at odd twisted degrees),
//   Znn    - e_nn at the distinguished last window index (A1 only),
//   DShift - the shifted degree derivation of the matching degree.
enum class ComplementGen { Iota = 0, Znn = 1, DShift = 2 };

// Invariant form: traceScale * (tr (x) eps) on the core, psi_m on the
// complement generators per degree, B(c, d0) = 1, B(U, d0) = 0,
// B(d0, d0) = dd.
struct FormSpec {
  Rational trace_scale = 1;
  Rational dd = 0;
  // symmetric tables keyed by (|m|, min(gen), max(gen))
  std::map<std::tuple<int, int, int>, Rational> psi;

  Rational psi_at(int m, ComplementGen a, ComplementGen b) const {
    int x = static_cast<int>(a), y = static_cast<int>(b);
    if (x > y) std::swap(x, y);
    auto it = psi.find({m < 0 ? -m : m, x, y});
    return it == psi.end() ? Rational(0) : it->second;
  }
  void set_psi(int m, ComplementGen a, ComplementGen b, const Rational& v) {
    int x = static_cast<int>(a), y = static_cast<int>(b);
    if (x > y) std::swap(x, y);
    psi[{m < 0 ? -m : m, x, y}] = v;
  }

  // The standard choice: traceScale 1, psi identically zero except
  // psi_0(iota, iota) = 1 when the ambient algebra retains iota.
  static FormSpec standard(const AlgebraSpec& spec);
};

// B(x, y), exact.  Symmetric, invariant, graded.
Rational form_eval(const AlgebraSpec& spec, const FormSpec& form,
                   const GradedElement& x, const GradedElement& y);

// d0 applied coefficient-wise: body degree k scaled by k, dshift m by m;
// central and derivation coefficients dropped.
GradedElement apply_d0(const GradedElement& x);

// 2-cocycle phi(u, v) = B(d0(u), v) on the loop algebra plus complement.
Rational cocycle(const AlgebraSpec& spec, const FormSpec& form,
                 const GradedElement& u, const GradedElement& v);

// loop_bracket plus the central 2-cocycle term.
GradedElement extended_bracket(const AlgebraSpec& spec, const FormSpec& form,
                               const GradedElement& x, const GradedElement& y);

// Basis of the truncated Cartan H = T (x) t^0 + Fc + Fd0 (for A1 the
// diagonal part is e_11..e_nn plus iota; otherwise the Cartan of g).
std::vector<GradedElement> cartan_h_basis(const AlgebraSpec& spec);

// The unique t_xi in H with B(h, t_xi) = xi(h) for all h in H, where
// xi = mu + m*delta.  Throws SingularFormError when the Gram matrix of B
// on H is degenerate.
GradedElement t_xi(const AlgebraSpec& spec, const FormSpec& form,
                   const Weight& mu, int m);

// Per-degree radical of B on the extended A1 algebra over the full
// diagonal space: degree -> basis of the Gram kernel.
std::map<int, std::vector<GradedElement>> radical_of_form(
    const AlgebraSpec& spec, const FormSpec& form);

}  // namespace loopforge
