#pragma once

#include "loopforge/report.hpp"
#include "loopforge/verify.hpp"

namespace loopforge {

// Solution of the degree-m diagonal derivation problem on the windowed
// core: unknowns are one scalar per root slot (w, k) whose image slot
// exists, plus a dst x src block per weight-0 slot.  The space is cut out
// by the Leibniz constraints over all representable basis pairs and then
// compared against the predicted span.
struct DerivationSpace {
  AlgebraSpec spec{LoopTag::A1, 2, 1};
  int degree = 0;  // m
  int margin = 0;
  int unknowns = 0;

  std::vector<std::vector<Rational>> solved;     // kernel basis
  std::vector<std::vector<Rational>> predicted;  // generator images
  std::vector<std::string> predicted_labels;
  int dim_solved = 0;
  int dim_predicted = 0;
  bool predicted_in_solved = false;
  bool solved_in_predicted = false;
  bool match = false;

  // layout
  std::map<std::pair<int, Weight>, int> root_cols;  // (k, w) -> col, -1 = killed
  struct ZeroBlock {
    int first_col = 0;
    int src_dim = 0;
    int dst_dim = 0;
  };
  std::map<int, ZeroBlock> zero_blocks;  // by source degree k

  bool in_domain(int k) const {
    return spec.in_window(k) && spec.in_window(k + degree);
  }
};

DerivationSpace solve_diagonal_derivations(const AlgebraSpec& spec, int m,
                                           int margin);

// Apply the derivation with the given coefficient vector to a component
// sitting at body degree k; module_parity tells which slice template the
// component decomposes in (needed off the core's own parity).  The result
// sits at degree k + ds.degree.  Throws DomainError outside the domain.
GradedElement apply_derivation(const DerivationSpace& ds, const CoreBasis& cb,
                               const std::vector<Rational>& coeffs, int k,
                               const Component& comp, bool module_parity);

// Convenience: apply to a homogeneous core element.
GradedElement apply_derivation(const DerivationSpace& ds, const CoreBasis& cb,
                               const std::vector<Rational>& coeffs,
                               const GradedElement& x);

// s_{2i} o d = d o s_{2i} on every basis element whose images stay in the
// window, for all even shifts with |2i| <= margin.
VerificationReport check_shift_commutation(const DerivationSpace& ds,
                                           const std::vector<Rational>& coeffs,
                                           int margin);

// The extension of an odd-degree twisted diagonal derivation to the
// parity-free ambient loop algebra (both g and the module at every degree).
struct AmbientDerivation {
  const DerivationSpace* ds;
  const CoreBasis* cb;
  std::vector<Rational> coeffs;

  // component at degree k with separate g and module parts
  GradedElement apply(int k, const Component& g_part,
                      const Component& s_part) const;
  GradedElement apply(const GradedElement& x) const;
  bool applicable(int k, bool has_g, bool has_s) const;
};

// Requires d to commute with s_2 (checked); returns the extension.
AmbientDerivation extend_derivation(const DerivationSpace& ds,
                                    const CoreBasis& cb,
                                    const std::vector<Rational>& coeffs);

// Leibniz for the extension on all applicable ambient pairs, restriction
// back to the core, and commutation with every in-window shift.
VerificationReport check_extension(const AmbientDerivation& ext, int margin);

// Split an ambient matrix component into fixed-algebra and module parts
// (B2 components are already split between mat and vec).
std::pair<Component, Component> split_parity(const AlgebraSpec& spec,
                                             const Component& comp);

// Derivation suite driving the solver over parity-appropriate degrees in
// {-2..2} plus the shift and extension lemmas for odd twisted degrees.
VerificationReport derivation_suite(const AlgebraSpec& spec, int max_degree,
                                    int margin);

}  // namespace loopforge
