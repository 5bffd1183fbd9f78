#include "loopforge/form.hpp"

#include "loopforge/linalg.hpp"

namespace loopforge {

namespace {

bool retains_iota(const AlgebraSpec& spec) {
  return spec.tag == LoopTag::A1 || spec.tag == LoopTag::C2 ||
         spec.tag == LoopTag::BC2;
}

// Split a matrix slot into its trace-zero core and the coefficient of the
// e_nn complement axis (A1 only; the other types have no diagonal
// complement beyond iota at truncation).
struct SlotSplit {
  Rational znn;   // coefficient of e_nn
  Rational iota;  // coefficient of the scalar part
};

SlotSplit slot_split(const AlgebraSpec& spec, const Component& comp) {
  SlotSplit s;
  s.iota = comp.iota;
  if (spec.tag == LoopTag::A1) s.znn = comp.mat.trace();
  return s;
}

}  // namespace

FormSpec FormSpec::standard(const AlgebraSpec& spec) {
  FormSpec f;
  if (retains_iota(spec))
    f.set_psi(0, ComplementGen::Iota, ComplementGen::Iota, 1);
  return f;
}

Rational form_eval(const AlgebraSpec& spec, const FormSpec& form,
                   const GradedElement& x, const GradedElement& y) {
  Rational total = 0;
  const Rational& a = form.trace_scale;
  for (const auto& [k, cx] : x.body) {
    auto it = y.body.find(-k);
    if (it == y.body.end()) continue;
    const Component& cy = it->second;
    if (spec.tag == LoopTag::B2 && spec.module_degree(k)) {
      StructuralS s(SType::B, spec.universe());
      total += a * Rational(2) * s_pairing(s, cx.vec, cy.vec);
      continue;
    }
    SlotSplit sx = slot_split(spec, cx), sy = slot_split(spec, cy);
    total += a * (mul(cx.mat, cy.mat).trace() - sx.znn * sy.znn);
    total += form.psi_at(k, ComplementGen::Iota, ComplementGen::Iota) *
             sx.iota * sy.iota;
    total += form.psi_at(k, ComplementGen::Iota, ComplementGen::Znn) *
             (sx.iota * sy.znn + sx.znn * sy.iota);
    total += form.psi_at(k, ComplementGen::Znn, ComplementGen::Znn) *
             sx.znn * sy.znn;
  }
  for (const auto& [m, v] : x.dshift) {
    auto it = y.dshift.find(-m);
    if (it == y.dshift.end()) continue;
    total += form.psi_at(m, ComplementGen::DShift, ComplementGen::DShift) *
             v * it->second;
  }
  total += x.c * y.d + x.d * y.c + form.dd * x.d * y.d;
  return total;
}

GradedElement apply_d0(const GradedElement& x) {
  GradedElement r;
  for (const auto& [k, comp] : x.body)
    if (k != 0) r.add_component(k, Rational(k) * comp);
  for (const auto& [m, v] : x.dshift)
    if (m != 0 && !is_zero(v)) r.dshift[m] = Rational(m) * v;
  return r;
}

Rational cocycle(const AlgebraSpec& spec, const FormSpec& form,
                 const GradedElement& u, const GradedElement& v) {
  return form_eval(spec, form, apply_d0(u), v);
}

GradedElement extended_bracket(const AlgebraSpec& spec, const FormSpec& form,
                               const GradedElement& x,
                               const GradedElement& y) {
  GradedElement r = loop_bracket(spec, x, y);
  r.c += cocycle(spec, form, x, y);
  return r;
}

std::vector<GradedElement> cartan_h_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> out;
  if (spec.tag == LoopTag::A1) {
    IndexUniverse u = spec.universe();
    for (int i = 1; i <= spec.rank; ++i)
      out.push_back(make_element(0, Component{unit_matrix(u, i, i), {}, 0}));
    out.push_back(make_element(0, Component{Mat(u), {}, 1}));
  } else {
    for (const auto& h : cartan_basis(spec.simple()))
      out.push_back(make_element(0, Component{h.finite_matrix(), {}, 0}));
  }
  out.push_back(central_element());
  out.push_back(derivation_element());
  return out;
}

GradedElement t_xi(const AlgebraSpec& spec, const FormSpec& form,
                   const Weight& mu, int m) {
  auto basis = cartan_h_basis(spec);
  const size_t n = basis.size();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      gram[i][j] = form_eval(spec, form, basis[i], basis[j]);
    DiagExt diag(spec.universe());
    Component comp = basis[i].component(0);
    for (const auto& [ij, v] : comp.mat.entries())
      diag.set_finite(ij.first, v);
    diag.scalar = comp.iota;
    rhs[i] = mu.eval(diag) + Rational(m) * basis[i].d;
  }
  std::vector<Rational> coeffs;
  if (!solve_dense(gram, rhs, coeffs))
    throw SingularFormError("t_xi: Gram matrix of B on H is singular");
  GradedElement t;
  for (size_t i = 0; i < n; ++i) t += coeffs[i] * basis[i];
  return t;
}

std::map<int, std::vector<GradedElement>> radical_of_form(
    const AlgebraSpec& spec, const FormSpec& form) {
  if (spec.tag != LoopTag::A1)
    throw DomainError("radical_of_form: expects the A1 ambient algebra");
  IndexUniverse u = spec.universe();
  auto slice_basis = [&](int k) {
    std::vector<GradedElement> out;
    for (int i = 1; i <= spec.rank; ++i)
      for (int j = 1; j <= spec.rank; ++j)
        if (i != j)
          out.push_back(make_element(k, Component{unit_matrix(u, i, j), {}, 0}));
    for (int i = 1; i <= spec.rank; ++i)
      out.push_back(make_element(k, Component{unit_matrix(u, i, i), {}, 0}));
    out.push_back(make_element(k, Component{Mat(u), {}, 1}));
    if (k == 0) {
      out.push_back(central_element());
      out.push_back(derivation_element());
    }
    return out;
  };

  std::map<int, std::vector<GradedElement>> out;
  for (int k = -spec.window; k <= spec.window; ++k) {
    auto rows_basis = slice_basis(k);
    auto cols_basis = slice_basis(-k);
    // u = sum_i v_i b_i is radical at degree k iff sum_i v_i B(b_i, c_j) = 0
    // for every j; feed the pairing columns as constraint rows.
    RowSpace tspace;
    for (size_t j = 0; j < cols_basis.size(); ++j) {
      SparseRow row;
      for (size_t i = 0; i < rows_basis.size(); ++i)
        append_term(row, static_cast<int>(i),
                    form_eval(spec, form, rows_basis[i], cols_basis[j]));
      tspace.insert(normalize_row(std::move(row)));
    }
    std::vector<GradedElement> rad;
    for (const auto& kv : tspace.kernel_basis(static_cast<int>(rows_basis.size()))) {
      GradedElement z;
      for (size_t i = 0; i < rows_basis.size(); ++i)
        if (!is_zero(kv[i])) z += kv[i] * rows_basis[i];
      rad.push_back(std::move(z));
    }
    out[k] = std::move(rad);
  }
  return out;
}

}  // namespace loopforge
