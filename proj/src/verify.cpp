#include "loopforge/verify.hpp"

#include "loopforge/linalg.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace loopforge {

namespace {

using PosKey = std::array<int, 4>;  // {degree, kind, a, b}; kind 0 mat,
                                    // 1 vec, 2 iota, 3 c, 4 d, 5 dshift

SparseRow vectorize(const GradedElement& x, KeyInterner<PosKey>& keys) {
  SparseRow row;
  for (const auto& [k, comp] : x.body) {
    for (const auto& [ij, v] : comp.mat.entries())
      append_term(row, keys.id({k, 0, ij.first, ij.second}), v);
    for (const auto& [i, v] : comp.vec.v)
      append_term(row, keys.id({k, 1, i, 0}), v);
    append_term(row, keys.id({k, 2, 0, 0}), comp.iota);
  }
  append_term(row, keys.id({0, 3, 0, 0}), x.c);
  append_term(row, keys.id({0, 4, 0, 0}), x.d);
  for (const auto& [m, v] : x.dshift)
    append_term(row, keys.id({m, 5, 0, 0}), v);
  return normalize_row(std::move(row));
}

// Coefficient lambda with r == lambda * b.element(); throws DomainError when
// r is not proportional to the basis vector.
Rational root_coord(const BasisVector& b, const GradedElement& r) {
  if (r.zero()) return Rational(0);
  Component comp = r.component(b.degree);
  Rational lead_val = 0, base_val = 0;
  if (!b.comp.mat.zero()) {
    auto ij = b.comp.mat.entries().begin()->first;
    base_val = b.comp.mat.at(ij.first, ij.second);
    lead_val = comp.mat.at(ij.first, ij.second);
  } else {
    int i = b.comp.vec.v.begin()->first;
    base_val = b.comp.vec.at(i);
    lead_val = comp.vec.at(i);
  }
  Rational lambda = lead_val / base_val;
  if (!(r == lambda * b.element()))
    throw DomainError("element not proportional to root-space basis");
  return lambda;
}

std::string pair_witness(const BasisVector& a, const BasisVector& b) {
  return "[" + a.label + ", " + b.label + "]";
}

}  // namespace

DiagExt coroot_in(const AlgebraSpec& spec, const Weight& mu) {
  if (!is_root(spec.datum_system(), spec.rank, mu))
    throw DomainError("coroot: not a root of the algebra's system");
  DiagExt h(spec.universe());
  const int n2 = mu.norm2();
  for (const auto& [i, c] : mu.eps) {
    Rational v = Rational(2 * c) / Rational(n2);
    h.add_finite(i, v);
    if (spec.letter() != SimpleLetter::A) h.add_finite(spec.rank + i, -v);
  }
  return h;
}

std::string Prog::str() const {
  if (mod == 1) return "Z";
  std::ostringstream os;
  os << mod << "Z";
  if (res != 0) os << "+" << res;
  return os.str();
}

RootDatum builtin_datum(LoopTag tag, int rank) {
  RootDatum rd;
  rd.rank = rank;
  rd.S0 = Prog::Z();
  switch (tag) {
    case LoopTag::A1:
      rd.delta = RootSystem::A;
      rd.S[LengthClass::Short] = Prog::Z();
      break;
    case LoopTag::D1:
      rd.delta = RootSystem::D;
      rd.S[LengthClass::Short] = Prog::Z();
      break;
    case LoopTag::B1:
      rd.delta = RootSystem::B;
      rd.S[LengthClass::Short] = Prog::Z();
      rd.S[LengthClass::Long] = Prog::Z();
      break;
    case LoopTag::C1:
      rd.delta = RootSystem::C;
      rd.S[LengthClass::Short] = Prog::Z();
      rd.S[LengthClass::Long] = Prog::Z();
      break;
    case LoopTag::B2:
      rd.delta = RootSystem::B;
      rd.S[LengthClass::Short] = Prog::Z();
      rd.S[LengthClass::Long] = Prog::twoZ();
      break;
    case LoopTag::C2:
      rd.delta = RootSystem::C;
      rd.S[LengthClass::Short] = Prog::Z();
      rd.S[LengthClass::Long] = Prog::twoZ();
      break;
    case LoopTag::BC2:
      rd.delta = RootSystem::BC;
      rd.S[LengthClass::Short] = Prog::Z();
      rd.S[LengthClass::Long] = Prog::Z();
      rd.S[LengthClass::ExtraLong] = Prog::twoZplus1();
      break;
  }
  return rd;
}

VerificationReport check_root_datum(const RootDatum& rd) {
  VerificationReport rep;
  rep.suite = "rootdatum";
  if (rd.rank > 4) throw DomainError("root datum check: rank above 4");
  auto roots = roots_of(rd.delta, rd.rank);
  auto cls = [&](const Weight& w) {
    return root_length(rd.delta, rd.rank, w);
  };

  // (S0): the union of the S_mu generates Z.
  int gen = 0;
  for (const auto& [c, p] : rd.S) gen = std::gcd(gen, p.generated());
  rep.add("S0-generates", gen == 1,
          "union of progressions generates " + std::to_string(gen) + "Z");

  // (S1): S_nu - <nu,mu> S_mu inside S_{nu - <nu,mu> mu}.
  {
    bool ok = true;
    std::string wit;
    for (const auto& nu : roots) {
      for (const auto& mu : roots) {
        int k = cartan_integer(nu, mu);
        Weight target = nu - k * mu;
        Prog lhs =
            k == 0 ? rd.at(cls(nu)) : rd.at(cls(nu)) + rd.at(cls(mu)).scaled(-k);
        if (!lhs.subset_of(rd.at(cls(target)))) {
          ok = false;
          wit = "nu=" + nu.str() + " mu=" + mu.str() + ": " + lhs.str() +
                " not inside " + rd.at(cls(target)).str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("S1-closure", ok, wit);
  }

  // (S2): 0 in S_mu for reduced roots.
  {
    bool ok = true;
    std::string wit;
    for (const auto& mu : roots) {
      bool reduced = true;
      if (rd.delta == RootSystem::BC) {
        Weight half;
        bool even = true;
        for (const auto& [i, c] : mu.eps) {
          if (c % 2 != 0) even = false;
          half.set(i, c / 2);
        }
        reduced = !(even && is_root(rd.delta, rd.rank, half));
      }
      if (reduced && !rd.at(cls(mu)).contains(0)) {
        ok = false;
        wit = "0 not in S_" + mu.str();
        break;
      }
    }
    rep.add("S2-zero", ok, wit);
  }

  // (S3): S_{2 mu} disjoint from 2 S_mu (reducedness).
  {
    bool ok = true;
    std::string wit;
    for (const auto& mu : roots) {
      Weight twice = 2 * mu;
      if (!is_root(rd.delta, rd.rank, twice)) continue;
      if (!rd.at(cls(twice)).disjoint(rd.at(cls(mu)).scaled(2))) {
        ok = false;
        wit = "S_" + twice.str() + " meets 2*S_" + mu.str();
        break;
      }
    }
    rep.add("S3-reduced", ok, wit);
  }

  // (S4): S_0 = S + S for a short root.
  {
    Prog s = rd.at(LengthClass::Short);
    Prog ss = s + s;
    rep.add("S4-S0", ss == rd.S0 && rd.S0.subset_of(ss),
            "S+S = " + ss.str() + " but S0 = " + rd.S0.str());
  }
  return rep;
}

namespace {

// Spurious term injected by the fault fixtures: the first root basis vector
// of a different weight at the same degree, if one exists.
GradedElement grading_fault_term(const CoreBasis& cb, int degree,
                                 const Weight& avoid) {
  auto it = cb.slices.find(degree);
  if (it == cb.slices.end()) return {};
  for (const auto& b : it->second.roots)
    if (!(b.w == avoid)) return b.element();
  return {};
}

}  // namespace

VerificationReport check_lie_torus(const AlgebraSpec& spec, bool extended,
                                   const FormSpec& form, FaultInjection fault) {
  VerificationReport rep;
  rep.suite = std::string("torus:") + tag_name(spec.tag);
  CoreBasis cb = core_basis(spec);
  auto flat = cb.flat();
  auto bracket = [&](const GradedElement& x, const GradedElement& y) {
    return extended ? extended_bracket(spec, form, x, y)
                    : loop_bracket(spec, x, y);
  };

  // (LT1) brackets stay in the graded slot of the summed weight and degree.
  {
    bool ok = true;
    std::string wit;
    bool fault_pending = fault == FaultInjection::GradingBreak;
    for (const auto* a : flat) {
      for (const auto* b : flat) {
        int k = a->degree + b->degree;
        if (!spec.in_window(k)) continue;
        GradedElement r = bracket(a->element(), b->element());
        if (fault_pending && !a->w.zero() && !b->w.zero()) {
          r += grading_fault_term(cb, k, a->w + b->w);
          fault_pending = false;
        }
        Weight w = a->w + b->w;
        bool good = true;
        Rational cpart = r.c;
        r.c = 0;
        if (!w.zero()) {
          if (!is_zero(cpart)) good = false;
          const BasisVector* slot = cb.slice(k).find_root(w);
          if (slot == nullptr) {
            good = good && r.zero();
          } else if (good) {
            try {
              root_coord(*slot, r);
            } catch (const DomainError&) {
              good = false;
            }
          }
        } else {
          if (!is_zero(cpart) && !(extended && k == 0)) good = false;
          if (good && !r.zero()) {
            try {
              zero_slot_coords(cb.slice(k), r.component(k));
              GradedElement rest = r;
              rest.body.erase(k);
              good = rest.zero();
            } catch (const DomainError&) {
              good = false;
            }
          }
        }
        if (!good) {
          ok = false;
          wit = pair_witness(*a, *b) + " leaves slot (" + w.str() + ", " +
                std::to_string(k) + ")";
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("LT1-grading", ok, wit);
  }

  // (LT2) every zero slot is spanned by opposite root-space brackets.
  {
    bool ok = true;
    std::string wit;
    for (const auto& [g, slice] : cb.slices) {
      KeyInterner<PosKey> keys;
      RowSpace span;
      for (const auto& [h, hslice] : cb.slices) {
        auto jt = cb.slices.find(g - h);
        if (jt == cb.slices.end()) continue;
        for (const auto& x : hslice.roots) {
          const BasisVector* y = jt->second.find_root(-x.w);
          if (y == nullptr) continue;
          span.insert(vectorize(bracket(x.element(), y->element()), keys));
        }
      }
      int expect = static_cast<int>(slice.zero.size()) +
                   ((extended && g == 0) ? 1 : 0);
      if (span.rank() != expect) {
        ok = false;
        wit = "degree " + std::to_string(g) + ": span dim " +
              std::to_string(span.rank()) + " expected " +
              std::to_string(expect);
        break;
      }
    }
    rep.add("LT2-zero-spans", ok, wit);
  }

  // (LT3) coroot action by Cartan integers, exhaustively.
  {
    bool ok = true;
    std::string wit;
    for (const auto& [g, slice] : cb.slices) {
      for (const auto& x : slice.roots) {
        const BasisVector* y = cb.slice(-g).find_root(-x.w);
        if (y == nullptr) {
          ok = false;
          wit = "no opposite slot for " + x.label;
          break;
        }
        GradedElement t = loop_bracket(spec, x.element(), y->element());
        t.c = 0;
        Rational a;
        try {
          a = root_coord(x, loop_bracket(spec, t, x.element()));
        } catch (const DomainError&) {
          a = 0;
        }
        if (is_zero(a) || t.zero()) {
          ok = false;
          wit = "[" + x.label + ", " + y->label + "] does not act on " +
                x.label;
          break;
        }
        GradedElement tprime = (Rational(2) / a) * t;
        // the normalized t must be the coroot of the weight
        GradedElement crt = make_element(
            0, Component{coroot_in(spec, x.w).finite_matrix(), {}, 0});
        if (!(tprime == crt)) {
          ok = false;
          wit = "normalized [" + x.label + ", " + y->label +
                "] differs from the coroot";
          break;
        }
        for (const auto* z : flat) {
          GradedElement zz = z->element();
          GradedElement lhs = loop_bracket(spec, tprime, zz);
          int ci = cartan_integer(z->w, x.w);
          if (!(lhs == Rational(ci) * zz)) {
            ok = false;
            wit = "[" + x.label + "^vee, " + z->label + "] != <" +
                  z->w.str() + "," + x.w.str() + "> z";
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("LT3-coroots", ok, wit);
  }

  // (LT4) one-dimensional root spaces; reduced roots present at degree 0;
  // non-reduced roots absent at even degrees.
  {
    bool ok = true;
    std::string wit;
    auto datum_roots = roots_of(spec.datum_system(), spec.rank);
    for (const auto& mu : datum_roots) {
      bool reduced = true;
      {
        Weight half;
        bool even = true;
        for (const auto& [i, c] : mu.eps) {
          if (c % 2 != 0) even = false;
          half.set(i, c / 2);
        }
        reduced = !(even && is_root(spec.datum_system(), spec.rank, half));
      }
      if (reduced && cb.slice(0).find_root(mu) == nullptr) {
        ok = false;
        wit = "L_(" + mu.str() + ")^0 is empty for a reduced root";
        break;
      }
      if (!reduced) {
        for (const auto& [g, slice] : cb.slices)
          if (g % 2 == 0 && slice.find_root(mu) != nullptr) {
            ok = false;
            wit = "non-reduced root " + mu.str() + " present at even degree";
            break;
          }
      }
      if (!ok) break;
    }
    rep.add("LT4-dims", ok, wit);
  }

  // (LT5) the support degrees generate Z.
  {
    int gen = 0;
    for (const auto& [g, slice] : cb.slices)
      if (slice.dim() > 0 && g != 0) gen = std::gcd(gen, g);
    rep.add("LT5-support", gen == 1,
            "support generates " + std::to_string(gen) + "Z");
  }
  return rep;
}

VerificationReport jacobi_suite(const AlgebraSpec& spec, const FormSpec& form,
                                FaultInjection fault) {
  VerificationReport rep;
  rep.suite = std::string("jacobi:") + tag_name(spec.tag);
  CoreBasis cb = core_basis(spec);
  auto flat = cb.flat();
  const int K = spec.window;
  auto inside = [K](int d) { return d >= -K && d <= K; };

  long checked = 0;
  bool ok = true;
  std::string wit;
  bool fault_pending = fault == FaultInjection::GradingBreak;
  for (size_t i = 0; i < flat.size() && ok; ++i) {
    for (size_t j = i + 1; j < flat.size() && ok; ++j) {
      int dij = flat[i]->degree + flat[j]->degree;
      if (!inside(dij)) continue;
      for (size_t k = j + 1; k < flat.size(); ++k) {
        int a = flat[i]->degree, b = flat[j]->degree, c = flat[k]->degree;
        if (!inside(b + c) || !inside(a + c) || !inside(a + b + c)) continue;
        GradedElement x = flat[i]->element(), y = flat[j]->element(),
                      z = flat[k]->element();
        GradedElement xy = extended_bracket(spec, form, x, y);
        GradedElement jac = extended_bracket(spec, form, xy, z);
        jac += extended_bracket(spec, form, extended_bracket(spec, form, y, z), x);
        jac += extended_bracket(spec, form, extended_bracket(spec, form, z, x), y);
        if (fault_pending) {
          jac += cb.slice(0).roots.front().element();
          fault_pending = false;
        }
        ++checked;
        if (!jac.zero()) {
          ok = false;
          wit = "triple (" + flat[i]->label + ", " + flat[j]->label + ", " +
                flat[k]->label + ")";
          break;
        }
      }
    }
  }
  rep.add("jacobi-exhaustive[" + std::to_string(checked) + " triples]", ok,
          wit);
  return rep;
}

GradedElement Rng::element(const AlgebraSpec& spec, const CoreBasis& cb,
                           int max_degree, bool with_complement,
                           bool with_cd) {
  GradedElement x;
  int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    int k = uniform(-max_degree, max_degree);
    const DegreeSlice& slice = cb.slice(k);
    int dim = slice.dim();
    if (dim == 0) continue;
    int pick = uniform(0, dim - 1);
    const BasisVector& b = pick < static_cast<int>(slice.roots.size())
                               ? slice.roots[static_cast<size_t>(pick)]
                               : slice.zero[static_cast<size_t>(
                                     pick - static_cast<int>(slice.roots.size()))];
    x += small_rational() * b.element();
  }
  if (with_complement) {
    int k = uniform(-max_degree, max_degree);
    Component comp;
    bool odd_slot = spec.module_degree(k);
    if (spec.tag == LoopTag::A1) {
      comp.mat = unit_matrix(spec.universe(), spec.rank, spec.rank,
                             small_rational());
      comp.iota = small_rational();
      x.add_component(k, comp);
    } else if ((spec.tag == LoopTag::C2 || spec.tag == LoopTag::BC2) &&
               odd_slot) {
      comp.iota = small_rational();
      x.add_component(k, comp);
    }
  }
  if (with_cd) {
    x.c += small_rational();
    x.d += small_rational();
  }
  return x;
}

VerificationReport forms_suite(const AlgebraSpec& spec, const FormSpec& form,
                               uint64_t seed, int triples) {
  VerificationReport rep;
  rep.suite = std::string("forms:") + tag_name(spec.tag);
  CoreBasis cb = core_basis(spec);
  Rng rng(seed);
  const int md = std::max(1, spec.window / 3);

  // symmetry and gradedness
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < triples && ok; ++t) {
      GradedElement x = rng.element(spec, cb, spec.window, true, true);
      GradedElement y = rng.element(spec, cb, spec.window, true, true);
      if (!(form_eval(spec, form, x, y) == form_eval(spec, form, y, x))) {
        ok = false;
        wit = "B(x,y) != B(y,x) at trial " + std::to_string(t);
      }
    }
    rep.add("form-symmetric", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    auto flat = cb.flat();
    for (const auto* a : flat) {
      for (const auto* b : flat) {
        if (a->w + b->w == Weight{} && a->degree + b->degree == 0) continue;
        if (!is_zero(form_eval(spec, form, a->element(), b->element()))) {
          ok = false;
          wit = "B" + pair_witness(*a, *b) + " != 0 off the diagonal";
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("form-graded", ok, wit);
  }

  // invariance on random triples including complement and c/d parts
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < triples && ok; ++t) {
      GradedElement x = rng.element(spec, cb, md, true, true);
      GradedElement y = rng.element(spec, cb, md, true, true);
      GradedElement z = rng.element(spec, cb, md, true, true);
      Rational lhs = form_eval(spec, form, extended_bracket(spec, form, x, y), z);
      Rational rhs = form_eval(spec, form, x, extended_bracket(spec, form, y, z));
      if (!(lhs == rhs)) {
        ok = false;
        wit = "B([x,y],z) != B(x,[y,z]) at trial " + std::to_string(t);
      }
    }
    rep.add("form-invariant", ok, wit);
  }

  // d0 skew
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < triples && ok; ++t) {
      GradedElement u = rng.element(spec, cb, spec.window, true, false);
      GradedElement v = rng.element(spec, cb, spec.window, true, false);
      if (!(form_eval(spec, form, apply_d0(u), v) ==
            -form_eval(spec, form, u, apply_d0(v)))) {
        ok = false;
        wit = "d0 not skew at trial " + std::to_string(t);
      }
    }
    rep.add("d0-skew", ok, wit);
  }

  // 2-cocycle: alternating and the cyclic identity
  {
    bool ok = true;
    std::string wit;
    for (int t = 0; t < triples && ok; ++t) {
      GradedElement u = rng.element(spec, cb, md, true, false);
      GradedElement v = rng.element(spec, cb, md, true, false);
      GradedElement w = rng.element(spec, cb, md, true, false);
      if (!is_zero(cocycle(spec, form, u, u))) {
        ok = false;
        wit = "phi(u,u) != 0 at trial " + std::to_string(t);
        break;
      }
      Rational cyc =
          cocycle(spec, form, loop_bracket(spec, u, v), w) +
          cocycle(spec, form, loop_bracket(spec, v, w), u) +
          cocycle(spec, form, loop_bracket(spec, w, u), v);
      if (!is_zero(cyc)) {
        ok = false;
        wit = "cocycle cyclic identity fails at trial " + std::to_string(t);
      }
    }
    rep.add("cocycle-identity", ok, wit);
  }

  // FPAT over every root pair, plus t_delta = c and t_{m delta} = m c.
  {
    bool ok = true;
    std::string wit;
    GradedElement tdelta = t_xi(spec, form, Weight{}, 1);
    if (!(tdelta == central_element())) {
      ok = false;
      wit = "t_delta != c";
    }
    if (ok && !(t_xi(spec, form, Weight{}, 2) == Rational(2) * central_element())) {
      ok = false;
      wit = "t_{2 delta} != 2c";
    }
    for (const auto& [g, slice] : cb.slices) {
      if (!ok) break;
      for (const auto& x : slice.roots) {
        const BasisVector* y = cb.slice(-g).find_root(-x.w);
        if (y == nullptr) continue;
        GradedElement lhs =
            extended_bracket(spec, form, x.element(), y->element());
        Rational bval = form_eval(spec, form, x.element(), y->element());
        GradedElement rhs = bval * t_xi(spec, form, x.w, g);
        if (!(lhs == rhs)) {
          ok = false;
          wit = "FPAT fails for " + pair_witness(x, *y);
          break;
        }
      }
    }
    rep.add("fpat", ok, wit);
  }

  // radical of the form on the full A1 ambient algebra
  if (spec.tag == LoopTag::A1) {
    bool ok = true;
    std::string wit;
    auto rad = radical_of_form(spec, form);  // psi0(iota,iota)=1 standard
    for (const auto& [k, basis] : rad) {
      if (k == 0) {
        if (!basis.empty()) {
          ok = false;
          wit = "degree-0 radical nonzero with psi0(iota,iota) = 1";
        }
      } else {
        GradedElement io = make_element(k, Component{Mat(spec.universe()), {}, 1});
        if (basis.size() != 1) {
          ok = false;
          wit = "degree " + std::to_string(k) + ": radical dim " +
                std::to_string(basis.size());
        } else {
          GradedElement z = basis[0];
          Rational s = z.component(k).iota;
          if (is_zero(s) || !((Rational(1) / s) * z == io)) {
            ok = false;
            wit = "degree " + std::to_string(k) + ": radical not iota t^k";
          }
        }
      }
      if (!ok) break;
    }
    if (ok) {
      FormSpec degen = form;
      degen.set_psi(0, ComplementGen::Iota, ComplementGen::Iota, 0);
      auto rad0 = radical_of_form(spec, degen);
      GradedElement io = make_element(0, Component{Mat(spec.universe()), {}, 1});
      const auto& basis = rad0[0];
      if (basis.size() != 1) {
        ok = false;
        wit = "degenerate psi0: degree-0 radical dim " +
              std::to_string(basis.size());
      } else {
        GradedElement z = basis[0];
        Rational s = z.component(0).iota;
        if (is_zero(s) || !((Rational(1) / s) * z == io)) {
          ok = false;
          wit = "degenerate psi0: degree-0 radical not F iota";
        }
      }
    }
    rep.add("radical", ok, wit);
  }
  return rep;
}

std::vector<GradedElement> default_generators(const AlgebraSpec& spec,
                                              bool drop_degree_one) {
  CoreBasis cb = core_basis(spec);
  std::vector<GradedElement> gens;
  const DegreeSlice& zero = cb.slice(0);
  for (const auto& b : zero.roots) gens.push_back(b.element());
  for (const auto& b : zero.zero) gens.push_back(b.element());
  if (!drop_degree_one) {
    const DegreeSlice& one = cb.slice(1);
    const BasisVector& beta = one.roots.front();
    gens.push_back(beta.element());
    const BasisVector* anti = cb.slice(-1).find_root(-beta.w);
    gens.push_back(anti->element());
  }
  return gens;
}

VerificationReport generation_check(const AlgebraSpec& spec,
                                    const std::vector<GradedElement>& gens) {
  VerificationReport rep;
  rep.suite = std::string("generation:") + tag_name(spec.tag);
  CoreBasis cb = core_basis(spec);

  KeyInterner<PosKey> keys;
  RowSpace span;
  std::vector<GradedElement> pool;
  for (const auto& g : gens)
    if (span.insert(vectorize(g, keys))) pool.push_back(g);

  // bracket closure to a fixpoint inside the window
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      GradedElement r;
      try {
        r = loop_bracket(spec, pool[i], pool[j]);
      } catch (const WindowOverflow&) {
        continue;
      }
      if (!r.zero() && span.insert(vectorize(r, keys))) pool.push_back(r);
    }
  }

  // The pool stays homogeneous for homogeneous generators, so per-degree
  // dimensions come from slicing the pool by body degree.
  std::map<int, RowSpace> per_degree;
  for (const auto& el : pool) {
    if (el.body.size() != 1) continue;
    per_degree[el.body.begin()->first].insert(vectorize(el, keys));
  }
  bool ok = true;
  std::string wit;
  for (const auto& [k, slice] : cb.slices) {
    int want = slice.dim();
    int have = per_degree.count(k) ? per_degree[k].rank() : 0;
    if (have != want) {
      ok = false;
      wit = "degree " + std::to_string(k) + ": spanned " +
            std::to_string(have) + " of " + std::to_string(want);
      break;
    }
  }
  rep.add("generation-full-span", ok, wit);
  return rep;
}

std::vector<GradedElement> compute_center(const AlgebraSpec& spec,
                                          bool extended,
                                          const FormSpec& form) {
  CoreBasis cb = core_basis(spec);
  const DegreeSlice& zero = cb.slice(0);
  std::vector<GradedElement> unknowns;
  for (const auto& b : zero.roots) unknowns.push_back(b.element());
  for (const auto& b : zero.zero) unknowns.push_back(b.element());
  if (extended) unknowns.push_back(central_element());

  auto flat = cb.flat();
  KeyInterner<PosKey> keys;
  // rows indexed by result coordinates, columns by unknowns
  std::map<std::pair<int, int>, SparseRow> eqs;  // (basis idx, key) -> row
  for (size_t u = 0; u < unknowns.size(); ++u) {
    for (size_t b = 0; b < flat.size(); ++b) {
      GradedElement r = extended
                            ? extended_bracket(spec, form, unknowns[u],
                                               flat[b]->element())
                            : loop_bracket(spec, unknowns[u], flat[b]->element());
      for (const auto& [key, val] : vectorize(r, keys))
        append_term(eqs[{static_cast<int>(b), key}],
                    static_cast<int>(u), val);
    }
  }
  RowSpace constraints;
  for (auto& [idx, row] : eqs) constraints.insert(normalize_row(std::move(row)));
  std::vector<GradedElement> center;
  for (const auto& v :
       constraints.kernel_basis(static_cast<int>(unknowns.size()))) {
    GradedElement z;
    for (size_t i = 0; i < unknowns.size(); ++i)
      if (!is_zero(v[i])) z += v[i] * unknowns[i];
    center.push_back(std::move(z));
  }
  return center;
}

VerificationReport center_suite(const AlgebraSpec& spec, const FormSpec& form) {
  VerificationReport rep;
  rep.suite = std::string("center:") + tag_name(spec.tag);
  CoreBasis cb = core_basis(spec);

  auto plain = compute_center(spec, false, form);
  rep.add("center-plain-zero", plain.empty(),
          "plain loop center has dim " + std::to_string(plain.size()));

  auto ext = compute_center(spec, true, form);
  bool ok = ext.size() == 1;
  if (ok) {
    GradedElement z = ext[0];
    Rational s = z.c;
    ok = !is_zero(s) && (Rational(1) / s) * z == central_element();
  }
  rep.add("center-extended-Fc", ok,
          "extended center is not exactly span{c}");

  // (dagger2): [L_0^m, L_0^{-m}] spans the center for every m != 0.
  {
    bool ok2 = true;
    std::string wit;
    for (int m = 1; m <= spec.window && ok2; ++m) {
      KeyInterner<PosKey> keys;
      RowSpace span;
      const auto& sm = cb.slice(m).zero;
      const auto& sn = cb.slice(-m).zero;
      for (const auto& a : sm)
        for (const auto& b : sn)
          span.insert(vectorize(
              extended_bracket(spec, form, a.element(), b.element()), keys));
      KeyInterner<PosKey>& kk = keys;
      RowSpace target = span;
      bool grew = target.insert(vectorize(central_element(), kk));
      if (span.rank() != 1 || grew) {
        ok2 = false;
        wit = "degree " + std::to_string(m) + ": bracket span != Fc";
      }
    }
    rep.add("dagger2-witness", ok2, wit);
  }

  // (dagger3): dim of sum_m [L_mu^m, L_{-mu}^{-m}] is 2 extended, 1 plain.
  {
    const BasisVector& mu = cb.slice(0).roots.front();
    auto dim_of = [&](bool extended2) {
      KeyInterner<PosKey> keys;
      RowSpace span;
      for (int m = -spec.window; m <= spec.window; ++m) {
        const BasisVector* x = cb.slice(m).find_root(mu.w);
        const BasisVector* y = cb.slice(-m).find_root(-mu.w);
        if (x == nullptr || y == nullptr) continue;
        GradedElement r = extended2
                              ? extended_bracket(spec, form, x->element(),
                                                 y->element())
                              : loop_bracket(spec, x->element(), y->element());
        span.insert(vectorize(r, keys));
      }
      return span.rank();
    };
    int d_ext = dim_of(true), d_plain = dim_of(false);
    rep.add("dagger3-dichotomy", d_ext == 2 && d_plain == 1,
            "dims (extended, plain) = (" + std::to_string(d_ext) + ", " +
                std::to_string(d_plain) + ")");
  }

  // t_delta lies in the computed center of the extended core.
  {
    GradedElement td = t_xi(spec, form, Weight{}, 1);
    bool ok3 = !ext.empty();
    if (ok3) {
      KeyInterner<PosKey> keys;
      RowSpace span;
      for (const auto& z : ext) span.insert(vectorize(z, keys));
      ok3 = !span.insert(vectorize(td, keys));
    }
    rep.add("t-delta-central", ok3, "t_delta outside the computed center");
  }
  return rep;
}

VerificationReport twist_suite(int rank, int window) {
  VerificationReport rep;
  rep.suite = "twist";
  struct Case {
    AlgebraSpec ambient;
    TwistKind kind;
    const char* name;
  };
  std::vector<Case> cases = {
      {{LoopTag::A1, 2 * rank, window}, TwistKind::SigmaC, "A1->C2"},
      {{LoopTag::A1, 2 * rank + 1, window}, TwistKind::SigmaB, "A1->BC2"},
      {{LoopTag::D1, rank + 1, window}, TwistKind::Tau, "D1->B2"},
  };
  for (const auto& cs : cases) {
    FixedAlgebra fa = fixed_algebra(cs.ambient, cs.kind);
    CoreBasis direct = core_basis(fa.twisted);
    bool ok = true;
    std::string wit;
    for (const auto& [k, d] : fa.dims) {
      int want = direct.slice(k).dim();
      if (d != want) {
        ok = false;
        wit = std::string(cs.name) + " degree " + std::to_string(k) +
              ": fixed dim " + std::to_string(d) + " direct dim " +
              std::to_string(want);
        break;
      }
    }
    rep.add(std::string("twist-dims-") + cs.name, ok, wit);

    // involutivity and the degree-0 comparison with the fixed simple algebra
    {
      CoreBasis amb = core_basis(cs.ambient);
      bool ok2 = true;
      std::string wit2;
      for (const auto* b : amb.flat()) {
        GradedElement e = b->element();
        if (!(hat_twist(cs.ambient, cs.kind, hat_twist(cs.ambient, cs.kind, e)) ==
              e)) {
          ok2 = false;
          wit2 = "twist not involutive on " + b->label;
          break;
        }
      }
      rep.add(std::string("twist-involutive-") + cs.name, ok2, wit2);
    }
  }
  return rep;
}

VerificationReport embedding_suite(LoopTag tag, int rank, int window,
                                   const FormSpec& form) {
  VerificationReport rep;
  rep.suite = std::string("embed:") + tag_name(tag);
  AlgebraSpec src{tag, rank, window};
  AlgebraSpec dst{tag, rank + 1, window};
  Embedding e(src, dst);
  CoreBasis cb = core_basis(src);
  auto flat = cb.flat();
  bool ok = true;
  std::string wit;
  for (const auto* a : flat) {
    for (const auto* b : flat) {
      if (!src.in_window(a->degree + b->degree)) continue;
      GradedElement lhs = embed(
          e, extended_bracket(src, form, a->element(), b->element()));
      GradedElement rhs = extended_bracket(
          dst, form, embed(e, a->element()), embed(e, b->element()));
      if (!(lhs == rhs)) {
        ok = false;
        wit = "bracket does not commute with embedding on " +
              pair_witness(*a, *b);
        break;
      }
      if (!(form_eval(src, form, a->element(), b->element()) ==
            form_eval(dst, form, embed(e, a->element()),
                      embed(e, b->element())))) {
        ok = false;
        wit = "form not restricted along embedding on " + pair_witness(*a, *b);
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("embedding-homomorphism", ok, wit);

  // traces are preserved by zero padding
  {
    bool ok2 = true;
    std::string wit2;
    for (const auto* a : flat) {
      GradedElement img = embed(e, a->element());
      if (!(a->comp.mat.trace() ==
            img.component(a->degree).mat.trace())) {
        ok2 = false;
        wit2 = "trace changed on " + a->label;
        break;
      }
    }
    rep.add("embedding-trace", ok2, wit2);
  }
  return rep;
}

}  // namespace loopforge
