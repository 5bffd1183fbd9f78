#include "loopforge/algebra.hpp"

#include "loopforge/linalg.hpp"

#include <algorithm>
#include <tuple>

namespace loopforge {

const char* tag_name(LoopTag t) {
  switch (t) {
    case LoopTag::A1:
      return "A1";
    case LoopTag::B1:
      return "B1";
    case LoopTag::C1:
      return "C1";
    case LoopTag::D1:
      return "D1";
    case LoopTag::B2:
      return "B2";
    case LoopTag::C2:
      return "C2";
    case LoopTag::BC2:
      return "BC2";
  }
  return "?";
}

LoopTag tag_from_name(const std::string& s) {
  for (LoopTag t : {LoopTag::A1, LoopTag::B1, LoopTag::C1, LoopTag::D1,
                    LoopTag::B2, LoopTag::C2, LoopTag::BC2})
    if (s == tag_name(t)) return t;
  throw DomainError("unknown algebra type '" + s + "'");
}

bool GradedElement::zero() const {
  if (!is_zero(c) || !is_zero(d)) return false;
  for (const auto& [m, a] : dshift)
    if (!is_zero(a)) return false;
  for (const auto& [k, comp] : body)
    if (!comp.zero()) return false;
  return true;
}

void GradedElement::add_component(int k, const Component& comp) {
  if (comp.zero()) return;
  auto [it, inserted] = body.try_emplace(k, comp);
  if (!inserted) {
    it->second += comp;
    if (it->second.zero()) body.erase(it);
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [k, comp] : o.body) add_component(k, comp);
  c += o.c;
  d += o.d;
  for (const auto& [m, a] : o.dshift) {
    auto& v = dshift[m];
    v += a;
    if (is_zero(v)) dshift.erase(m);
  }
  return *this;
}

GradedElement operator-(const GradedElement& a) {
  GradedElement r;
  for (const auto& [k, comp] : a.body) r.body[k] = -comp;
  r.c = -a.c;
  r.d = -a.d;
  for (const auto& [m, v] : a.dshift) r.dshift[m] = -v;
  return r;
}

GradedElement& GradedElement::scale(const Rational& r) {
  if (is_zero(r)) {
    body.clear();
    dshift.clear();
    c = 0;
    d = 0;
    return *this;
  }
  for (auto& [k, comp] : body) comp.scale(r);
  for (auto& [m, v] : dshift) v *= r;
  c *= r;
  d *= r;
  return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  return (a - b).zero();
}

GradedElement make_element(int degree, Component comp) {
  GradedElement x;
  x.add_component(degree, comp);
  return x;
}

GradedElement central_element() {
  GradedElement x;
  x.c = 1;
  return x;
}

GradedElement derivation_element() {
  GradedElement x;
  x.d = 1;
  return x;
}

Component component_bracket(const AlgebraSpec& spec, const Component& a,
                            const Component& b) {
  Component r;
  r.mat = mat_bracket(a.mat, b.mat);
  if (spec.tag == LoopTag::B2 && (!a.vec.zero() || !b.vec.zero())) {
    StructuralS s(SType::B, spec.universe());
    if (!a.vec.zero() && !b.vec.zero()) r.mat += d_operator(s, a.vec, b.vec);
    r.vec = mat_vec(a.mat, b.vec) - mat_vec(b.mat, a.vec);
  }
  return r;
}

namespace {

// {(0, d)} followed by the shifted-derivation coefficients.
std::vector<std::pair<int, Rational>> witt_parts(const GradedElement& x) {
  std::vector<std::pair<int, Rational>> out;
  if (!is_zero(x.d)) out.emplace_back(0, x.d);
  for (const auto& [m, a] : x.dshift)
    if (!is_zero(a)) out.emplace_back(m, a);
  return out;
}

void require_window(const AlgebraSpec& spec, int k, const char* what) {
  if (!spec.in_window(k))
    throw WindowOverflow(std::string(what) + ": degree " + std::to_string(k) +
                             " outside window " + std::to_string(spec.window),
                         k);
}

}  // namespace

GradedElement loop_bracket(const AlgebraSpec& spec, const GradedElement& x,
                           const GradedElement& y) {
  GradedElement r;
  for (const auto& [k1, c1] : x.body) {
    if (c1.zero()) continue;
    for (const auto& [k2, c2] : y.body) {
      if (c2.zero()) continue;
      require_window(spec, k1 + k2, "bracket");
      r.add_component(k1 + k2, component_bracket(spec, c1, c2));
    }
  }
  // d0 and shifted degree derivations act on the body.
  auto act = [&](const std::vector<std::pair<int, Rational>>& ops,
                 const GradedElement& target, const Rational& sign) {
    for (const auto& [m, a] : ops)
      for (const auto& [k, comp] : target.body) {
        if (k == 0 || comp.zero()) continue;
        require_window(spec, k + m, "derivation action");
        r.add_component(k + m, (sign * a * Rational(k)) * comp);
      }
  };
  auto wx = witt_parts(x), wy = witt_parts(y);
  act(wx, y, Rational(1));
  act(wy, x, Rational(-1));
  // [s_m d0, s_n d0] = (n - m) s_{m+n} d0
  for (const auto& [m, a] : wx)
    for (const auto& [n, b] : wy) {
      Rational v = a * b * Rational(n - m);
      if (is_zero(v)) continue;
      require_window(spec, m + n, "derivation bracket");
      if (m + n == 0) {
        r.d += v;
      } else {
        auto& slot = r.dshift[m + n];
        slot += v;
        if (is_zero(slot)) r.dshift.erase(m + n);
      }
    }
  return r;
}

GradedElement shift_raw(const AlgebraSpec& spec, int m,
                        const GradedElement& x) {
  GradedElement r;
  for (const auto& [k, comp] : x.body) {
    if (comp.zero()) continue;
    require_window(spec, k + m, "shift");
    r.add_component(k + m, comp);
  }
  return r;
}

GradedElement shift(const AlgebraSpec& spec, int m, const GradedElement& x) {
  if (spec.twisted() && m % 2 != 0)
    throw DomainError("odd shift on a twisted algebra changes parity");
  return shift_raw(spec, m, x);
}

bool member(const AlgebraSpec& spec, const GradedElement& x) {
  for (const auto& [k, comp] : x.body) {
    if (!spec.in_window(k)) return false;
    bool mod = spec.module_degree(k);
    if (spec.tag == LoopTag::B2) {
      if (mod && (!comp.mat.zero() || !is_zero(comp.iota))) return false;
      if (!mod && !comp.vec.zero()) return false;
      if (!mod && !is_zero(comp.iota)) return false;
      if (!mod && !in_fixed_algebra(SType::B, comp.mat)) return false;
      continue;
    }
    if (!comp.vec.zero()) return false;
    switch (spec.tag) {
      case LoopTag::A1:
        break;  // whole of gl plus scalars
      case LoopTag::B1:
      case LoopTag::C1:
      case LoopTag::D1: {
        if (!is_zero(comp.iota)) return false;
        if (!in_fixed_algebra(*spec.simple().stype(), comp.mat)) return false;
        break;
      }
      case LoopTag::C2:
      case LoopTag::BC2: {
        SType st = *spec.simple().stype();
        if (!mod) {
          if (!is_zero(comp.iota)) return false;
          if (!in_fixed_algebra(st, comp.mat)) return false;
        } else {
          if (!in_minus_space(st, comp.mat)) return false;
        }
        break;
      }
      default:
        break;
    }
  }
  return true;
}

const BasisVector* DegreeSlice::find_root(const Weight& w) const {
  for (const auto& b : roots)
    if (b.w == w) return &b;
  return nullptr;
}

const DegreeSlice& CoreBasis::slice(int k) const {
  auto it = slices.find(k);
  if (it == slices.end()) throw DomainError("degree outside window");
  return it->second;
}

std::vector<const BasisVector*> CoreBasis::flat() const {
  std::vector<const BasisVector*> out;
  for (const auto& [k, s] : slices) {
    for (const auto& b : s.roots) out.push_back(&b);
    for (const auto& b : s.zero) out.push_back(&b);
  }
  return out;
}

CoreBasis core_basis(const AlgebraSpec& spec) {
  CoreBasis cb;
  cb.spec = spec;
  SimpleType g = spec.simple();
  auto groots = root_basis(g);
  auto gcartan = cartan_basis(g);
  std::vector<ModuleVector> mod;
  if (spec.twisted())
    mod = module_basis(spec.tag == LoopTag::B2 ? ModuleKind::NaturalVector
                                               : ModuleKind::SymmetricPart,
                       g);

  for (int k = -spec.window; k <= spec.window; ++k) {
    DegreeSlice slice;
    slice.degree = k;
    std::string at = "@" + std::to_string(k);
    if (!spec.module_degree(k)) {
      for (const auto& r : groots) {
        BasisVector b;
        b.w = r.w;
        b.degree = k;
        b.comp.mat = r.x;
        b.label = r.label + at;
        slice.roots.push_back(std::move(b));
      }
      int i = 0;
      for (const auto& h : gcartan) {
        BasisVector b;
        b.degree = k;
        b.comp.mat = h.finite_matrix();
        b.label = "h" + std::to_string(++i) + at;
        slice.zero.push_back(std::move(b));
      }
    } else {
      for (const auto& m : mod) {
        BasisVector b;
        b.w = m.w;
        b.degree = k;
        b.comp.mat = m.x;
        b.comp.vec = m.v;
        b.label = m.label + at;
        if (m.w.zero())
          slice.zero.push_back(std::move(b));
        else
          slice.roots.push_back(std::move(b));
      }
    }
    cb.slices[k] = std::move(slice);
  }
  return cb;
}

namespace {

// Leading position of a component: the first stored matrix entry or vector
// index.  The constructed zero-slot bases are triangular with respect to
// these keys, so coordinates can be peeled off sequentially.
struct LeadKey {
  int kind;  // 0 = matrix entry, 1 = vector index
  int a, b;
};

LeadKey lead_of(const Component& comp) {
  if (!comp.mat.zero()) {
    auto ij = comp.mat.entries().begin()->first;
    return {0, ij.first, ij.second};
  }
  if (!comp.vec.zero()) return {1, comp.vec.v.begin()->first, 0};
  throw DomainError("coordinates of a scalar-only component");
}

Rational value_at(const Component& comp, const LeadKey& k) {
  return k.kind == 0 ? comp.mat.at(k.a, k.b) : comp.vec.at(k.a);
}

}  // namespace

std::vector<Rational> zero_slot_coords(const DegreeSlice& slice,
                                       const Component& comp) {
  std::vector<Rational> coords;
  Component rem = comp;
  for (const auto& b : slice.zero) {
    LeadKey k = lead_of(b.comp);
    Rational c = value_at(rem, k) / value_at(b.comp, k);
    coords.push_back(c);
    if (!is_zero(c)) rem += (-c) * b.comp;
  }
  if (!rem.zero())
    throw DomainError("component outside the weight-0 slice span");
  return coords;
}

SliceCoords slice_coords(const DegreeSlice& slice, const Component& comp) {
  SliceCoords sc;
  Component rem = comp;
  // Matrix positions and vector indices have a definite weight, and root
  // vectors of distinct weights have disjoint supports, so each root
  // coefficient can be read off at the root vector's leading position.
  for (const auto& b : slice.roots) {
    LeadKey k = lead_of(b.comp);
    Rational c = value_at(rem, k) / value_at(b.comp, k);
    sc.roots.push_back(c);
    if (!is_zero(c)) rem += (-c) * b.comp;
  }
  sc.zero = zero_slot_coords(slice, rem);
  return sc;
}

namespace {

Mat reuniverse(const Mat& x, IndexUniverse u) {
  Mat r(u);
  for (const auto& [ij, v] : x.entries()) r.set(ij.first, ij.second, v);
  return r;
}

struct TwistSetup {
  IndexUniverse doubled;   // universe on which sigma / tau acts
  AlgebraSpec twisted;     // resulting twisted type
};

TwistSetup twist_setup(const AlgebraSpec& spec, TwistKind kind) {
  switch (kind) {
    case TwistKind::SigmaC: {
      if (spec.tag != LoopTag::A1 || spec.rank % 2 != 0)
        throw DomainError("sigma_C twist: expects A1 of even rank");
      int n = spec.rank / 2;
      return {doubled(n), AlgebraSpec{LoopTag::C2, n, spec.window}};
    }
    case TwistKind::SigmaB: {
      if (spec.tag != LoopTag::A1 || spec.rank % 2 != 1)
        throw DomainError("sigma_B twist: expects A1 of odd rank");
      int n = (spec.rank - 1) / 2;
      return {doubled_plus_one(n), AlgebraSpec{LoopTag::BC2, n, spec.window}};
    }
    case TwistKind::Tau: {
      if (spec.tag != LoopTag::D1)
        throw DomainError("tau twist: expects D1");
      return {doubled(spec.rank),
              AlgebraSpec{LoopTag::B2, spec.rank - 1, spec.window}};
    }
  }
  throw DomainError("twist kind");
}

Mat apply_twist_matrix(TwistKind kind, const IndexUniverse& u, const Mat& x) {
  Mat xd = reuniverse(x, u);
  switch (kind) {
    case TwistKind::SigmaC:
      return sigma(SType::C, xd);
    case TwistKind::SigmaB:
      return sigma(SType::B, xd);
    case TwistKind::Tau:
      return tau(xd);
  }
  return xd;
}

}  // namespace

GradedElement hat_twist(const AlgebraSpec& spec, TwistKind kind,
                        const GradedElement& x) {
  TwistSetup ts = twist_setup(spec, kind);
  GradedElement r;
  r.c = x.c;
  r.d = x.d;
  r.dshift = x.dshift;
  for (const auto& [k, comp] : x.body) {
    Component out;
    Rational sign((k % 2 == 0) ? 1 : -1);
    out.mat = reuniverse(apply_twist_matrix(kind, ts.doubled, comp.mat),
                         spec.universe());
    out.mat.scale(sign);
    // sigma(iota) = -iota in every type; tau fixes iota.
    out.iota = (kind == TwistKind::Tau ? comp.iota : -comp.iota) * sign;
    r.add_component(k, out);
  }
  return r;
}

FixedAlgebra fixed_algebra(const AlgebraSpec& spec, TwistKind kind) {
  TwistSetup ts = twist_setup(spec, kind);
  FixedAlgebra out;
  out.twisted = ts.twisted;
  CoreBasis ambient = core_basis(spec);
  Rational half(1, 2);
  for (const auto& [k, slice] : ambient.slices) {
    std::vector<Component> fixed;
    auto push_projection = [&](const Component& comp) {
      Component p;
      Rational sign((k % 2 == 0) ? 1 : -1);
      Mat tw = reuniverse(apply_twist_matrix(kind, ts.doubled, comp.mat),
                          spec.universe());
      p.mat = half * (comp.mat + sign * tw);
      if (!p.zero()) fixed.push_back(std::move(p));
    };
    for (const auto& b : slice.roots) push_projection(b.comp);
    for (const auto& b : slice.zero) push_projection(b.comp);
    // Keep an independent spanning subset.
    KeyInterner<std::pair<int, int>> keys;
    RowSpace space;
    std::vector<Component> basis;
    for (auto& cand : fixed) {
      SparseRow row;
      for (const auto& [ij, v] : cand.mat.entries())
        append_term(row, keys.id(ij), v);
      if (space.insert(normalize_row(std::move(row))))
        basis.push_back(std::move(cand));
    }
    out.dims[k] = static_cast<int>(basis.size());
    out.basis[k] = std::move(basis);
  }
  return out;
}

Embedding::Embedding(AlgebraSpec s, AlgebraSpec t) : source(s), target(t) {
  if (s.tag != t.tag || t.rank < s.rank || t.window < s.window)
    throw DomainError("embedding: target must extend source");
}

int Embedding::map_index(int i) const {
  IndexUniverse su = source.universe(), tu = target.universe();
  if (su.kind == UniverseKind::Plain) return i;
  if (i <= su.rank) return i;
  if (i <= 2 * su.rank) return tu.rank + (i - su.rank);
  return tu.size();  // the extra index maps to the extra index
}

GradedElement embed(const Embedding& e, const GradedElement& x) {
  GradedElement r;
  r.c = x.c;
  r.d = x.d;
  r.dshift = x.dshift;
  IndexUniverse tu = e.target.universe();
  for (const auto& [k, comp] : x.body) {
    Component out;
    out.iota = comp.iota;
    out.mat = Mat(tu);
    for (const auto& [ij, v] : comp.mat.entries())
      out.mat.set(e.map_index(ij.first), e.map_index(ij.second), v);
    if (!comp.vec.zero()) {
      out.vec = SparseVector(tu);
      for (const auto& [i, v] : comp.vec.v) out.vec.set(e.map_index(i), v);
    }
    r.add_component(k, out);
  }
  return r;
}

}  // namespace loopforge
