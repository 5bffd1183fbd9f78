#pragma once

#include "loopforge/simple.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace loopforge {

enum class LoopTag { A1, B1, C1, D1, B2, C2, BC2 };

const char* tag_name(LoopTag t);
LoopTag tag_from_name(const std::string& s);

// One of the seven locally loop algebras at truncation: rank of the
// underlying simple algebra plus a symmetric degree window |k| <= window.
struct AlgebraSpec {
  LoopTag tag;
  int rank;
  int window;

  bool twisted() const {
    return tag == LoopTag::B2 || tag == LoopTag::C2 || tag == LoopTag::BC2;
  }
  SimpleLetter letter() const {
    switch (tag) {
      case LoopTag::A1:
        return SimpleLetter::A;
      case LoopTag::B1:
      case LoopTag::B2:
      case LoopTag::BC2:
        return SimpleLetter::B;
      case LoopTag::C1:
      case LoopTag::C2:
        return SimpleLetter::C;
      case LoopTag::D1:
        return SimpleLetter::D;
    }
    return SimpleLetter::A;
  }
  SimpleType simple() const { return SimpleType(letter(), rank); }
  IndexUniverse universe() const { return simple().universe(); }
  RootSystem datum_system() const {
    switch (tag) {
      case LoopTag::A1:
        return RootSystem::A;
      case LoopTag::B1:
      case LoopTag::B2:
        return RootSystem::B;
      case LoopTag::C1:
      case LoopTag::C2:
        return RootSystem::C;
      case LoopTag::D1:
        return RootSystem::D;
      case LoopTag::BC2:
        return RootSystem::BC;
    }
    return RootSystem::A;
  }
  bool in_window(int k) const { return k >= -window && k <= window; }
  // Twisted algebras put g at even degrees and the grading module at odd.
  bool module_degree(int k) const { return twisted() && (k % 2 != 0); }
};

// One t-degree slot of an element: a finitary matrix part, an explicit
// iota-scalar part, and (for the type-B twisted module) a vector part.
struct Component {
  Mat mat;
  SparseVector vec;
  Rational iota = 0;

  bool zero() const { return mat.zero() && vec.zero() && is_zero(iota); }
  Component& operator+=(const Component& o) {
    mat += o.mat;
    vec += o.vec;
    iota += o.iota;
    return *this;
  }
  friend Component operator-(const Component& a) {
    return Component{-a.mat, -a.vec, -a.iota};
  }
  Component& scale(const Rational& c) {
    mat.scale(c);
    vec.scale(c);
    iota *= c;
    return *this;
  }
  friend Component operator*(const Rational& c, Component a) {
    a.scale(c);
    return a;
  }
  friend bool operator==(const Component& a, const Component& b) {
    return a.mat == b.mat && a.vec == b.vec && a.iota == b.iota;
  }
};

// Element of (g + T) tensor F[t^{+-1}] + Fc + Fd0 + sum_m F(s_m o d0),
// stored degree by degree.  c is central; d0 acts as the degree derivation;
// dshift[m] is the coefficient of the shifted degree derivation of degree m.
struct GradedElement {
  std::map<int, Component> body;
  Rational c = 0;
  Rational d = 0;
  std::map<int, Rational> dshift;

  bool zero() const;
  Component component(int k) const {
    auto it = body.find(k);
    return it == body.end() ? Component{} : it->second;
  }
  void add_component(int k, const Component& comp);
  GradedElement& operator+=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    a += b;
    return a;
  }
  friend GradedElement operator-(const GradedElement& a);
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    return a + (-b);
  }
  GradedElement& scale(const Rational& r);
  friend GradedElement operator*(const Rational& r, GradedElement a) {
    a.scale(r);
    return a;
  }
  friend bool operator==(const GradedElement& a, const GradedElement& b);
};

GradedElement make_element(int degree, Component comp);
GradedElement central_element();     // c
GradedElement derivation_element();  // d0

// Bracket of two degree slots; degree-independent part of the loop bracket.
// For the type-B twisted algebra this is the four-term rule built from
// D_{v,v'} and the natural action; otherwise the matrix commutator.
Component component_bracket(const AlgebraSpec& spec, const Component& a,
                            const Component& b);

// Degree-wise bracket with d0/shifted-derivation action, no 2-cocycle term.
// Throws WindowOverflow when a nonzero product would leave the window.
GradedElement loop_bracket(const AlgebraSpec& spec, const GradedElement& x,
                           const GradedElement& y);

// Degree translation on the body; central and derivation parts are zeroed.
// Odd shifts on twisted algebras are rejected (they change parity).
GradedElement shift(const AlgebraSpec& spec, int m, const GradedElement& x);
// No parity check; used by the derivation machinery on ambient elements.
GradedElement shift_raw(const AlgebraSpec& spec, int m,
                        const GradedElement& x);

// Membership in the maximal algebra (core plus diagonal complement).
bool member(const AlgebraSpec& spec, const GradedElement& x);

// --- graded core basis ---

struct BasisVector {
  Weight w;
  int degree = 0;
  Component comp;
  std::string label;

  GradedElement element() const { return make_element(degree, comp); }
};

struct DegreeSlice {
  int degree = 0;
  std::vector<BasisVector> roots;  // nonzero weights, one vector each
  std::vector<BasisVector> zero;   // weight-0 basis
  const BasisVector* find_root(const Weight& w) const;
  int dim() const {
    return static_cast<int>(roots.size() + zero.size());
  }
};

struct CoreBasis {
  AlgebraSpec spec;
  std::map<int, DegreeSlice> slices;

  const DegreeSlice& slice(int k) const;
  std::vector<const BasisVector*> flat() const;
};

CoreBasis core_basis(const AlgebraSpec& spec);

// Coordinates of a component in the weight-0 slice basis (exact; throws
// DomainError if the component is outside the span).
std::vector<Rational> zero_slot_coords(const DegreeSlice& slice,
                                       const Component& comp);

// Full decomposition of a component in a slice: one coefficient per root
// slot followed by the weight-0 coordinates.  Exact; throws DomainError if
// the component is outside the slice span.
struct SliceCoords {
  std::vector<Rational> roots;
  std::vector<Rational> zero;
};
SliceCoords slice_coords(const DegreeSlice& slice, const Component& comp);

// --- twisting ---

enum class TwistKind { SigmaB, SigmaC, Tau };

// (-1)^degree sigma, fixing c and d0.  spec must be untwisted over the
// matching universe (A1 of even rank for SigmaC, A1 of odd size for SigmaB,
// D1 for Tau).
GradedElement hat_twist(const AlgebraSpec& spec, TwistKind kind,
                        const GradedElement& x);

struct FixedAlgebra {
  AlgebraSpec twisted;                        // the resulting twisted type
  std::map<int, std::vector<Component>> basis;  // per degree, ambient matrices
  std::map<int, int> dims;
};

// Fixed algebra of the hatted automorphism, computed by projecting the
// ambient core slice by slice.
FixedAlgebra fixed_algebra(const AlgebraSpec& spec, TwistKind kind);

// --- directed-union embeddings ---

struct Embedding {
  AlgebraSpec source;
  AlgebraSpec target;  // same tag, target.rank >= source.rank

  Embedding(AlgebraSpec s, AlgebraSpec t);
  int map_index(int i) const;
};

GradedElement embed(const Embedding& e, const GradedElement& x);

}  // namespace loopforge
