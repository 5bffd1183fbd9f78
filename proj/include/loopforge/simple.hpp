#pragma once

#include "loopforge/structural.hpp"
#include "loopforge/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopforge {

enum class SimpleLetter { A, B, C, D };

// Root systems used for classification checks; BC appears only as the
// grading type of the twisted BC construction.
enum class RootSystem { A, B, C, D, BC };

enum class LengthClass { Short, Long, ExtraLong };

// Locally finite split simple Lie algebra at truncation rank n:
//   A: sl_n      on Plain(n),          n >= 2
//   B: o_{2n+1}  on DoubledPlusOne(n), n >= 2
//   C: sp_{2n}   on Doubled(n),        n >= 2
//   D: o_{2n}    on Doubled(n),        n >= 3
struct SimpleType {
  SimpleLetter letter;
  int rank;

  SimpleType(SimpleLetter l, int r) : letter(l), rank(r) {
    int floor = (l == SimpleLetter::D) ? 3 : 2;
    if (r < floor) throw DomainError("simple type: rank below floor");
  }
  IndexUniverse universe() const {
    switch (letter) {
      case SimpleLetter::A:
        return plain(rank);
      case SimpleLetter::B:
        return doubled_plus_one(rank);
      case SimpleLetter::C:
        return doubled(rank);
      case SimpleLetter::D:
        return doubled(rank);
    }
    return {};
  }
  RootSystem root_system() const {
    switch (letter) {
      case SimpleLetter::A:
        return RootSystem::A;
      case SimpleLetter::B:
        return RootSystem::B;
      case SimpleLetter::C:
        return RootSystem::C;
      case SimpleLetter::D:
        return RootSystem::D;
    }
    return RootSystem::A;
  }
  std::optional<SType> stype() const {
    switch (letter) {
      case SimpleLetter::A:
        return std::nullopt;
      case SimpleLetter::B:
        return SType::B;
      case SimpleLetter::C:
        return SType::C;
      case SimpleLetter::D:
        return SType::D;
    }
    return std::nullopt;
  }
};

struct RootVector {
  Weight w;
  Mat x;
  std::string label;
};

// Full list of roots of the given system at the given rank.
std::vector<Weight> roots_of(RootSystem rs, int rank);

// Root-space basis: one matrix per root, satisfying the defining s-relation.
std::vector<RootVector> root_basis(SimpleType t);

// Diagonal Cartan basis (dimension: n-1 for A, n for B/C/D).
std::vector<DiagExt> cartan_basis(SimpleType t);

// Everything together, as the spec's basis_of: roots then Cartan (weight 0).
std::vector<RootVector> basis_of(SimpleType t);

// Length partition.  Short = minimal length; extra long = twice a short
// root of the same system; long = the rest.
LengthClass root_length(RootSystem rs, int rank, const Weight& mu);

// The coroot mu^vee = [e_mu, f_mu], acting on L_nu with the Cartan integer
// <nu, mu>.  Throws DomainError if mu is not a root of t.
DiagExt coroot(SimpleType t, const Weight& mu);

bool is_root(RootSystem rs, int rank, const Weight& mu);

// --- grading modules of the twisted constructions ---

enum class ModuleKind { NaturalVector, SymmetricPart };

struct ModuleVector {
  Weight w;
  Mat x;           // SymmetricPart: matrix in the (-1)-eigenspace of sigma
  SparseVector v;  // NaturalVector: column vector
  std::string label;
};

// NaturalVector: F^(2n+1) over o_{2n+1} (type B gradings).
// SymmetricPart over sp_{2n}: {x in sl_{2n} | s x = x^t s};
// SymmetricPart over o_{2n+1}: {x in sl_{2n+1} | s x = x^t s}.
std::vector<ModuleVector> module_basis(ModuleKind kind, SimpleType g);

// Module action: matrix-vector product for the natural module, commutator
// for the matrix modules.
SparseVector module_action(const Mat& x, const SparseVector& v);
Mat module_action(const Mat& x, const Mat& v);

// Membership in the +-1 eigenspaces of sigma.
bool in_fixed_algebra(SType type, const Mat& x);
bool in_minus_space(SType type, const Mat& x);

}  // namespace loopforge
